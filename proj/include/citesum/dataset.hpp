#ifndef CITESUM_DATASET_HPP
#define CITESUM_DATASET_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

namespace citesum {

struct SummExample {
  std::string example_id;
  std::string src;  // cited paper's abstract
  std::string tgt;  // normalized citation sentence, exactly one "REF"
  std::string cited_paper_id;
  std::string citing_paper_id;
  std::string title;       // optional, empty when absent
  std::string discipline;  // optional, empty when absent
};

struct SplitRatios {
  double train = 0.90;
  double val = 0.05;
  double test = 0.05;
};

struct DatasetBundle {
  std::vector<SummExample> train;
  std::vector<SummExample> val;
  std::vector<SummExample> test;
  std::uint64_t seed = 0;
  SplitRatios ratios;

  std::size_t size() const { return train.size() + val.size() + test.size(); }
};

/// Group-aware split by cited_paper_id: sorted group keys are shuffled with
/// the seed, then whole groups fill test, then val, remainder train. Whole
/// groups keep val/test cited papers out of train (no label leakage).
DatasetBundle assign_splits(std::vector<SummExample> examples,
                            const SplitRatios& ratios, std::uint64_t seed);

/// One newline-delimited file per split plus meta.json (seed, ratios).
void write_dataset(const DatasetBundle& bundle, const std::filesystem::path& dir);

/// Validates invariants: unique example ids, non-empty src, single REF in tgt,
/// no train/eval cited-paper overlap.
DatasetBundle read_dataset(const std::filesystem::path& dir);

/// Read one split file on its own (schema-checked, no cross-split checks).
std::vector<SummExample> read_examples(const std::filesystem::path& file);
void write_examples(const std::vector<SummExample>& examples,
                    const std::filesystem::path& file);

// --- TF-IDF overlap audit ---

struct Document {
  std::string doc_id;
  std::string text;
};

/// tf = raw count, idf = ln(N/df) + 1 over the audit corpus.
class IdfModel {
 public:
  static IdfModel build(const std::vector<Document>& corpus);
  double idf(const std::string& token) const;
  std::unordered_map<std::string, double> vectorize(const std::string& text) const;

 private:
  std::unordered_map<std::string, double> idf_;
  double default_idf_ = 1.0;  // unseen terms: df -> 0, treated as df = N
};

double tfidf_cosine(const std::string& doc_a, const std::string& doc_b,
                    const IdfModel& idf);

struct OverlapRow {
  std::string doc_id;        // from dataset_b
  std::string best_match_id; // from dataset_a
  double similarity = 0.0;
  bool flagged = false;
};

struct OverlapReport {
  std::vector<OverlapRow> rows;
  double flagged_fraction = 0.0;
};

/// For each b-doc, the max TF-IDF cosine against dataset_a; IDF fitted on the
/// union of both sets.
OverlapReport detect_overlap(const std::vector<Document>& dataset_a,
                             const std::vector<Document>& dataset_b,
                             double threshold = 0.9);

}  // namespace citesum

#endif  // CITESUM_DATASET_HPP

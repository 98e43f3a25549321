#include "citesum/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <unordered_set>

#include "citesum/errors.hpp"
#include "citesum/rng.hpp"
#include "citesum/rouge.hpp"
#include "json.hpp"

namespace citesum {

using nlohmann::json;

DatasetBundle assign_splits(std::vector<SummExample> examples,
                            const SplitRatios& ratios, std::uint64_t seed) {
  if (examples.empty()) throw EmptyInput("no examples to split");
  double sum = ratios.train + ratios.val + ratios.test;
  if (!(ratios.train > 0 && ratios.val > 0 && ratios.test > 0) ||
      std::abs(sum - 1.0) > 1e-9)
    throw DataError("split ratios must be positive and sum to 1");

  std::map<std::string, std::vector<SummExample>> groups;
  for (auto& ex : examples) groups[ex.cited_paper_id].push_back(std::move(ex));

  std::vector<std::string> keys;
  keys.reserve(groups.size());
  for (const auto& [key, group] : groups) keys.push_back(key);  // sorted by map

  SplitMix64 rng(seed);
  seeded_shuffle(keys, rng);

  const double n = static_cast<double>(examples.size());
  DatasetBundle bundle;
  bundle.seed = seed;
  bundle.ratios = ratios;
  // Integer targets: a lone group must stay in train, not be swallowed by an
  // unreachable fractional test quota.
  const auto test_target = static_cast<std::size_t>(std::floor(ratios.test * n));
  const auto val_target = static_cast<std::size_t>(std::floor(ratios.val * n));

  for (const std::string& key : keys) {
    auto& group = groups[key];
    std::vector<SummExample>* dest;
    if (bundle.test.size() < test_target) {
      dest = &bundle.test;
    } else if (bundle.val.size() < val_target) {
      dest = &bundle.val;
    } else {
      dest = &bundle.train;
    }
    for (auto& ex : group) dest->push_back(std::move(ex));
  }
  return bundle;
}

namespace {

json example_to_json(const SummExample& ex) {
  return json{{"example_id", ex.example_id},
              {"src", ex.src},
              {"tgt", ex.tgt},
              {"cited_paper_id", ex.cited_paper_id},
              {"citing_paper_id", ex.citing_paper_id},
              {"title", ex.title},
              {"discipline", ex.discipline}};
}

SummExample example_from_json(const json& doc, std::size_t line_no,
                              const std::filesystem::path& file) {
  if (!doc.is_object())
    throw SchemaViolation(file.string() + ":" + std::to_string(line_no) +
                          ": record is not an object");
  SummExample ex;
  try {
    ex.example_id = doc.at("example_id").get<std::string>();
    ex.src = doc.at("src").get<std::string>();
    ex.tgt = doc.at("tgt").get<std::string>();
    ex.cited_paper_id = doc.at("cited_paper_id").get<std::string>();
    ex.citing_paper_id = doc.at("citing_paper_id").get<std::string>();
    ex.title = doc.value("title", std::string{});
    ex.discipline = doc.value("discipline", std::string{});
  } catch (const json::exception& e) {
    throw SchemaViolation(file.string() + ":" + std::to_string(line_no) + ": " +
                          e.what());
  }
  if (ex.example_id.empty())
    throw SchemaViolation(file.string() + ":" + std::to_string(line_no) +
                          ": empty example_id");
  if (ex.src.empty())
    throw SchemaViolation(file.string() + ":" + std::to_string(line_no) +
                          ": empty src");
  return ex;
}

// Word-boundary count of the REF token.
std::size_t ref_token_count(const std::string& text) {
  std::size_t count = 0;
  for (std::size_t pos = text.find("REF"); pos != std::string::npos;
       pos = text.find("REF", pos + 1)) {
    bool left = pos == 0 || !std::isalnum(static_cast<unsigned char>(text[pos - 1]));
    bool right = pos + 3 == text.size() ||
                 !std::isalnum(static_cast<unsigned char>(text[pos + 3]));
    if (left && right) ++count;
  }
  return count;
}

}  // namespace

void write_examples(const std::vector<SummExample>& examples,
                    const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw IoError("cannot open " + file.string() + " for writing");
  for (const SummExample& ex : examples) out << example_to_json(ex).dump() << '\n';
}

std::vector<SummExample> read_examples(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw IoError("cannot open " + file.string());
  std::vector<SummExample> examples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json doc = json::parse(line, nullptr, false);
    if (doc.is_discarded())
      throw SchemaViolation(file.string() + ":" + std::to_string(line_no) +
                            ": invalid JSON");
    examples.push_back(example_from_json(doc, line_no, file));
  }
  return examples;
}

void write_dataset(const DatasetBundle& bundle, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_examples(bundle.train, dir / "train.jsonl");
  write_examples(bundle.val, dir / "val.jsonl");
  write_examples(bundle.test, dir / "test.jsonl");
  json meta{{"seed", bundle.seed},
            {"ratios", {bundle.ratios.train, bundle.ratios.val, bundle.ratios.test}}};
  std::ofstream out(dir / "meta.json");
  if (!out) throw IoError("cannot write " + (dir / "meta.json").string());
  out << meta.dump(2) << '\n';
}

DatasetBundle read_dataset(const std::filesystem::path& dir) {
  DatasetBundle bundle;
  bundle.train = read_examples(dir / "train.jsonl");
  bundle.val = read_examples(dir / "val.jsonl");
  bundle.test = read_examples(dir / "test.jsonl");

  std::ifstream meta_in(dir / "meta.json");
  if (meta_in) {
    json meta = json::parse(meta_in, nullptr, false);
    if (!meta.is_discarded()) {
      bundle.seed = meta.value("seed", 0ULL);
      if (meta.contains("ratios") && meta["ratios"].size() == 3) {
        bundle.ratios.train = meta["ratios"][0].get<double>();
        bundle.ratios.val = meta["ratios"][1].get<double>();
        bundle.ratios.test = meta["ratios"][2].get<double>();
      }
    }
  }

  std::unordered_set<std::string> ids;
  std::unordered_set<std::string> train_cited;
  for (const auto* split : {&bundle.train, &bundle.val, &bundle.test}) {
    for (const SummExample& ex : *split) {
      if (!ids.insert(ex.example_id).second)
        throw SchemaViolation("duplicated example_id '" + ex.example_id + "'");
      if (ref_token_count(ex.tgt) != 1)
        throw SchemaViolation("example '" + ex.example_id +
                              "' tgt does not contain exactly one REF");
    }
  }
  for (const SummExample& ex : bundle.train) train_cited.insert(ex.cited_paper_id);
  for (const auto* split : {&bundle.val, &bundle.test})
    for (const SummExample& ex : *split)
      if (train_cited.count(ex.cited_paper_id))
        throw SchemaViolation("label leakage: cited paper '" + ex.cited_paper_id +
                              "' appears in train and eval splits");
  return bundle;
}

IdfModel IdfModel::build(const std::vector<Document>& corpus) {
  IdfModel model;
  std::unordered_map<std::string, std::size_t> df;
  for (const Document& doc : corpus) {
    std::unordered_set<std::string> seen;
    for (const std::string& tok : rouge_tokenize(doc.text))
      if (seen.insert(tok).second) ++df[tok];
  }
  const double n = static_cast<double>(corpus.size());
  for (const auto& [tok, count] : df)
    model.idf_[tok] = std::log(n / static_cast<double>(count)) + 1.0;
  return model;
}

double IdfModel::idf(const std::string& token) const {
  auto it = idf_.find(token);
  return it == idf_.end() ? default_idf_ : it->second;
}

std::unordered_map<std::string, double> IdfModel::vectorize(
    const std::string& text) const {
  std::unordered_map<std::string, double> tf;
  for (const std::string& tok : rouge_tokenize(text)) tf[tok] += 1.0;
  for (auto& [tok, weight] : tf) weight *= idf(tok);
  return tf;
}

namespace {

double cosine(const std::unordered_map<std::string, double>& a,
              const std::unordered_map<std::string, double>& b) {
  double dot = 0.0, norm_a = 0.0, norm_b = 0.0;
  for (const auto& [tok, w] : a) norm_a += w * w;
  for (const auto& [tok, w] : b) norm_b += w * w;
  if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
  const auto& small = a.size() <= b.size() ? a : b;
  const auto& large = a.size() <= b.size() ? b : a;
  for (const auto& [tok, w] : small) {
    auto it = large.find(tok);
    if (it != large.end()) dot += w * it->second;
  }
  return dot / std::sqrt(norm_a * norm_b);
}

}  // namespace

double tfidf_cosine(const std::string& doc_a, const std::string& doc_b,
                    const IdfModel& idf) {
  return cosine(idf.vectorize(doc_a), idf.vectorize(doc_b));
}

OverlapReport detect_overlap(const std::vector<Document>& dataset_a,
                             const std::vector<Document>& dataset_b,
                             double threshold) {
  if (dataset_a.empty()) throw EmptyInput("dataset_a");
  if (dataset_b.empty()) throw EmptyInput("dataset_b");

  std::vector<Document> corpus = dataset_a;
  corpus.insert(corpus.end(), dataset_b.begin(), dataset_b.end());
  IdfModel idf = IdfModel::build(corpus);

  std::vector<std::unordered_map<std::string, double>> a_vecs;
  a_vecs.reserve(dataset_a.size());
  for (const Document& doc : dataset_a) a_vecs.push_back(idf.vectorize(doc.text));

  OverlapReport report;
  std::size_t flagged = 0;
  for (const Document& doc : dataset_b) {
    auto vec = idf.vectorize(doc.text);
    OverlapRow row;
    row.doc_id = doc.doc_id;
    row.best_match_id = dataset_a.front().doc_id;
    row.similarity = cosine(vec, a_vecs.front());
    for (std::size_t i = 1; i < a_vecs.size(); ++i) {
      double sim = cosine(vec, a_vecs[i]);
      if (sim > row.similarity) {
        row.similarity = sim;
        row.best_match_id = dataset_a[i].doc_id;
      }
    }
    row.flagged = row.similarity > threshold;
    if (row.flagged) ++flagged;
    report.rows.push_back(std::move(row));
  }
  report.flagged_fraction =
      static_cast<double>(flagged) / static_cast<double>(dataset_b.size());
  return report;
}

}  // namespace citesum

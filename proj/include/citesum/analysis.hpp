#ifndef CITESUM_ANALYSIS_HPP
#define CITESUM_ANALYSIS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "citesum/corpus.hpp"
#include "citesum/dataset.hpp"

namespace citesum {

struct CorpusStats {
  std::size_t n_train = 0;
  std::size_t n_val = 0;
  std::size_t n_test = 0;
  // whitespace-token word counts over all splits; "REF" counts as a word
  double mean_src_words = 0.0;
  double mean_tgt_words = 0.0;
  std::map<std::string, std::size_t> discipline_histogram;
  // appearances-per-cited-paper -> number of papers with that count
  std::map<std::size_t, std::size_t> citation_histogram;
  std::size_t unique_cited_papers = 0;
  double mean_citations = 0.0;
};

/// First (most relevant) field of study, absent when the list is empty.
std::optional<std::string> top_discipline(const PaperRecord& record);

CorpusStats compute_stats(const DatasetBundle& bundle);

/// Uniform sample without replacement; deterministic per seed.
std::vector<SummExample> sample_for_annotation(const DatasetBundle& bundle,
                                               std::size_t k, std::uint64_t seed);

}  // namespace citesum

#endif  // CITESUM_ANALYSIS_HPP

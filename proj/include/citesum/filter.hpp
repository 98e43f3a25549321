#ifndef CITESUM_FILTER_HPP
#define CITESUM_FILTER_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "citesum/corpus.hpp"
#include "citesum/extraction.hpp"
#include "citesum/rouge.hpp"

namespace citesum {

struct FilterThresholds {
  double r1_recall_min = 0.50;
  double r2_recall_min = 0.20;
  double rl_recall_min = 0.40;
};

// Stage-by-stage accounting; partial stats merge associatively.
struct FunnelStats {
  std::uint64_t total_records = 0;
  std::uint64_t eligible_papers = 0;
  std::uint64_t related_work_papers = 0;
  std::uint64_t single_citation_sentences = 0;
  std::uint64_t short_dropped = 0;
  std::uint64_t unlinked_dropped = 0;
  std::uint64_t filtered_dropped = 0;
  std::uint64_t post_filter_examples = 0;
  // sums of kept-example recalls; means are sums / post_filter_examples
  double r1_recall_sum = 0.0;
  double r2_recall_sum = 0.0;
  double rl_recall_sum = 0.0;

  void merge(const FunnelStats& other);
  double mean_r1_recall() const;
  double mean_r2_recall() const;
  double mean_rl_recall() const;
  std::string to_json() const;
};

/// Conjunctive recall thresholds; recall is denominated by the citation
/// sentence's n-grams (candidate = abstract, reference = normalized text).
std::pair<bool, RougeScore> passes(const CitationSentence& candidate,
                                   const std::string& abstract,
                                   const FilterThresholds& thresholds,
                                   const RougeOptions& rouge_opts = {});

struct ScoredCandidate {
  CitationSentence sentence;
  RougeScore score;
};

/// Filters a candidate batch; drops are counted, never erred.
std::vector<ScoredCandidate> run_filter(std::vector<CitationSentence> candidates,
                                        const AbstractIndex& abstracts,
                                        const FilterThresholds& thresholds,
                                        FunnelStats& stats,
                                        const RougeOptions& rouge_opts = {});

}  // namespace citesum

#endif  // CITESUM_FILTER_HPP

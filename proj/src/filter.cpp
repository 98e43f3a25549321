#include "citesum/filter.hpp"

#include "citesum/errors.hpp"
#include "json.hpp"

namespace citesum {

void FunnelStats::merge(const FunnelStats& other) {
  total_records += other.total_records;
  eligible_papers += other.eligible_papers;
  related_work_papers += other.related_work_papers;
  single_citation_sentences += other.single_citation_sentences;
  short_dropped += other.short_dropped;
  unlinked_dropped += other.unlinked_dropped;
  filtered_dropped += other.filtered_dropped;
  post_filter_examples += other.post_filter_examples;
  r1_recall_sum += other.r1_recall_sum;
  r2_recall_sum += other.r2_recall_sum;
  rl_recall_sum += other.rl_recall_sum;
}

double FunnelStats::mean_r1_recall() const {
  return post_filter_examples ? r1_recall_sum / post_filter_examples : 0.0;
}
double FunnelStats::mean_r2_recall() const {
  return post_filter_examples ? r2_recall_sum / post_filter_examples : 0.0;
}
double FunnelStats::mean_rl_recall() const {
  return post_filter_examples ? rl_recall_sum / post_filter_examples : 0.0;
}

std::string FunnelStats::to_json() const {
  nlohmann::json doc{
      {"total_records", total_records},
      {"eligible_papers", eligible_papers},
      {"related_work_papers", related_work_papers},
      {"single_citation_sentences", single_citation_sentences},
      {"short_dropped", short_dropped},
      {"unlinked_dropped", unlinked_dropped},
      {"filtered_dropped", filtered_dropped},
      {"post_filter_examples", post_filter_examples},
      {"mean_r1_recall", mean_r1_recall()},
      {"mean_r2_recall", mean_r2_recall()},
      {"mean_rl_recall", mean_rl_recall()},
  };
  return doc.dump(2);
}

std::pair<bool, RougeScore> passes(const CitationSentence& candidate,
                                   const std::string& abstract,
                                   const FilterThresholds& thresholds,
                                   const RougeOptions& rouge_opts) {
  if (abstract.empty()) throw EmptyAbstract();
  RougeScore score = score_pair(abstract, candidate.normalized_text, rouge_opts);
  bool keep = score.r1.recall >= thresholds.r1_recall_min &&
              score.r2.recall >= thresholds.r2_recall_min &&
              score.rl.recall >= thresholds.rl_recall_min;
  return {keep, score};
}

std::vector<ScoredCandidate> run_filter(std::vector<CitationSentence> candidates,
                                        const AbstractIndex& abstracts,
                                        const FilterThresholds& thresholds,
                                        FunnelStats& stats,
                                        const RougeOptions& rouge_opts) {
  std::vector<ScoredCandidate> kept;
  for (auto& candidate : candidates) {
    const std::string* abstract = abstracts.find(candidate.cited_paper_id);
    if (!abstract || abstract->empty()) {
      ++stats.unlinked_dropped;
      continue;
    }
    auto [keep, score] = passes(candidate, *abstract, thresholds, rouge_opts);
    if (!keep) {
      ++stats.filtered_dropped;
      continue;
    }
    ++stats.post_filter_examples;
    stats.r1_recall_sum += score.r1.recall;
    stats.r2_recall_sum += score.r2.recall;
    stats.rl_recall_sum += score.rl.recall;
    kept.push_back({std::move(candidate), score});
  }
  return kept;
}

}  // namespace citesum

#include "citesum/analysis.hpp"

#include <cctype>

#include "citesum/errors.hpp"
#include "citesum/rng.hpp"

namespace citesum {

namespace {

std::size_t ws_word_count(const std::string& text) {
  std::size_t count = 0;
  bool in_token = false;
  for (unsigned char c : text) {
    if (std::isspace(c)) {
      in_token = false;
    } else if (!in_token) {
      ++count;
      in_token = true;
    }
  }
  return count;
}

}  // namespace

std::optional<std::string> top_discipline(const PaperRecord& record) {
  if (record.fields_of_study.empty()) return std::nullopt;
  return record.fields_of_study.front();
}

CorpusStats compute_stats(const DatasetBundle& bundle) {
  CorpusStats stats;
  stats.n_train = bundle.train.size();
  stats.n_val = bundle.val.size();
  stats.n_test = bundle.test.size();

  std::map<std::string, std::size_t> citations_per_paper;
  std::size_t src_words = 0, tgt_words = 0, n = 0;
  for (const auto* split : {&bundle.train, &bundle.val, &bundle.test}) {
    for (const SummExample& ex : *split) {
      ++n;
      src_words += ws_word_count(ex.src);
      tgt_words += ws_word_count(ex.tgt);
      if (!ex.discipline.empty()) ++stats.discipline_histogram[ex.discipline];
      ++citations_per_paper[ex.cited_paper_id];
    }
  }
  if (n > 0) {
    stats.mean_src_words = static_cast<double>(src_words) / n;
    stats.mean_tgt_words = static_cast<double>(tgt_words) / n;
  }
  stats.unique_cited_papers = citations_per_paper.size();
  for (const auto& [paper, count] : citations_per_paper)
    ++stats.citation_histogram[count];
  if (!citations_per_paper.empty())
    stats.mean_citations =
        static_cast<double>(n) / static_cast<double>(citations_per_paper.size());
  return stats;
}

std::vector<SummExample> sample_for_annotation(const DatasetBundle& bundle,
                                               std::size_t k, std::uint64_t seed) {
  std::vector<SummExample> pool;
  for (const auto* split : {&bundle.train, &bundle.val, &bundle.test})
    pool.insert(pool.end(), split->begin(), split->end());
  if (k > pool.size()) throw KTooLarge(k, pool.size());
  SplitMix64 rng(seed);
  seeded_shuffle(pool, rng);
  pool.resize(k);
  return pool;
}

}  // namespace citesum

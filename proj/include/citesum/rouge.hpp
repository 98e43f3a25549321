#ifndef CITESUM_ROUGE_HPP
#define CITESUM_ROUGE_HPP

#include <string>
#include <string_view>
#include <vector>

namespace citesum {

struct MetricTriple {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct RougeScore {
  MetricTriple r1;
  MetricTriple r2;
  MetricTriple rl;
};

struct RougeOptions {
  bool stem = false;  // Porter stemming of tokens; off by default
};

/// Lowercased maximal runs of ASCII alphanumerics; everything else separates.
std::vector<std::string> rouge_tokenize(std::string_view text);

/// Porter stemmer over a single lowercase token.
std::string porter_stem(const std::string& word);

/// Clipped multiset n-gram overlap. Zero denominators yield 0.
MetricTriple rouge_n(const std::vector<std::string>& candidate,
                     const std::vector<std::string>& reference, int n);

/// Longest-common-subsequence recall/precision over token lists.
MetricTriple rouge_l(const std::vector<std::string>& candidate,
                     const std::vector<std::string>& reference);

/// Tokenize both texts and compute ROUGE-1/2/L.
RougeScore score_pair(std::string_view candidate, std::string_view reference,
                      const RougeOptions& opts = {});

}  // namespace citesum

#endif  // CITESUM_ROUGE_HPP

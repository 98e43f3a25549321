#include "citesum/rouge.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace citesum {

namespace {

double f_measure(double p, double r) {
  return (p + r > 0.0) ? 2.0 * p * r / (p + r) : 0.0;
}

// n-gram key: tokens joined on a separator that cannot appear inside a token.
std::unordered_map<std::string, int> ngram_counts(
    const std::vector<std::string>& tokens, int n) {
  std::unordered_map<std::string, int> counts;
  if (n <= 0 || tokens.size() < static_cast<std::size_t>(n)) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int k = 1; k < n; ++k) {
      key.push_back('\x1f');
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

}  // namespace

std::vector<std::string> rouge_tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      current.push_back(static_cast<char>(std::tolower(c)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

MetricTriple rouge_n(const std::vector<std::string>& candidate,
                     const std::vector<std::string>& reference, int n) {
  auto cand = ngram_counts(candidate, n);
  auto ref = ngram_counts(reference, n);
  long long cand_total = 0, ref_total = 0, match = 0;
  for (const auto& [key, count] : cand) cand_total += count;
  for (const auto& [key, count] : ref) {
    ref_total += count;
    auto it = cand.find(key);
    if (it != cand.end()) match += std::min(count, it->second);
  }
  MetricTriple t;
  t.precision = cand_total > 0 ? static_cast<double>(match) / cand_total : 0.0;
  t.recall = ref_total > 0 ? static_cast<double>(match) / ref_total : 0.0;
  t.f1 = f_measure(t.precision, t.recall);
  return t;
}

MetricTriple rouge_l(const std::vector<std::string>& candidate,
                     const std::vector<std::string>& reference) {
  const std::size_t n = candidate.size();
  const std::size_t m = reference.size();
  MetricTriple t;
  if (n == 0 || m == 0) return t;
  // Two-row LCS.
  std::vector<int> prev(m + 1, 0), curr(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      if (candidate[i - 1] == reference[j - 1]) {
        curr[j] = prev[j - 1] + 1;
      } else {
        curr[j] = std::max(prev[j], curr[j - 1]);
      }
    }
    std::swap(prev, curr);
  }
  const int lcs = prev[m];
  t.precision = static_cast<double>(lcs) / n;
  t.recall = static_cast<double>(lcs) / m;
  t.f1 = f_measure(t.precision, t.recall);
  return t;
}

RougeScore score_pair(std::string_view candidate, std::string_view reference,
                      const RougeOptions& opts) {
  auto cand = rouge_tokenize(candidate);
  auto ref = rouge_tokenize(reference);
  if (opts.stem) {
    for (auto& tok : cand) tok = porter_stem(tok);
    for (auto& tok : ref) tok = porter_stem(tok);
  }
  RougeScore score;
  score.r1 = rouge_n(cand, ref, 1);
  score.r2 = rouge_n(cand, ref, 2);
  score.rl = rouge_l(cand, ref);
  return score;
}

}  // namespace citesum

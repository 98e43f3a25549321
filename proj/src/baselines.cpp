#include "citesum/baselines.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "citesum/errors.hpp"
#include "citesum/extraction.hpp"

namespace citesum {

namespace {

std::vector<SentenceSpan> abstract_sentences(std::string_view abstract) {
  auto sentences = segment_sentences(abstract);
  if (sentences.empty()) throw EmptyAbstract();
  return sentences;
}

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

ExtractiveChoice ext_lead(std::string_view abstract) {
  auto sentences = abstract_sentences(abstract);
  return {0, sentences.front().text, Selector::lead, std::nullopt};
}

ExtractiveChoice ext_heuristic(std::string_view abstract) {
  static constexpr std::array<std::string_view, 3> kCues = {
      "propose", "introduce", "in this paper"};
  auto sentences = abstract_sentences(abstract);
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    std::string lower = lowercase(sentences[i].text);
    for (std::string_view cue : kCues) {
      if (lower.find(cue) != std::string::npos)
        return {i, sentences[i].text, Selector::heuristic, std::nullopt};
    }
  }
  auto lead = ext_lead(abstract);
  lead.selector = Selector::heuristic;
  return lead;
}

ExtractiveChoice ext_oracle(std::string_view abstract, std::string_view reference,
                            const RougeOptions& opts) {
  if (reference.empty()) throw EmptyReference();
  auto sentences = abstract_sentences(abstract);
  std::size_t best = 0;
  double best_f1 = -1.0;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    double f1 = score_pair(sentences[i].text, reference, opts).r2.f1;
    if (f1 > best_f1) {
      best_f1 = f1;
      best = i;
    }
  }
  return {best, sentences[best].text, Selector::oracle, best_f1};
}

}  // namespace citesum

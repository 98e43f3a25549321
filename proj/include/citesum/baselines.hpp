#ifndef CITESUM_BASELINES_HPP
#define CITESUM_BASELINES_HPP

#include <optional>
#include <string>
#include <string_view>

#include "citesum/rouge.hpp"

namespace citesum {

enum class Selector { lead, heuristic, oracle };

struct ExtractiveChoice {
  std::size_t sentence_index = 0;
  std::string sentence_text;
  Selector selector = Selector::lead;
  std::optional<double> oracle_score;  // ROUGE-2 F1 of the chosen sentence
};

/// First sentence of the abstract.
ExtractiveChoice ext_lead(std::string_view abstract);

/// First sentence containing "propose", "introduce", or "in this paper"
/// (lowercase substring match); falls back to ext_lead.
ExtractiveChoice ext_heuristic(std::string_view abstract);

/// Abstract sentence with the highest ROUGE-2 F1 against the reference;
/// ties break to the lowest index.
ExtractiveChoice ext_oracle(std::string_view abstract, std::string_view reference,
                            const RougeOptions& opts = {});

}  // namespace citesum

#endif  // CITESUM_BASELINES_HPP

#ifndef CITESUM_EVAL_HPP
#define CITESUM_EVAL_HPP

#include <map>
#include <string>
#include <vector>

#include "citesum/rouge.hpp"

namespace citesum {

struct EvalReport {
  std::string system_name;
  std::size_t n_examples = 0;
  // macro-averaged F1, reported x100
  double r1_f1 = 0.0;
  double r2_f1 = 0.0;
  double rl_f1 = 0.0;
  std::vector<std::pair<std::string, RougeScore>> per_example;  // retained for audits

  std::string to_csv() const;
  std::string to_table() const;  // human-readable aligned table
};

/// Every reference id must have a prediction; missing ids are an error.
EvalReport evaluate_system(const std::map<std::string, std::string>& predictions,
                           const std::map<std::string, std::string>& references,
                           const std::string& system_name = "system",
                           const RougeOptions& opts = {});

}  // namespace citesum

#endif  // CITESUM_EVAL_HPP

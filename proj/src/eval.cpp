#include "citesum/eval.hpp"

#include <cstdio>

#include "citesum/errors.hpp"

namespace citesum {

EvalReport evaluate_system(const std::map<std::string, std::string>& predictions,
                           const std::map<std::string, std::string>& references,
                           const std::string& system_name,
                           const RougeOptions& opts) {
  if (references.empty()) throw EmptyReferenceSet();

  EvalReport report;
  report.system_name = system_name;
  double r1 = 0.0, r2 = 0.0, rl = 0.0;
  for (const auto& [id, reference] : references) {
    auto it = predictions.find(id);
    if (it == predictions.end()) throw MissingPrediction(id);
    RougeScore score = score_pair(it->second, reference, opts);
    r1 += score.r1.f1;
    r2 += score.r2.f1;
    rl += score.rl.f1;
    report.per_example.emplace_back(id, score);
  }
  report.n_examples = references.size();
  const double n = static_cast<double>(report.n_examples);
  report.r1_f1 = 100.0 * r1 / n;
  report.r2_f1 = 100.0 * r2 / n;
  report.rl_f1 = 100.0 * rl / n;
  return report;
}

std::string EvalReport::to_csv() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "system,n_examples,r1_f1,r2_f1,rl_f1\n%s,%zu,%.2f,%.2f,%.2f\n",
                system_name.c_str(), n_examples, r1_f1, r2_f1, rl_f1);
  return buf;
}

std::string EvalReport::to_table() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "%-16s %8s %8s %8s %8s\n%-16s %8zu %8.2f %8.2f %8.2f\n",
                "System", "N", "R-1", "R-2", "R-L", system_name.c_str(),
                n_examples, r1_f1, r2_f1, rl_f1);
  return buf;
}

}  // namespace citesum

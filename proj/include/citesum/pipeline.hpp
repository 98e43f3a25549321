#ifndef CITESUM_PIPELINE_HPP
#define CITESUM_PIPELINE_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "citesum/analysis.hpp"
#include "citesum/dataset.hpp"
#include "citesum/filter.hpp"

namespace citesum {

struct PipelineConfig {
  std::filesystem::path input;    // newline-delimited corpus records
  std::filesystem::path out_dir;  // artifact directory
  FilterThresholds thresholds;
  SplitRatios ratios;
  std::uint64_t seed = 13;
  bool stem = false;
  std::size_t min_sentence_tokens = 5;
  std::vector<std::string> heading_patterns{"related work"};
  double overlap_threshold = 0.9;

  /// Key-value text form ("key = value", one per line).
  std::string to_kv() const;
  static PipelineConfig from_kv_file(const std::filesystem::path& path);
  void apply_kv_line(const std::string& line);
};

struct PipelineResult {
  DatasetBundle bundle;
  FunnelStats funnel;
};

/// Full corpus -> dataset run. Writes train/val/test.jsonl, meta.json,
/// candidates.jsonl, funnel.json, stats CSVs, and a config echo into out_dir.
/// Byte-identical outputs for identical config and input.
PipelineResult run_pipeline(const PipelineConfig& config);

/// Stats CSV emitters shared by `build` and `stats`.
void write_stats_files(const CorpusStats& stats, const std::filesystem::path& dir);

}  // namespace citesum

#endif  // CITESUM_PIPELINE_HPP

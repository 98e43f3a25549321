#include "citesum/pipeline.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "citesum/analysis.hpp"
#include "citesum/errors.hpp"
#include "citesum/extraction.hpp"
#include "json.hpp"

namespace citesum {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct CitedMeta {
  std::string title;
  std::string discipline;
};

}  // namespace

std::string PipelineConfig::to_kv() const {
  std::ostringstream out;
  out << "input = " << input.string() << '\n';
  out << "out_dir = " << out_dir.string() << '\n';
  out << "r1_recall_min = " << fmt_double(thresholds.r1_recall_min) << '\n';
  out << "r2_recall_min = " << fmt_double(thresholds.r2_recall_min) << '\n';
  out << "rl_recall_min = " << fmt_double(thresholds.rl_recall_min) << '\n';
  out << "train_ratio = " << fmt_double(ratios.train) << '\n';
  out << "val_ratio = " << fmt_double(ratios.val) << '\n';
  out << "test_ratio = " << fmt_double(ratios.test) << '\n';
  out << "seed = " << seed << '\n';
  out << "stem = " << (stem ? "true" : "false") << '\n';
  out << "min_sentence_tokens = " << min_sentence_tokens << '\n';
  std::string patterns;
  for (const std::string& p : heading_patterns) {
    if (!patterns.empty()) patterns += '|';
    patterns += p;
  }
  out << "heading_patterns = " << patterns << '\n';
  out << "overlap_threshold = " << fmt_double(overlap_threshold) << '\n';
  return out.str();
}

void PipelineConfig::apply_kv_line(const std::string& raw) {
  std::string line = trim(raw);
  if (line.empty() || line[0] == '#') return;
  std::size_t eq = line.find('=');
  if (eq == std::string::npos)
    throw DataError("config line without '=': " + line);
  std::string key = trim(line.substr(0, eq));
  std::string value = trim(line.substr(eq + 1));

  try {
    if (key == "input") {
      input = value;
    } else if (key == "out_dir") {
      out_dir = value;
    } else if (key == "r1_recall_min") {
      thresholds.r1_recall_min = std::stod(value);
    } else if (key == "r2_recall_min") {
      thresholds.r2_recall_min = std::stod(value);
    } else if (key == "rl_recall_min") {
      thresholds.rl_recall_min = std::stod(value);
    } else if (key == "train_ratio") {
      ratios.train = std::stod(value);
    } else if (key == "val_ratio") {
      ratios.val = std::stod(value);
    } else if (key == "test_ratio") {
      ratios.test = std::stod(value);
    } else if (key == "seed") {
      seed = std::stoull(value);
    } else if (key == "stem") {
      stem = (value == "true" || value == "1");
    } else if (key == "min_sentence_tokens") {
      min_sentence_tokens = std::stoull(value);
    } else if (key == "heading_patterns") {
      heading_patterns.clear();
      std::stringstream ss(value);
      std::string part;
      while (std::getline(ss, part, '|'))
        if (!trim(part).empty()) heading_patterns.push_back(trim(part));
      if (heading_patterns.empty())
        throw DataError("heading_patterns must name at least one pattern");
    } else if (key == "overlap_threshold") {
      overlap_threshold = std::stod(value);
    } else {
      throw DataError("unknown config key '" + key + "'");
    }
  } catch (const std::invalid_argument&) {
    throw DataError("bad value for config key '" + key + "': " + value);
  } catch (const std::out_of_range&) {
    throw DataError("bad value for config key '" + key + "': " + value);
  }
}

PipelineConfig PipelineConfig::from_kv_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  PipelineConfig config;
  std::string line;
  while (std::getline(in, line)) config.apply_kv_line(line);
  return config;
}

void write_stats_files(const CorpusStats& stats, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "lengths.csv");
    if (!out) throw IoError("cannot write lengths.csv");
    out << "# word counts are whitespace tokens; summary counts include the REF token\n";
    out << "metric,value\n";
    out << "n_train," << stats.n_train << '\n';
    out << "n_val," << stats.n_val << '\n';
    out << "n_test," << stats.n_test << '\n';
    out << "mean_src_words," << fmt_double(stats.mean_src_words) << '\n';
    out << "mean_tgt_words," << fmt_double(stats.mean_tgt_words) << '\n';
  }
  {
    std::ofstream out(dir / "disciplines.csv");
    if (!out) throw IoError("cannot write disciplines.csv");
    out << "discipline,examples\n";
    for (const auto& [label, count] : stats.discipline_histogram)
      out << label << ',' << count << '\n';
  }
  {
    std::ofstream out(dir / "citations.csv");
    if (!out) throw IoError("cannot write citations.csv");
    out << "# unique_cited_papers=" << stats.unique_cited_papers
        << " mean_citations=" << fmt_double(stats.mean_citations) << '\n';
    out << "citations,papers\n";
    for (const auto& [citations, papers] : stats.citation_histogram)
      out << citations << ',' << papers << '\n';
  }
}

namespace {

json candidate_to_json(const CitationSentence& c) {
  return json{{"citing_paper_id", c.citing_paper_id},
              {"cited_paper_id", c.cited_paper_id},
              {"raw_text", c.raw_text},
              {"normalized_text", c.normalized_text},
              {"section_heading", c.section_heading},
              {"sentence_index", c.sentence_index}};
}

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& config) {
  // Pass 1: abstract index + per-paper metadata for example assembly.
  AbstractIndex abstracts;
  std::unordered_map<std::string, CitedMeta> meta;
  {
    std::ifstream in(config.input);
    if (!in) throw IoError("cannot open input " + config.input.string());
    RecordReader reader(in);
    PaperRecord record;
    while (reader.next(record)) {
      abstracts.add(record.paper_id, record.abstract);
      CitedMeta m;
      m.title = record.title;
      if (auto d = top_discipline(record)) m.discipline = *d;
      meta.emplace(record.paper_id, std::move(m));
    }
  }
  if (meta.empty()) throw EmptyInput(config.input.string());

  ExtractionOptions ext_opts;
  ext_opts.heading_patterns = config.heading_patterns;
  ext_opts.min_tokens = config.min_sentence_tokens;
  RougeOptions rouge_opts{config.stem};

  std::filesystem::create_directories(config.out_dir);
  std::ofstream candidates_out(config.out_dir / "candidates.jsonl");
  if (!candidates_out) throw IoError("cannot write candidates.jsonl");

  PipelineResult result;
  std::vector<SummExample> examples;
  std::unordered_map<std::string, std::size_t> per_citing_counter;

  // Pass 2: extract and filter, one paper at a time.
  {
    std::ifstream in(config.input);
    if (!in) throw IoError("cannot open input " + config.input.string());
    RecordReader reader(in);
    PaperRecord record;
    while (reader.next(record)) {
      ++result.funnel.total_records;
      if (!is_eligible(record)) continue;
      ++result.funnel.eligible_papers;
      if (locate_related_work(record, config.heading_patterns).empty()) continue;
      ++result.funnel.related_work_papers;

      ExtractionCounts counts;
      auto candidates = extract_candidates(record, abstracts, ext_opts, &counts);
      result.funnel.single_citation_sentences += counts.single_citation_sentences;
      result.funnel.short_dropped += counts.short_dropped;
      result.funnel.unlinked_dropped += counts.unlinked_dropped;

      for (const CitationSentence& c : candidates)
        candidates_out << candidate_to_json(c).dump() << '\n';

      auto kept = run_filter(std::move(candidates), abstracts, config.thresholds,
                             result.funnel, rouge_opts);
      for (auto& scored : kept) {
        SummExample ex;
        std::size_t ordinal = per_citing_counter[scored.sentence.citing_paper_id]++;
        ex.example_id =
            scored.sentence.citing_paper_id + "_" + std::to_string(ordinal);
        const std::string* abstract =
            abstracts.find(scored.sentence.cited_paper_id);
        ex.src = *abstract;
        ex.tgt = scored.sentence.normalized_text;
        ex.cited_paper_id = scored.sentence.cited_paper_id;
        ex.citing_paper_id = scored.sentence.citing_paper_id;
        auto it = meta.find(scored.sentence.cited_paper_id);
        if (it != meta.end()) {
          ex.title = it->second.title;
          ex.discipline = it->second.discipline;
        }
        examples.push_back(std::move(ex));
      }
    }
  }

  result.bundle = assign_splits(std::move(examples), config.ratios, config.seed);
  write_dataset(result.bundle, config.out_dir);

  {
    std::ofstream out(config.out_dir / "funnel.json");
    if (!out) throw IoError("cannot write funnel.json");
    out << result.funnel.to_json() << '\n';
  }
  write_stats_files(compute_stats(result.bundle), config.out_dir);
  {
    std::ofstream out(config.out_dir / "config.txt");
    if (!out) throw IoError("cannot write config.txt");
    out << config.to_kv();
  }
  return result;
}

}  // namespace citesum

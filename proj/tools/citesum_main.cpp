// citesum: build and audit a citation-sentence extreme-summarization dataset.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "citesum/analysis.hpp"
#include "citesum/baselines.hpp"
#include "citesum/corpus.hpp"
#include "citesum/dataset.hpp"
#include "citesum/errors.hpp"
#include "citesum/eval.hpp"
#include "citesum/extraction.hpp"
#include "citesum/filter.hpp"
#include "citesum/pipeline.hpp"
#include "json.hpp"

namespace {

using namespace citesum;
using nlohmann::json;

std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += '"';
  return out;
}

std::vector<Document> load_documents(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<Document> docs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json doc = json::parse(line, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
      throw SchemaViolation(path.string() + ":" + std::to_string(line_no) +
                            ": invalid JSON record");
    Document d;
    d.doc_id = doc.contains("doc_id") ? doc["doc_id"].get<std::string>()
                                      : doc.value("example_id", std::string{});
    d.text = doc.contains("text") ? doc["text"].get<std::string>()
                                  : doc.value("src", std::string{});
    if (d.doc_id.empty() || d.text.empty())
      throw SchemaViolation(path.string() + ":" + std::to_string(line_no) +
                            ": record needs doc_id/text (or example_id/src)");
    docs.push_back(std::move(d));
  }
  return docs;
}

std::vector<CitationSentence> load_candidates(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<CitationSentence> candidates;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json doc = json::parse(line, nullptr, false);
    if (doc.is_discarded())
      throw SchemaViolation(path.string() + ":" + std::to_string(line_no) +
                            ": invalid JSON");
    CitationSentence c;
    c.citing_paper_id = doc.at("citing_paper_id").get<std::string>();
    c.cited_paper_id = doc.at("cited_paper_id").get<std::string>();
    c.raw_text = doc.at("raw_text").get<std::string>();
    c.normalized_text = doc.at("normalized_text").get<std::string>();
    c.section_heading = doc.value("section_heading", std::string{});
    c.sentence_index = doc.value("sentence_index", std::size_t{0});
    candidates.push_back(std::move(c));
  }
  return candidates;
}

AbstractIndex load_abstract_index(const std::filesystem::path& corpus_path) {
  std::ifstream in(corpus_path);
  if (!in) throw IoError("cannot open corpus " + corpus_path.string());
  AbstractIndex index;
  RecordReader reader(in);
  PaperRecord record;
  while (reader.next(record)) index.add(record.paper_id, record.abstract);
  return index;
}

std::map<std::string, std::string> load_id_text(const std::filesystem::path& path,
                                                const char* text_key) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json doc = json::parse(line, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
      throw SchemaViolation(path.string() + ":" + std::to_string(line_no) +
                            ": invalid JSON record");
    out[doc.at("example_id").get<std::string>()] =
        doc.at(text_key).get<std::string>();
  }
  return out;
}

int cmd_build(PipelineConfig& config) {
  auto result = run_pipeline(config);
  std::cout << "funnel:\n" << result.funnel.to_json() << '\n';
  std::cout << "splits: train=" << result.bundle.train.size()
            << " val=" << result.bundle.val.size()
            << " test=" << result.bundle.test.size() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CiteSum-style dataset construction and evaluation toolkit"};
  app.require_subcommand(1);

  // ---- build ----
  PipelineConfig config;
  std::string config_path;
  auto* build = app.add_subcommand("build", "Run the full corpus-to-dataset pipeline");
  build->add_option("--config", config_path, "key = value config file");
  build->add_option("--input", config.input, "newline-delimited corpus records");
  build->add_option("--out", config.out_dir, "output directory");
  build->add_option("--r1-min", config.thresholds.r1_recall_min, "ROUGE-1 recall threshold");
  build->add_option("--r2-min", config.thresholds.r2_recall_min, "ROUGE-2 recall threshold");
  build->add_option("--rl-min", config.thresholds.rl_recall_min, "ROUGE-L recall threshold");
  build->add_option("--train-ratio", config.ratios.train);
  build->add_option("--val-ratio", config.ratios.val);
  build->add_option("--test-ratio", config.ratios.test);
  build->add_option("--seed", config.seed, "seed for all randomness");
  build->add_flag("--stem", config.stem, "Porter-stem ROUGE tokens");
  build->add_option("--min-sentence-tokens", config.min_sentence_tokens);
  build->add_option("--heading", config.heading_patterns,
                    "related-work heading substring (repeatable)");
  build->add_option("--overlap-threshold", config.overlap_threshold);

  // ---- filter ----
  std::string cand_path, corpus_path, out_dir;
  FilterThresholds thresholds;
  bool stem = false;
  auto* filter = app.add_subcommand("filter", "Re-filter an existing candidate file");
  filter->add_option("--candidates", cand_path)->required();
  filter->add_option("--corpus", corpus_path)->required();
  filter->add_option("--out", out_dir)->required();
  filter->add_option("--r1-min", thresholds.r1_recall_min);
  filter->add_option("--r2-min", thresholds.r2_recall_min);
  filter->add_option("--rl-min", thresholds.rl_recall_min);
  filter->add_flag("--stem", stem);

  // ---- split ----
  std::string examples_path;
  SplitRatios ratios;
  std::uint64_t seed = 13;
  auto* split = app.add_subcommand("split", "Group-aware train/val/test split");
  split->add_option("--examples", examples_path)->required();
  split->add_option("--out", out_dir)->required();
  split->add_option("--train-ratio", ratios.train);
  split->add_option("--val-ratio", ratios.val);
  split->add_option("--test-ratio", ratios.test);
  split->add_option("--seed", seed);

  // ---- stats ----
  std::string data_dir;
  auto* stats = app.add_subcommand("stats", "Dataset statistics CSVs");
  stats->add_option("--data", data_dir)->required();
  stats->add_option("--out", out_dir)->required();

  // ---- baseline ----
  std::string selector, pred_path;
  auto* baseline = app.add_subcommand("baseline", "Extractive baseline outputs");
  baseline->add_option("selector", selector, "lead | heuristic | oracle")->required();
  baseline->add_option("--data", data_dir, "split file (jsonl)")->required();
  baseline->add_option("--out", pred_path, "predictions file (jsonl)")->required();
  baseline->add_flag("--stem", stem);

  // ---- eval ----
  std::string refs_path, report_path, system_name = "system";
  auto* eval = app.add_subcommand("eval", "Score predictions against references");
  eval->add_option("--predictions", pred_path)->required();
  eval->add_option("--references", refs_path, "split file (jsonl)")->required();
  eval->add_option("--out", report_path, "report CSV path");
  eval->add_option("--system", system_name);
  eval->add_flag("--stem", stem);

  // ---- overlap ----
  std::string a_path, b_path;
  double overlap_threshold = 0.9;
  auto* overlap = app.add_subcommand("overlap", "TF-IDF cosine near-duplicate audit");
  overlap->add_option("--a", a_path, "reference document set (jsonl)")->required();
  overlap->add_option("--b", b_path, "audited document set (jsonl)")->required();
  overlap->add_option("--threshold", overlap_threshold);
  overlap->add_option("--out", report_path, "report CSV path");

  // ---- sample ----
  std::size_t k = 50;
  auto* sample = app.add_subcommand("sample", "Export an annotation sample sheet");
  sample->add_option("--data", data_dir)->required();
  sample->add_option("--k", k);
  sample->add_option("--seed", seed);
  sample->add_option("--out", report_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (build->parsed()) {
      if (!config_path.empty()) {
        PipelineConfig from_file = PipelineConfig::from_kv_file(config_path);
        // flags given on the command line win over the file
        if (build->count("--input") == 0) config.input = from_file.input;
        if (build->count("--out") == 0) config.out_dir = from_file.out_dir;
        if (build->count("--r1-min") == 0) config.thresholds.r1_recall_min = from_file.thresholds.r1_recall_min;
        if (build->count("--r2-min") == 0) config.thresholds.r2_recall_min = from_file.thresholds.r2_recall_min;
        if (build->count("--rl-min") == 0) config.thresholds.rl_recall_min = from_file.thresholds.rl_recall_min;
        if (build->count("--train-ratio") == 0) config.ratios.train = from_file.ratios.train;
        if (build->count("--val-ratio") == 0) config.ratios.val = from_file.ratios.val;
        if (build->count("--test-ratio") == 0) config.ratios.test = from_file.ratios.test;
        if (build->count("--seed") == 0) config.seed = from_file.seed;
        if (build->count("--stem") == 0) config.stem = from_file.stem;
        if (build->count("--min-sentence-tokens") == 0) config.min_sentence_tokens = from_file.min_sentence_tokens;
        if (build->count("--heading") == 0) config.heading_patterns = from_file.heading_patterns;
        if (build->count("--overlap-threshold") == 0) config.overlap_threshold = from_file.overlap_threshold;
      }
      if (config.input.empty() || config.out_dir.empty()) {
        std::cerr << "build requires --input and --out (or a config file)\n";
        return 1;
      }
      return cmd_build(config);
    }

    if (filter->parsed()) {
      auto candidates = load_candidates(cand_path);
      auto abstracts = load_abstract_index(corpus_path);
      FunnelStats funnel;
      auto kept = run_filter(std::move(candidates), abstracts, thresholds, funnel,
                             RougeOptions{stem});
      std::filesystem::create_directories(out_dir);
      std::ofstream out(std::filesystem::path(out_dir) / "kept.jsonl");
      if (!out) throw IoError("cannot write kept.jsonl");
      for (const auto& scored : kept) {
        json doc{{"citing_paper_id", scored.sentence.citing_paper_id},
                 {"cited_paper_id", scored.sentence.cited_paper_id},
                 {"raw_text", scored.sentence.raw_text},
                 {"normalized_text", scored.sentence.normalized_text},
                 {"section_heading", scored.sentence.section_heading},
                 {"sentence_index", scored.sentence.sentence_index},
                 {"r1_recall", scored.score.r1.recall},
                 {"r2_recall", scored.score.r2.recall},
                 {"rl_recall", scored.score.rl.recall}};
        out << doc.dump() << '\n';
      }
      std::ofstream funnel_out(std::filesystem::path(out_dir) / "funnel.json");
      funnel_out << funnel.to_json() << '\n';
      std::cout << funnel.to_json() << '\n';
      return 0;
    }

    if (split->parsed()) {
      auto examples = read_examples(examples_path);
      auto bundle = assign_splits(std::move(examples), ratios, seed);
      write_dataset(bundle, out_dir);
      std::cout << "train=" << bundle.train.size() << " val=" << bundle.val.size()
                << " test=" << bundle.test.size() << '\n';
      return 0;
    }

    if (stats->parsed()) {
      auto bundle = read_dataset(data_dir);
      write_stats_files(compute_stats(bundle), out_dir);
      return 0;
    }

    if (baseline->parsed()) {
      if (selector != "lead" && selector != "heuristic" && selector != "oracle") {
        std::cerr << "unknown selector '" << selector << "'\n";
        return 1;
      }
      auto sources = load_id_text(data_dir, "src");
      auto references = load_id_text(data_dir, "tgt");
      std::ofstream out(pred_path);
      if (!out) throw IoError("cannot write " + pred_path);
      RougeOptions opts{stem};
      for (const auto& [id, src] : sources) {
        ExtractiveChoice choice;
        if (selector == "lead") {
          choice = ext_lead(src);
        } else if (selector == "heuristic") {
          choice = ext_heuristic(src);
        } else {
          choice = ext_oracle(src, references.at(id), opts);
        }
        out << json{{"example_id", id}, {"prediction", choice.sentence_text}}.dump()
            << '\n';
      }
      return 0;
    }

    if (eval->parsed()) {
      auto predictions = load_id_text(pred_path, "prediction");
      auto references = load_id_text(refs_path, "tgt");
      auto report =
          evaluate_system(predictions, references, system_name, RougeOptions{stem});
      std::cout << report.to_table();
      if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw IoError("cannot write " + report_path);
        out << report.to_csv();
      }
      return 0;
    }

    if (overlap->parsed()) {
      auto a_docs = load_documents(a_path);
      auto b_docs = load_documents(b_path);
      auto report = detect_overlap(a_docs, b_docs, overlap_threshold);
      std::ostream* out = &std::cout;
      std::ofstream file;
      if (!report_path.empty()) {
        file.open(report_path);
        if (!file) throw IoError("cannot write " + report_path);
        out = &file;
      }
      *out << "doc_id,best_match_id,similarity,flagged\n";
      for (const auto& row : report.rows) {
        char sim[32];
        std::snprintf(sim, sizeof(sim), "%.4f", row.similarity);
        *out << row.doc_id << ',' << row.best_match_id << ',' << sim << ','
             << (row.flagged ? "1" : "0") << '\n';
      }
      std::cerr << "flagged fraction: " << report.flagged_fraction << '\n';
      return 0;
    }

    if (sample->parsed()) {
      auto bundle = read_dataset(data_dir);
      auto picked = sample_for_annotation(bundle, k, seed);
      std::ofstream out(report_path);
      if (!out) throw IoError("cannot write " + report_path);
      out << "example_id,src,tgt,rating\n";  // rating: blank, 4-point scale 1-4
      for (const auto& ex : picked)
        out << csv_quote(ex.example_id) << ',' << csv_quote(ex.src) << ','
            << csv_quote(ex.tgt) << ",\n";
      return 0;
    }
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return 1;
}

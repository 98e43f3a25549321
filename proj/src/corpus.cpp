#include "citesum/corpus.hpp"

#include <string>

#include "citesum/errors.hpp"
#include "json.hpp"

namespace citesum {

using nlohmann::json;

namespace {

void validate_paragraph(const Paragraph& par, std::size_t line_no) {
  std::size_t prev_end = 0;
  bool first = true;
  for (const CiteSpan& span : par.cite_spans) {
    if (span.start >= span.end || span.end > par.text.size())
      throw MalformedRecord("cite span [" + std::to_string(span.start) + "," +
                                std::to_string(span.end) +
                                ") outside paragraph of length " +
                                std::to_string(par.text.size()),
                            line_no);
    if (!first && span.start < prev_end)
      throw MalformedRecord("overlapping or unsorted cite spans", line_no);
    if (par.text.compare(span.start, span.end - span.start, span.surface) != 0)
      throw MalformedRecord("cite span surface does not match paragraph text",
                            line_no);
    prev_end = span.end;
    first = false;
  }
}

}  // namespace

PaperRecord parse_record(std::string_view line, std::size_t line_no) {
  json doc = json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object())
    throw MalformedRecord("not a JSON object", line_no);

  PaperRecord record;
  try {
    record.paper_id = doc.at("paper_id").get<std::string>();
    record.title = doc.value("title", std::string{});
    record.abstract = doc.value("abstract", std::string{});

    if (doc.contains("bib_entries")) {
      const json& bib = doc.at("bib_entries");
      if (!bib.is_object()) throw MalformedRecord("bib_entries is not an object", line_no);
      for (const auto& [key, entry] : bib.items()) {
        std::optional<std::string> link;
        if (entry.is_object() && entry.contains("link") && entry["link"].is_string())
          link = entry["link"].get<std::string>();
        record.bib_entries.emplace(key, std::move(link));
      }
    }

    if (doc.contains("body_text")) {
      const json& body = doc.at("body_text");
      if (!body.is_array()) throw MalformedRecord("body_text is not an array", line_no);
      for (const json& p : body) {
        Paragraph par;
        par.section_heading = p.value("section", std::string{});
        par.text = p.value("text", std::string{});
        if (p.contains("cite_spans")) {
          for (const json& s : p.at("cite_spans")) {
            CiteSpan span;
            span.start = s.at("start").get<std::size_t>();
            span.end = s.at("end").get<std::size_t>();
            span.surface = s.value("text", std::string{});
            span.bib_key = s.at("ref_id").get<std::string>();
            par.cite_spans.push_back(std::move(span));
          }
        }
        validate_paragraph(par, line_no);
        for (const CiteSpan& span : par.cite_spans)
          if (!record.bib_entries.count(span.bib_key))
            throw MalformedRecord("cite span references unknown bib key '" +
                                      span.bib_key + "'",
                                  line_no);
        record.body.push_back(std::move(par));
      }
    }

    if (doc.contains("mag_field_of_study") && doc["mag_field_of_study"].is_array())
      for (const json& f : doc["mag_field_of_study"])
        if (f.is_string()) record.fields_of_study.push_back(f.get<std::string>());
  } catch (const json::exception& e) {
    throw MalformedRecord(e.what(), line_no);
  }

  if (record.paper_id.empty()) throw MalformedRecord("empty paper_id", line_no);
  for (const auto& [key, link] : record.bib_entries)
    if (link && !link->empty()) {
      record.has_citation_info = true;
      break;
    }
  return record;
}

std::string serialize_record(const PaperRecord& record) {
  json doc;
  doc["paper_id"] = record.paper_id;
  doc["title"] = record.title;
  doc["abstract"] = record.abstract;
  json body = json::array();
  for (const Paragraph& par : record.body) {
    json spans = json::array();
    for (const CiteSpan& span : par.cite_spans)
      spans.push_back({{"start", span.start},
                       {"end", span.end},
                       {"text", span.surface},
                       {"ref_id", span.bib_key}});
    body.push_back({{"section", par.section_heading},
                    {"text", par.text},
                    {"cite_spans", std::move(spans)}});
  }
  doc["body_text"] = std::move(body);
  json bib = json::object();
  for (const auto& [key, link] : record.bib_entries)
    bib[key] = link ? json{{"link", *link}} : json{{"link", nullptr}};
  doc["bib_entries"] = std::move(bib);
  doc["mag_field_of_study"] = record.fields_of_study;
  return doc.dump();
}

bool is_eligible(const PaperRecord& record) {
  return !record.abstract.empty() && !record.body.empty() &&
         record.has_citation_info;
}

bool RecordReader::next(PaperRecord& out) {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    if (line.empty()) continue;
    out = parse_record(line, line_no_);
    if (!seen_ids_.insert(out.paper_id).second)
      throw MalformedRecord("duplicate paper_id '" + out.paper_id + "'", line_no_);
    return true;
  }
  return false;
}

void AbstractIndex::add(const std::string& paper_id, const std::string& abstract) {
  abstracts_[paper_id] = abstract;
}

const std::string* AbstractIndex::find(const std::string& paper_id) const {
  auto it = abstracts_.find(paper_id);
  return it == abstracts_.end() ? nullptr : &it->second;
}

}  // namespace citesum

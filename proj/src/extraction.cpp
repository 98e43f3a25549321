#include "citesum/extraction.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string>

#include "citesum/errors.hpp"

namespace citesum {

namespace {

constexpr std::array<std::string_view, 11> kAbbreviations = {
    "et al.", "e.g.", "i.e.", "etc.", "Fig.", "Eq.",
    "cf.",    "vs.",  "Dr.",  "Prof.", "No."};

std::string to_lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool is_ws(char c) { return std::isspace(static_cast<unsigned char>(c)); }

// True when text[0..end) ends with an abbreviation at a word boundary.
bool ends_with_abbreviation(std::string_view text, std::size_t end) {
  for (std::string_view abbr : kAbbreviations) {
    if (end < abbr.size()) continue;
    if (text.substr(end - abbr.size(), abbr.size()) != abbr) continue;
    std::size_t before = end - abbr.size();
    if (before == 0 ||
        !std::isalnum(static_cast<unsigned char>(text[before - 1])))
      return true;
  }
  return false;
}

std::size_t count_ws_tokens(std::string_view text) {
  std::size_t count = 0;
  bool in_token = false;
  for (char c : text) {
    if (is_ws(c)) {
      in_token = false;
    } else if (!in_token) {
      ++count;
      in_token = true;
    }
  }
  return count;
}

std::string collapse_ws(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : text) {
    if (is_ws(c)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      out.push_back(c);
      pending_space = false;
    }
  }
  return out;
}

// Word-boundary occurrences of "REF".
std::vector<std::size_t> find_ref_tokens(std::string_view text) {
  std::vector<std::size_t> hits;
  for (std::size_t pos = text.find("REF"); pos != std::string_view::npos;
       pos = text.find("REF", pos + 1)) {
    bool left_ok =
        pos == 0 || !std::isalnum(static_cast<unsigned char>(text[pos - 1]));
    bool right_ok = pos + 3 == text.size() ||
                    !std::isalnum(static_cast<unsigned char>(text[pos + 3]));
    if (left_ok && right_ok) hits.push_back(pos);
  }
  return hits;
}

}  // namespace

std::vector<const Paragraph*> locate_related_work(
    const PaperRecord& record, const std::vector<std::string>& heading_patterns) {
  std::vector<const Paragraph*> matches;
  for (const Paragraph& par : record.body) {
    std::string heading = to_lower(par.section_heading);
    for (const std::string& pattern : heading_patterns) {
      if (heading.find(to_lower(pattern)) != std::string::npos) {
        matches.push_back(&par);
        break;
      }
    }
  }
  return matches;
}

std::vector<SentenceSpan> segment_sentences(std::string_view text) {
  std::vector<SentenceSpan> sentences;
  const std::size_t n = text.size();

  auto emit = [&](std::size_t start, std::size_t end) {
    while (start < end && is_ws(text[start])) ++start;
    while (end > start && is_ws(text[end - 1])) --end;
    if (start < end)
      sentences.push_back(
          {std::string(text.substr(start, end - start)), start, end});
  };

  std::size_t sentence_start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    // A period glued to a bracketed citation marker never terminates.
    if (c == '.' && i + 1 < n && text[i + 1] == '[') continue;
    std::size_t next = i + 1;
    if (next >= n || !is_ws(text[next])) continue;
    while (next < n && is_ws(text[next])) ++next;
    if (next >= n) continue;  // trailing whitespace, handled by final emit
    char follower = text[next];
    if (!std::isupper(static_cast<unsigned char>(follower)) && follower != '[')
      continue;
    if (c == '.' && ends_with_abbreviation(text, i + 1)) continue;
    emit(sentence_start, i + 1);
    sentence_start = next;
    i = next - 1;
  }
  emit(sentence_start, n);
  return sentences;
}

std::string normalize_citation(std::string_view sentence, std::size_t start,
                               std::size_t end) {
  if (start >= end || end > sentence.size())
    throw SpanOutOfBounds("span [" + std::to_string(start) + "," +
                          std::to_string(end) + ") outside sentence of length " +
                          std::to_string(sentence.size()));
  std::string_view pre = sentence.substr(0, start);
  std::string_view post = sentence.substr(end);

  bool space_before = !pre.empty() && is_ws(pre.back());
  while (!pre.empty() && is_ws(pre.back())) pre.remove_suffix(1);
  bool space_after = !post.empty() && is_ws(post.front());
  while (!post.empty() && is_ws(post.front())) post.remove_prefix(1);

  std::string out(pre);
  if (!pre.empty() && space_before) out.push_back(' ');
  out += "REF";
  if (!post.empty() && space_after) out.push_back(' ');
  out += post;
  return out;
}

std::string adapt_style(std::string_view summary, StyleMode mode) {
  if (mode == StyleMode::few_shot_train) {
    std::size_t start = 0;
    while (start < summary.size() && is_ws(summary[start])) ++start;
    std::size_t end = start;
    while (end < summary.size() && !is_ws(summary[end])) ++end;
    if (summary.substr(start, end - start) != "We") return std::string(summary);
    std::string out(summary.substr(0, start));
    out += "This paper REF";
    out += summary.substr(end);
    return out;
  }

  // zero_shot_post
  auto hits = find_ref_tokens(summary);
  std::size_t first_nonws = 0;
  while (first_nonws < summary.size() && is_ws(summary[first_nonws]))
    ++first_nonws;

  std::string out;
  std::size_t cursor = 0;
  for (std::size_t pos : hits) {
    out += summary.substr(cursor, pos - cursor);
    if (pos == first_nonws) out += "This paper";
    cursor = pos + 3;
  }
  out += summary.substr(cursor);
  return collapse_ws(out);
}

std::vector<CitationSentence> extract_candidates(const PaperRecord& record,
                                                 const AbstractIndex& abstracts,
                                                 const ExtractionOptions& opts,
                                                 ExtractionCounts* counts) {
  ExtractionCounts local;
  if (!counts) counts = &local;
  std::vector<CitationSentence> candidates;

  for (const Paragraph* par : locate_related_work(record, opts.heading_patterns)) {
    auto sentences = segment_sentences(par->text);
    for (std::size_t idx = 0; idx < sentences.size(); ++idx) {
      const SentenceSpan& sent = sentences[idx];
      const CiteSpan* only_span = nullptr;
      std::size_t span_count = 0;
      for (const CiteSpan& span : par->cite_spans) {
        if (span.start >= sent.start && span.start < sent.end) {
          ++span_count;
          only_span = &span;
        }
      }
      if (span_count != 1) continue;
      if (only_span->end > sent.end) continue;  // span straddles a sentence break
      ++counts->single_citation_sentences;

      auto bib = record.bib_entries.find(only_span->bib_key);
      if (bib == record.bib_entries.end() || !bib->second || bib->second->empty()) {
        ++counts->unlinked_dropped;
        continue;
      }
      const std::string* cited_abstract = abstracts.find(*bib->second);
      if (!cited_abstract || cited_abstract->empty()) {
        ++counts->unlinked_dropped;
        continue;
      }

      std::string normalized = normalize_citation(
          sent.text, only_span->start - sent.start, only_span->end - sent.start);
      if (count_ws_tokens(normalized) < opts.min_tokens) {
        ++counts->short_dropped;
        continue;
      }

      CitationSentence candidate;
      candidate.citing_paper_id = record.paper_id;
      candidate.cited_paper_id = *bib->second;
      candidate.raw_text = sent.text;
      candidate.normalized_text = std::move(normalized);
      candidate.section_heading = par->section_heading;
      candidate.sentence_index = idx;
      candidates.push_back(std::move(candidate));
    }
  }
  return candidates;
}

}  // namespace citesum

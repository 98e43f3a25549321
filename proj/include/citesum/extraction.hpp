#ifndef CITESUM_EXTRACTION_HPP
#define CITESUM_EXTRACTION_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "citesum/corpus.hpp"

namespace citesum {

struct CitationSentence {
  std::string citing_paper_id;
  std::string cited_paper_id;
  std::string raw_text;
  std::string normalized_text;  // citation span replaced by "REF"
  std::string section_heading;
  std::size_t sentence_index = 0;  // ordinal within its paragraph
};

struct SentenceSpan {
  std::string text;
  std::size_t start = 0;  // offsets into the paragraph text
  std::size_t end = 0;
};

enum class StyleMode { zero_shot_post, few_shot_train };

struct ExtractionOptions {
  std::vector<std::string> heading_patterns{"related work"};
  std::size_t min_tokens = 5;  // whitespace tokens after normalization
};

// Per-paper drop accounting, merged into FunnelStats by the pipeline.
struct ExtractionCounts {
  std::uint64_t single_citation_sentences = 0;
  std::uint64_t short_dropped = 0;
  std::uint64_t unlinked_dropped = 0;
};

/// Paragraphs whose heading contains one of the patterns, case-insensitively.
std::vector<const Paragraph*> locate_related_work(
    const PaperRecord& record,
    const std::vector<std::string>& heading_patterns = {"related work"});

/// Rule-based sentence segmentation: split after . ! ? followed by whitespace
/// and an uppercase letter or '[', guarded by an abbreviation list and by
/// bracketed citation markers (".["). Spans cover all non-whitespace text.
std::vector<SentenceSpan> segment_sentences(std::string_view text);

/// Replace [start,end) with "REF", collapsing adjacent whitespace.
std::string normalize_citation(std::string_view sentence, std::size_t start,
                               std::size_t end);

/// Style transforms applied to normalized summaries.
std::string adapt_style(std::string_view summary, StyleMode mode);

/// Single-citation Related-Work sentences whose cited paper has an abstract.
std::vector<CitationSentence> extract_candidates(
    const PaperRecord& record, const AbstractIndex& abstracts,
    const ExtractionOptions& opts = {}, ExtractionCounts* counts = nullptr);

}  // namespace citesum

#endif  // CITESUM_EXTRACTION_HPP

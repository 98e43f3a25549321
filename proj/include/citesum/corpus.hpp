#ifndef CITESUM_CORPUS_HPP
#define CITESUM_CORPUS_HPP

#include <cstddef>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace citesum {

struct CiteSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string surface;  // equals text[start..end) of the owning paragraph
  std::string bib_key;
};

struct Paragraph {
  std::string section_heading;
  std::string text;
  std::vector<CiteSpan> cite_spans;  // sorted by start, non-overlapping
};

struct PaperRecord {
  std::string paper_id;
  std::string title;
  std::string abstract;
  std::vector<Paragraph> body;
  // bib key -> linked paper id (nullopt when the entry is unlinked)
  std::map<std::string, std::optional<std::string>> bib_entries;
  std::vector<std::string> fields_of_study;  // most relevant first
  bool has_citation_info = false;  // >=1 bib entry with a non-null link
};

/// Parse one newline-delimited corpus record. Unknown fields are ignored;
/// schema or invariant violations throw MalformedRecord carrying line_no.
PaperRecord parse_record(std::string_view line, std::size_t line_no = 0);

/// Inverse of parse_record on valid records (round-trip identity).
std::string serialize_record(const PaperRecord& record);

/// Non-empty abstract, at least one body paragraph, and citation info.
bool is_eligible(const PaperRecord& record);

/// Streams records out of a newline-delimited file, skipping blank lines and
/// enforcing paper_id uniqueness. Constant memory per record.
class RecordReader {
 public:
  explicit RecordReader(std::istream& in) : in_(in) {}

  /// Returns false at end of stream.
  bool next(PaperRecord& out);

  std::size_t line_no() const { return line_no_; }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
  std::unordered_set<std::string> seen_ids_;
};

/// Read-only paper_id -> abstract index shared across extraction workers.
class AbstractIndex {
 public:
  void add(const std::string& paper_id, const std::string& abstract);
  /// Null when the id is unknown; may point at an empty abstract.
  const std::string* find(const std::string& paper_id) const;
  std::size_t size() const { return abstracts_.size(); }

 private:
  std::map<std::string, std::string> abstracts_;
};

}  // namespace citesum

#endif  // CITESUM_CORPUS_HPP

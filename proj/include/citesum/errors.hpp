#ifndef CITESUM_ERRORS_HPP
#define CITESUM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace citesum {

// Data-level failures exit the CLI with code 2; anything else is 3.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

class MalformedRecord : public DataError {
 public:
  MalformedRecord(const std::string& msg, std::size_t line_no)
      : DataError("line " + std::to_string(line_no) + ": " + msg),
        line_no_(line_no) {}
  std::size_t line_no() const { return line_no_; }

 private:
  std::size_t line_no_;
};

class SpanOutOfBounds : public DataError {
 public:
  using DataError::DataError;
};

class EmptyAbstract : public DataError {
 public:
  EmptyAbstract() : DataError("empty abstract") {}
};

class EmptyReference : public DataError {
 public:
  EmptyReference() : DataError("empty reference") {}
};

class EmptyInput : public DataError {
 public:
  explicit EmptyInput(const std::string& what) : DataError("empty input: " + what) {}
};

class MissingPrediction : public DataError {
 public:
  explicit MissingPrediction(const std::string& id)
      : DataError("missing prediction for example id '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

class EmptyReferenceSet : public DataError {
 public:
  EmptyReferenceSet() : DataError("reference set is empty") {}
};

class KTooLarge : public DataError {
 public:
  KTooLarge(std::size_t k, std::size_t n)
      : DataError("sample size " + std::to_string(k) + " exceeds population " +
                  std::to_string(n)) {}
};

class SchemaViolation : public DataError {
 public:
  using DataError::DataError;
};

class IoError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace citesum

#endif  // CITESUM_ERRORS_HPP

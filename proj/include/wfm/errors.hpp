#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wfm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class NotIdempotent : public Error {
 public:
  NotIdempotent(std::size_t row, std::size_t col)
      : Error("matrix is not idempotent at entry (" + std::to_string(row) + "," +
              std::to_string(col) + ")"),
        row_(row),
        col_(col) {}
  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

class MissingData : public Error {
 public:
  using Error::Error;
};

class NotWeakMonad : public Error {
 public:
  using Error::Error;
};

class NotWeakComonad : public Error {
 public:
  using Error::Error;
};

class RegularityRequired : public Error {
 public:
  using Error::Error;
};

class NotAdjunction : public Error {
 public:
  using Error::Error;
};

class NotRetraction : public Error {
 public:
  using Error::Error;
};

class NotMorphism : public Error {
 public:
  using Error::Error;
};

class FrobeniusRequired : public Error {
 public:
  using Error::Error;
};

/// Carries every failed precondition, not just the first.
class PreconditionFailed : public Error {
 public:
  explicit PreconditionFailed(std::vector<std::string> failures)
      : Error(join(failures)), failures_(std::move(failures)) {}
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out = "precondition failed:";
    for (const auto& item : items) out += " " + item + ";";
    return out;
  }
  std::vector<std::string> failures_;
};

class UnknownName : public Error {
 public:
  explicit UnknownName(const std::string& name) : Error("unknown catalog name: " + name) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("parse error at line " + std::to_string(line) + ": " + reason), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class SchemaError : public Error {
 public:
  SchemaError(const std::string& field, const std::string& reason)
      : Error("schema error in field '" + field + "': " + reason), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class NonCanonicalRational : public Error {
 public:
  NonCanonicalRational(const std::string& field, const std::string& text)
      : Error("non-canonical rational \"" + text + "\" in field '" + field + "'"), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace wfm

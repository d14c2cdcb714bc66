#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace activityvec {

// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

inline std::string with_line(const std::string& msg, std::size_t line) {
  if (line == 0) return msg;
  return "line " + std::to_string(line) + ": " + msg;
}

}  // namespace detail

// Input that could not be decoded (malformed JSON, bad CSV row).
// `line()` is 1-based; 0 means the error is not tied to a line.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg, std::size_t line = 0)
      : Error(detail::with_line(msg, line)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Decodable input missing a required field.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& msg, std::size_t line = 0)
      : Error(detail::with_line(msg, line)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A field is present but its value breaks an invariant (count < 1,
// whitespace-padded identifier, negative threshold, ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg, std::size_t line = 0)
      : Error(detail::with_line(msg, line)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Stream-level format problem, e.g. a wrong CSV header.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& msg, std::size_t line = 0)
      : Error(detail::with_line(msg, line)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An operation that needs at least one document got none.
class EmptyCorpusError : public Error {
 public:
  EmptyCorpusError() : Error("corpus is empty") {}
  explicit EmptyCorpusError(const std::string& msg) : Error(msg) {}
};

// Matrix/vector dimensions do not line up.
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string& msg) : Error(msg) {}
};

// A requested document, actor, or graph node does not exist.
class NotFoundError : public Error {
 public:
  explicit NotFoundError(const std::string& msg) : Error(msg) {}
};

// The graph is too small for the requested statistic.
class StatisticsUndefinedError : public Error {
 public:
  explicit StatisticsUndefinedError(const std::string& msg) : Error(msg) {}
};

}  // namespace activityvec

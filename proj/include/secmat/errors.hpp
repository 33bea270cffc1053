#ifndef SECMAT_ERRORS_HPP
#define SECMAT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace secmat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial or document text. Carries the byte offset and the
/// 1-based line/column of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line,
             std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        offset_(offset),
        line_(line),
        column_(column) {}

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that does not make sense: ring mismatch, arity mismatch,
/// non-homogeneous generators, singular matrices and the like.
class SemanticError : public Error {
 public:
  using Error::Error;
};

/// A hypothesis of a theorem-backed operation does not hold for the input.
class PreconditionError : public SemanticError {
 public:
  using SemanticError::SemanticError;
};

/// Random coordinate changes never agreed on a leading-term ideal.
class GenericityError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. This always indicates a bug (or an
/// undetected non-generic coordinate change), never bad user input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// A row of the sectional matrix never vanishes, so the requested
/// reduction number is infinite.
class InfiniteReductionNumber : public Error {
 public:
  InfiniteReductionNumber(int s, int row)
      : Error("reduction number r_" + std::to_string(s) +
              " is infinite: row " + std::to_string(row) +
              " of the sectional matrix never vanishes"),
        s_(s),
        row_(row) {}
  int s() const { return s_; }
  int row() const { return row_; }

 private:
  int s_;
  int row_;
};

}  // namespace secmat

#endif  // SECMAT_ERRORS_HPP

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sandwich {

enum class ErrorCode {
  ParseError,
  NonPositiveExponent,
  InvalidTailStart,
  DomainError,
  DivisionNearZero,
  TableRangeError,
  TableDeclaration,
  UnknownTable,
  UnsupportedComposition,
  SearchExhausted,
  NotDecreasing,
  NotConvergent,
  SandwichGap,
  ReciprocalOfNull,
  VerificationFailed,
  NotSeparated,
  InvalidArgument,
  Io,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// CLI maps codes onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected,
             const std::string& detail)
      : Error(ErrorCode::ParseError, detail),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

class SearchExhausted : public Error {
 public:
  SearchExhausted(long n, const std::string& detail)
      : Error(ErrorCode::SearchExhausted, detail), n_(n) {}
  long n() const noexcept { return n_; }

 private:
  long n_;
};

class SandwichGap : public Error {
 public:
  SandwichGap(double gap, const std::string& detail)
      : Error(ErrorCode::SandwichGap, detail), gap_(gap) {}
  double gap() const noexcept { return gap_; }

 private:
  double gap_;
};

class VerificationFailed : public Error {
 public:
  VerificationFailed(std::string x, std::string observed, const std::string& detail)
      : Error(ErrorCode::VerificationFailed, detail),
        x_(std::move(x)),
        observed_(std::move(observed)) {}
  const std::string& x() const noexcept { return x_; }
  const std::string& observed() const noexcept { return observed_; }

 private:
  std::string x_;
  std::string observed_;
};

}  // namespace sandwich

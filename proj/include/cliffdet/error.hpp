#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cliffdet {

enum class ErrorCode {
  dimension_cap_exceeded,
  signature_mismatch,
  grade_out_of_range,
  index_out_of_range,
  scheme_invalid_for_dimension,
  dimension_unsupported,
  not_invertible,
  syntax_error,
  internal_consistency,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::dimension_cap_exceeded:
    return "dimension-cap-exceeded";
  case ErrorCode::signature_mismatch:
    return "signature-mismatch";
  case ErrorCode::grade_out_of_range:
    return "grade-out-of-range";
  case ErrorCode::index_out_of_range:
    return "index-out-of-range";
  case ErrorCode::scheme_invalid_for_dimension:
    return "scheme-invalid-for-dimension";
  case ErrorCode::dimension_unsupported:
    return "dimension-unsupported";
  case ErrorCode::not_invertible:
    return "not-invertible";
  case ErrorCode::syntax_error:
    return "syntax-error";
  case ErrorCode::internal_consistency:
    return "internal-consistency";
  }
  return "unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

class NotInvertibleError : public Error {
public:
  explicit NotInvertibleError(double det)
      : Error(ErrorCode::not_invertible,
              "determinant " + std::to_string(det) + " is below threshold"),
        det_(det) {}

  double det() const noexcept { return det_; }

private:
  double det_;
};

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t position, const std::string &message)
      : Error(ErrorCode::syntax_error,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace cliffdet

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chordcubic {

enum class ErrorKind {
  zero_denominator,
  division_by_zero,
  malformed_rational,
  not_prime,
  field_mismatch,
  non_invertible_denominator,
  beta_degenerate,
  double_root,
  not_on_curve,
  cross_curve,
  no_unique_line,
  degenerate_line,
  wrong_degree,
  out_of_range,
  zero_triple,
  unknown_subcommand,
};

std::string_view to_string(ErrorKind kind);

/// Rejected input. Every precondition violation in the library surfaces as
/// this type so the CLI can map it to a single exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace chordcubic

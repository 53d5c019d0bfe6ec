#include "chordcubic/error.hpp"

namespace chordcubic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::zero_denominator: return "zero denominator";
    case ErrorKind::division_by_zero: return "division by zero";
    case ErrorKind::malformed_rational: return "malformed rational";
    case ErrorKind::not_prime: return "not prime";
    case ErrorKind::field_mismatch: return "field mismatch";
    case ErrorKind::non_invertible_denominator: return "non-invertible denominator";
    case ErrorKind::beta_degenerate: return "beta degenerate";
    case ErrorKind::double_root: return "double root";
    case ErrorKind::not_on_curve: return "not on curve";
    case ErrorKind::cross_curve: return "cross curve";
    case ErrorKind::no_unique_line: return "no unique line";
    case ErrorKind::degenerate_line: return "degenerate line";
    case ErrorKind::wrong_degree: return "wrong degree";
    case ErrorKind::out_of_range: return "out of range";
    case ErrorKind::zero_triple: return "zero triple";
    case ErrorKind::unknown_subcommand: return "unknown subcommand";
  }
  return "unknown";
}

}  // namespace chordcubic

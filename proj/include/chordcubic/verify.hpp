#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chordcubic/chord.hpp"
#include "chordcubic/curve.hpp"
#include "chordcubic/plane.hpp"

namespace chordcubic {

enum class Status { pass, fail, skipped };

std::string_view to_string(Status s);

/// Outcome of one claim check. A failing report always carries a witness.
struct Report {
  std::string claim;
  Status status = Status::pass;
  std::string witness;
  std::map<std::string, std::int64_t> stats;
  double millis = 0.0;
};

/// Deliberate formula perturbations used by the regression harness. Each
/// check reacts to exactly one of them; `none` runs the real formulas.
enum class Mutation {
  none,
  incidence_v_sign,         // V := bx + x^3 in the chord line
  identity_e_sign,          // e := +8b^3/(a^2 - 4b)
  fibers_translate_sign,    // p + beta := (b/x, +by/x^2)
  flex_drop_gamma,          // flexes mapped without the gamma shift
  quotient_target,          // E' := (-2a, a^2 - 3b)
  degree_translate_negated, // chord through q and -(q + T)
};

/// Claim tags, in suite order.
namespace claims {
inline constexpr const char* chord_incidence = "chord_incidence";
inline constexpr const char* image_cubic_identity = "image_cubic_identity";
inline constexpr const char* hessian_flex_symbolic = "hessian_flex_symbolic";
inline constexpr const char* translation = "translation";
inline constexpr const char* chord_lines = "chord_lines";
inline constexpr const char* fibers = "fibers";
inline constexpr const char* image_curve = "image_curve";
inline constexpr const char* weierstrass_flexes = "weierstrass_flexes";
inline constexpr const char* flex_correspondence = "flex_correspondence";
inline constexpr const char* quotient = "quotient";
inline constexpr const char* degree_remark = "degree_remark";
}  // namespace claims

// Symbolic identities in x, y, a, b.
Report verify_chord_incidence_symbolic(Mutation m = Mutation::none);
Report verify_identity_symbolic(Mutation m = Mutation::none);
/// The Hessian of the image cubic vanishes identically in (a, b) at the
/// image of the non-beta 2-torsion, [0:1:0].
Report verify_hessian_flex_symbolic(Mutation m = Mutation::none);

// Finite-field scans over E(F_p).
Report verify_translation(const CurveParams<Fp>& params);
Report verify_chord_lines(const CurveParams<Fp>& params);
Report verify_fibers(const CurveParams<Fp>& params, Mutation m = Mutation::none);
/// Image points lie on the image cubic, which is smooth and is the unique
/// cubic through them (interpolation degree 3, nullity 1).
Report verify_image_curve(const CurveParams<Fp>& params, unsigned dmax = 8);
Report verify_weierstrass_flexes(const CurveParams<Fp>& params);
Report verify_flex_correspondence(const CurveParams<Fp>& params, Mutation m = Mutation::none);

/// Symbolic 2-isogeny check plus, for each prime where the curve reduces
/// well, equality of point counts of the image cubic and of E'.
Report verify_quotient(const CurveParams<Rational>& params, std::span<const std::uint32_t> primes,
                       Mutation m = Mutation::none);
Report verify_quotient(const CurveParams<Fp>& params, Mutation m = Mutation::none);

/// Fibers and interpolation degree of q -> line(q, q + T) over E(F_p).
struct TranslationChordSummary {
  std::size_t points = 0;
  std::size_t image_size = 0;
  std::size_t max_fiber = 0;
  /// Fibers {w - T, w} with 3w = O (or {w, w + T, w + 2T} when 3T = O):
  /// the finite locus where a line through q and q + T also contains another
  /// translate pair. w = O always contributes the vertical line x = x(T).
  std::size_t exceptional_fibers = 0;
  /// #E(F_p)[3], divided by 3 when 3T = O.
  std::size_t expected_exceptional = 0;
  /// Fibers that are neither singletons nor exceptional.
  std::size_t unexplained_fibers = 0;
  std::optional<InterpolationResult> interpolation;
  std::vector<DualPoint<Fp>> image;
};

TranslationChordSummary translation_chord_summary(const CurvePoint<Fp>& translation,
                                                  unsigned dmax = 8,
                                                  Mutation m = Mutation::none);

/// Degree-1 map with sextic image for a translation of order > 2: fibers are
/// singletons off the 3-torsion locus, whose fiber count must match exactly,
/// and the image needs degree 6 to interpolate. Skipped
/// when p < 101 or no point of that order exists. Throws out_of_range for
/// order <= 2.
Report verify_degree_remark(const CurveParams<Fp>& params, long long order, unsigned dmax = 8,
                            Mutation m = Mutation::none);

/// Every applicable check at (params, p), in fixed claim order.
std::vector<Report> run_full_suite(const CurveParams<Fp>& params, unsigned dmax = 8);

/// Symbolic checks only.
std::vector<Report> run_symbolic_suite();

/// Valid curves drawn from the generator
///   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
/// with a = (state >> 33) mod p, then b from the next draw; invalid pairs are
/// discarded.
std::vector<CurveParams<Fp>> sample_curves(const PrimeField& field, std::size_t count,
                                           std::uint64_t seed);

/// y^2 z - x^3 - a x^2 z - b x z^2 with (U, V, W) read as (X, Y, Z).
template <FieldElement S>
TernaryForm<S> weierstrass_form(const CurveParams<S>& params) {
  using Form = TernaryForm<S>;
  const S& a = params.a();
  const Form X = Form::variable(0, a), Y = Form::variable(1, a), Z = Form::variable(2, a);
  return Y * Y * Z - X * X * X - (X * X * Z).scaled(a) - (X * Z * Z).scaled(params.b());
}

bool all_passed(const std::vector<Report>& reports);

}  // namespace chordcubic

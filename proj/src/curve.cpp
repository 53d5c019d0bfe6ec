#include "chordcubic/curve.hpp"

#include "chordcubic/roots.hpp"

namespace chordcubic {

std::vector<CurvePoint<Fp>> enumerate_points(const CurveParams<Fp>& params) {
  return enumerate_points(params, SquaresTable(params.a().modulus()));
}

std::vector<CurvePoint<Fp>> enumerate_points(const CurveParams<Fp>& params,
                                             const SquaresTable& squares) {
  const PrimeField field = params.a().field();
  if (squares.modulus() != field.modulus()) {
    throw Error(ErrorKind::field_mismatch, "squares table built for a different prime");
  }
  std::vector<CurvePoint<Fp>> out{CurvePoint<Fp>::infinity(params)};
  for (std::uint32_t xv = 0; xv < field.modulus(); ++xv) {
    Fp x = field(xv);
    for (std::uint32_t yv : squares.roots(params.rhs(x).value())) {
      out.push_back(CurvePoint<Fp>::affine(params, x, field(yv)));
    }
  }
  return out;
}

std::vector<CurvePoint<Fp>> three_torsion_flexes(const CurveParams<Fp>& params) {
  std::vector<CurvePoint<Fp>> out;
  for (const auto& q : enumerate_points(params)) {
    if (scalar_mul(3, q).is_infinity()) out.push_back(q);
  }
  return out;
}

std::vector<CurvePoint<Rational>> three_torsion_flexes(const CurveParams<Rational>& params) {
  std::vector<CurvePoint<Rational>> out{CurvePoint<Rational>::infinity(params)};
  const Rational& a = params.a();
  const Rational& b = params.b();
  // 3-division polynomial of y^2 = x^3 + a x^2 + b x.
  std::vector<Rational> psi3{Rational(3), 4 * a, 6 * b, Rational(0), -(b * b)};
  std::vector<std::pair<Rational, unsigned>> roots;
  try {
    roots = roots_in_field(psi3);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::out_of_range) throw;
    return out;  // beyond the search bound
  }
  for (const auto& [x, mult] : roots) {
    auto y = exact_sqrt(params.rhs(x));
    if (!y || y->is_zero()) continue;
    for (const Rational& yy : {-*y, *y}) {
      auto q = CurvePoint<Rational>::affine(params, x, yy);
      if (scalar_mul(3, q).is_infinity()) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end(), canonical_less<Rational>);
  return out;
}

std::optional<CurvePoint<Fp>> find_point_of_order(const CurveParams<Fp>& params, long long n) {
  if (n < 1) return std::nullopt;
  for (const auto& q : enumerate_points(params)) {
    if (point_order(q, n) == n) return q;
  }
  return std::nullopt;
}

}  // namespace chordcubic

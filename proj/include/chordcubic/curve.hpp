#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "chordcubic/projective.hpp"
#include "chordcubic/scalars.hpp"

namespace chordcubic {

/// Coefficients of y^2 z = x^3 + a x^2 z + b x z^2. Only constructible through
/// validate_curve, so every instance satisfies b (a^2 - 4b) != 0.
template <FieldElement S>
class CurveParams {
 public:
  static CurveParams validated(S a, S b) {
    if (b.is_zero()) {
      throw Error(ErrorKind::beta_degenerate, "b = 0: the point (0,0) is singular");
    }
    if ((a * a - b.lift(4) * b).is_zero()) {
      throw Error(ErrorKind::double_root, "a^2 = 4b: x^2 + a x + b has a double root");
    }
    return CurveParams(std::move(a), std::move(b));
  }

  const S& a() const { return a_; }
  const S& b() const { return b_; }
  S zero() const { return a_.lift(0); }
  S one() const { return a_.lift(1); }
  /// f(x) = x^3 + a x^2 + b x.
  S rhs(const S& x) const { return ((x + a_) * x + b_) * x; }

  friend bool operator==(const CurveParams&, const CurveParams&) = default;

 private:
  CurveParams(S a, S b) : a_(std::move(a)), b_(std::move(b)) {}

  S a_;
  S b_;
};

template <FieldElement S>
CurveParams<S> validate_curve(S a, S b) {
  return CurveParams<S>::validated(std::move(a), std::move(b));
}

template <FieldElement S>
bool is_on_curve(const CurveParams<S>& params, const Triple<S>& pt) {
  if (is_zero_triple(pt)) {
    throw Error(ErrorKind::zero_triple, "[0:0:0] is not a projective point");
  }
  const auto& [X, Y, Z] = pt;
  return Y * Y * Z == X * X * X + params.a() * X * X * Z + params.b() * X * Z * Z;
}

/// A point of the curve, stored normalized: [x:y:1] or O = [0:1:0].
template <FieldElement S>
class CurvePoint {
 public:
  static CurvePoint infinity(const CurveParams<S>& params) {
    return CurvePoint(params, params.zero(), params.one(), params.zero());
  }

  static CurvePoint affine(const CurveParams<S>& params, S x, S y) {
    return projective(params, {std::move(x), std::move(y), params.one()});
  }

  /// Throws not_on_curve if the triple does not satisfy the equation.
  static CurvePoint projective(const CurveParams<S>& params, const Triple<S>& pt) {
    if (!is_on_curve(params, pt)) {
      throw Error(ErrorKind::not_on_curve, triple_string(pt) + " is not on the curve");
    }
    Triple<S> n = normalize_point(pt);
    return CurvePoint(params, n[0], n[1], n[2]);
  }

  const CurveParams<S>& params() const { return params_; }
  bool is_infinity() const { return z_.is_zero(); }
  /// Affine coordinates; meaningless for O.
  const S& x() const { return x_; }
  const S& y() const { return y_; }
  Triple<S> coords() const { return {x_, y_, z_}; }

  CurvePoint negated() const {
    if (is_infinity()) return *this;
    return CurvePoint(params_, x_, -y_, z_);
  }

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

 private:
  CurvePoint(CurveParams<S> params, S x, S y, S z)
      : params_(std::move(params)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

  CurveParams<S> params_;
  S x_, y_, z_;
};

template <FieldElement S>
std::string to_string(const CurvePoint<S>& p) {
  return triple_string(p.coords());
}

/// O first, then ascending (x, y).
template <FieldElement S>
bool canonical_less(const CurvePoint<S>& l, const CurvePoint<S>& r) {
  if (l.is_infinity() != r.is_infinity()) return l.is_infinity();
  if (l.is_infinity()) return false;
  if (!(l.x() == r.x())) return l.x() < r.x();
  return l.y() < r.y();
}

template <FieldElement S>
CurvePoint<S> beta_point(const CurveParams<S>& params) {
  return CurvePoint<S>::affine(params, params.zero(), params.zero());
}

/// Chord-tangent addition with O as the identity.
template <FieldElement S>
CurvePoint<S> group_add(const CurvePoint<S>& p, const CurvePoint<S>& q) {
  if (!(p.params() == q.params())) {
    throw Error(ErrorKind::cross_curve, "points lie on different curves");
  }
  const CurveParams<S>& c = p.params();
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;

  S slope;
  if (p.x() == q.x()) {
    // Vertical chord, or tangent at a point with y = 0.
    if ((p.y() + q.y()).is_zero()) return CurvePoint<S>::infinity(c);
    const S& x = p.x();
    slope = (x.lift(3) * x * x + x.lift(2) * c.a() * x + c.b()) / (x.lift(2) * p.y());
  } else {
    slope = (q.y() - p.y()) / (q.x() - p.x());
  }
  S x3 = slope * slope - c.a() - p.x() - q.x();
  S y3 = -(p.y() + slope * (x3 - p.x()));
  return CurvePoint<S>::affine(c, x3, y3);
}

template <FieldElement S>
CurvePoint<S> scalar_mul(long long n, const CurvePoint<S>& p) {
  CurvePoint<S> base = n < 0 ? p.negated() : p;
  unsigned long long k = n < 0 ? 0ULL - static_cast<unsigned long long>(n)
                               : static_cast<unsigned long long>(n);
  CurvePoint<S> acc = CurvePoint<S>::infinity(p.params());
  while (k) {
    if (k & 1) acc = group_add(acc, base);
    k >>= 1;
    if (k) base = group_add(base, base);
  }
  return acc;
}

/// p + beta in closed form: (b/x, -b y / x^2), with O <-> beta.
template <FieldElement S>
CurvePoint<S> translate_by_beta(const CurvePoint<S>& p) {
  const CurveParams<S>& c = p.params();
  if (p.is_infinity()) return beta_point(c);
  if (p.x().is_zero()) return CurvePoint<S>::infinity(c);
  S inv_x = p.x().inv();
  return CurvePoint<S>::affine(c, c.b() * inv_x, -(c.b() * p.y() * inv_x * inv_x));
}

/// O, beta, then (r, 0) for each root r of x^2 + a x + b in the field.
template <FieldElement S>
std::vector<CurvePoint<S>> two_torsion_points(const CurveParams<S>& params) {
  std::vector<CurvePoint<S>> out{CurvePoint<S>::infinity(params), beta_point(params)};
  const S& a = params.a();
  S disc = a * a - a.lift(4) * params.b();
  if (auto s = exact_sqrt(disc)) {
    S half = a.lift(2).inv();
    std::vector<CurvePoint<S>> roots{
        CurvePoint<S>::affine(params, (-a - *s) * half, params.zero()),
        CurvePoint<S>::affine(params, (-a + *s) * half, params.zero())};
    std::sort(roots.begin(), roots.end(), canonical_less<S>);
    out.insert(out.end(), roots.begin(), roots.end());
  }
  return out;
}

/// Smallest n >= 1 with n p = O, searching up to `limit`; 0 if not found.
template <FieldElement S>
long long point_order(const CurvePoint<S>& p, long long limit) {
  CurvePoint<S> acc = p;
  for (long long n = 1; n <= limit; ++n) {
    if (acc.is_infinity()) return n;
    acc = group_add(acc, p);
  }
  return 0;
}

/// All F_p-rational points, O first then ascending (x, y).
std::vector<CurvePoint<Fp>> enumerate_points(const CurveParams<Fp>& params);
std::vector<CurvePoint<Fp>> enumerate_points(const CurveParams<Fp>& params,
                                             const SquaresTable& squares);

/// Points with 3q = O. Over F_p this scans the whole group.
std::vector<CurvePoint<Fp>> three_torsion_flexes(const CurveParams<Fp>& params);
/// Over the rationals: O plus any 3-torsion whose x-coordinate is found by a
/// bounded rational-root search of the 3-division polynomial.
std::vector<CurvePoint<Rational>> three_torsion_flexes(const CurveParams<Rational>& params);

/// First point of exact order n in canonical order, if any.
std::optional<CurvePoint<Fp>> find_point_of_order(const CurveParams<Fp>& params, long long n);

}  // namespace chordcubic

#pragma once

#include <array>
#include <string>
#include <vector>

#include "chordcubic/curve.hpp"
#include "chordcubic/projective.hpp"
#include "chordcubic/scalars.hpp"

namespace chordcubic {

/// A line UX + VY + WZ = 0, stored with its first nonzero coordinate equal
/// to 1.
template <FieldElement S>
class DualPoint {
 public:
  explicit DualPoint(const Triple<S>& coords) : coords_(normalize_line(coords)) {}

  const Triple<S>& coords() const { return coords_; }
  const S& u() const { return coords_[0]; }
  const S& v() const { return coords_[1]; }
  const S& w() const { return coords_[2]; }

  friend bool operator==(const DualPoint&, const DualPoint&) = default;
  friend bool operator<(const DualPoint& l, const DualPoint& r) { return l.coords_ < r.coords_; }

 private:
  Triple<S> coords_;
};

template <FieldElement S>
std::string to_string(const DualPoint<S>& l) {
  return triple_string(l.coords());
}

/// Monomial exponent triple (i, j, k) standing for U^i V^j W^k.
using TernaryExponent = std::array<unsigned, 3>;

/// Homogeneous form of degree d in (U, V, W), stored densely. Monomials are
/// ordered lexicographically descending on (i, j, k), so U^d comes first.
template <RingElement R>
class TernaryForm {
 public:
  TernaryForm(unsigned degree, const R& like)
      : degree_(degree), coeffs_(monomial_count(degree), like.lift(0)) {}

  /// The linear form U, V or W (var = 0, 1, 2).
  static TernaryForm variable(unsigned var, const R& like) {
    TernaryForm f(1, like);
    TernaryExponent e{0, 0, 0};
    e[var] = 1;
    f.set(e, like.lift(1));
    return f;
  }

  static std::size_t monomial_count(unsigned d) { return (d + 1) * (d + 2) / 2; }

  static std::vector<TernaryExponent> monomials(unsigned d) {
    std::vector<TernaryExponent> out;
    for (unsigned i = d + 1; i-- > 0;) {
      for (unsigned j = d - i + 1; j-- > 0;) out.push_back({i, j, d - i - j});
    }
    return out;
  }

  unsigned degree() const { return degree_; }
  const std::vector<R>& coefficients() const { return coeffs_; }
  std::vector<TernaryExponent> monomials() const { return monomials(degree_); }

  const R& coeff(const TernaryExponent& e) const { return coeffs_[index(e)]; }
  void set(const TernaryExponent& e, R value) { coeffs_[index(e)] = std::move(value); }

  bool is_zero() const {
    for (const R& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  R evaluate(const Triple<R>& pt) const {
    R total = pt[0].lift(0);
    std::size_t n = 0;
    for (const auto& e : monomials()) {
      const R& c = coeffs_[n++];
      if (c.is_zero()) continue;
      R t = c;
      for (int var = 0; var < 3; ++var) {
        for (unsigned k = 0; k < e[var]; ++k) t = t * pt[var];
      }
      total = total + t;
    }
    return total;
  }

  /// Partial derivative with respect to U, V or W.
  TernaryForm partial(unsigned var) const {
    if (degree_ == 0) return TernaryForm(0, coeffs_[0]);
    TernaryForm out(degree_ - 1, coeffs_[0]);
    std::size_t n = 0;
    for (auto e : monomials()) {
      const R& c = coeffs_[n++];
      if (e[var] == 0 || c.is_zero()) continue;
      R scaled = c * c.lift(e[var]);
      --e[var];
      out.set(e, out.coeff(e) + scaled);
    }
    return out;
  }

  TernaryForm scaled(const R& s) const {
    TernaryForm out = *this;
    for (R& c : out.coeffs_) c = c * s;
    return out;
  }

  friend TernaryForm operator+(const TernaryForm& l, const TernaryForm& r) {
    l.check_degree(r);
    TernaryForm out = l;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = out.coeffs_[i] + r.coeffs_[i];
    return out;
  }

  friend TernaryForm operator-(const TernaryForm& l, const TernaryForm& r) {
    l.check_degree(r);
    TernaryForm out = l;
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = out.coeffs_[i] - r.coeffs_[i];
    return out;
  }

  friend TernaryForm operator*(const TernaryForm& l, const TernaryForm& r) {
    TernaryForm out(l.degree_ + r.degree_, l.coeffs_[0]);
    const auto lm = l.monomials();
    const auto rm = r.monomials();
    for (std::size_t i = 0; i < lm.size(); ++i) {
      if (l.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < rm.size(); ++j) {
        if (r.coeffs_[j].is_zero()) continue;
        TernaryExponent e{lm[i][0] + rm[j][0], lm[i][1] + rm[j][1], lm[i][2] + rm[j][2]};
        out.set(e, out.coeff(e) + l.coeffs_[i] * r.coeffs_[j]);
      }
    }
    return out;
  }

  friend bool operator==(const TernaryForm&, const TernaryForm&) = default;

 private:
  std::size_t index(const TernaryExponent& e) const {
    unsigned i = e[0], j = e[1];
    if (e[0] + e[1] + e[2] != degree_) {
      throw Error(ErrorKind::wrong_degree, "monomial degree does not match the form");
    }
    // Rows for U-exponents d..i+1 precede, row d-t has t+1 entries.
    std::size_t before = 0;
    for (unsigned t = degree_; t > i; --t) before += degree_ - t + 1;
    return before + (degree_ - i - j);
  }

  void check_degree(const TernaryForm& o) const {
    if (o.degree_ != degree_) throw Error(ErrorKind::wrong_degree, "forms of different degree");
  }

  unsigned degree_;
  std::vector<R> coeffs_;
};

/// Key "UiVjWk" used in serialized coefficient tables.
inline std::string monomial_key(const TernaryExponent& e) {
  return "U" + std::to_string(e[0]) + "V" + std::to_string(e[1]) + "W" + std::to_string(e[2]);
}

/// Two forms of one degree define the same projective curve iff their
/// coefficient vectors are proportional.
template <RingElement R>
bool forms_proportional(const TernaryForm<R>& f, const TernaryForm<R>& g) {
  if (f.degree() != g.degree()) return false;
  const auto& a = f.coefficients();
  const auto& b = g.coefficients();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
    }
  }
  return true;
}

/// Integer content removed, first nonzero coefficient positive.
TernaryForm<Rational> normalize_form(const TernaryForm<Rational>& f);
/// First nonzero coefficient scaled to 1.
TernaryForm<Fp> normalize_form(const TernaryForm<Fp>& f);

/// [y(x^2+b) : bx - x^3 : -2bxy], the chord through (x, y) and its
/// beta-translate. Generic over rings so it also runs on symbols.
template <RingElement R>
Triple<R> chord_line_coordinates(const R& x, const R& y, const R& b) {
  return {y * (x * x + b), b * x - x * x * x, -(x.lift(2) * b * x * y)};
}

/// The chord construction: p maps to the line through p and p + beta. The
/// pair {O, beta} maps to X = 0.
template <FieldElement S>
DualPoint<S> chord_map(const CurvePoint<S>& p) {
  const CurveParams<S>& c = p.params();
  if (p.is_infinity() || p.x().is_zero()) {
    return DualPoint<S>({c.one(), c.zero(), c.zero()});
  }
  return DualPoint<S>(chord_line_coordinates(p.x(), p.y(), c.b()));
}

/// The image cubic with denominators cleared:
///   G = 4b^2 T V^2 - (4b - a^2) W^3 + 2a T W^2 + T^2 W,  T = 2bU - aW.
/// Valid for a = 0, where the slope parameter 2b/a is undefined.
template <RingElement R>
TernaryForm<R> chord_cubic_cleared(const R& a, const R& b) {
  using Form = TernaryForm<R>;
  const Form U = Form::variable(0, a), V = Form::variable(1, a), W = Form::variable(2, a);
  const Form T = U.scaled(a.lift(2) * b) - W.scaled(a);
  const R four_b = a.lift(4) * b;
  return (T * V * V).scaled(four_b * b) - (W * W * W).scaled(four_b - a * a) +
         (T * W * W).scaled(a.lift(2) * a) + T * T * W;
}

template <FieldElement S>
TernaryForm<S> chord_cubic(const CurveParams<S>& params) {
  return normalize_form(chord_cubic_cleared(params.a(), params.b()));
}

/// Coefficients of the image cubic in the shape
///   e (U - mu_inv W) V^2 = W^3 - c1 (U - mu_inv W) W^2 - c2 (U - mu_inv W)^2 W.
template <FieldElement S>
struct CubicInvariants {
  S e, c1, c2, mu_inv;
};

template <FieldElement S>
CubicInvariants<S> cubic_invariants(const CurveParams<S>& params) {
  const S& a = params.a();
  const S& b = params.b();
  const S four_b_minus_a2 = a.lift(4) * b - a * a;
  return {-(a.lift(8) * b * b * b) / (a * a - a.lift(4) * b),
          a.lift(4) * a * b / four_b_minus_a2, a.lift(4) * b * b / four_b_minus_a2,
          a / (a.lift(2) * b)};
}

/// e T' V^2 - W^3 + c1 T' W^2 + c2 T'^2 W with T' = U - mu_inv W.
template <FieldElement S>
TernaryForm<S> invariants_form(const CubicInvariants<S>& inv) {
  using Form = TernaryForm<S>;
  const Form U = Form::variable(0, inv.e), V = Form::variable(1, inv.e),
             W = Form::variable(2, inv.e);
  const Form T = U - W.scaled(inv.mu_inv);
  return (T * V * V).scaled(inv.e) - W * W * W + (T * W * W).scaled(inv.c1) +
         (T * T * W).scaled(inv.c2);
}

/// The line through two distinct projective points. Throws no_unique_line
/// when they coincide.
template <FieldElement S>
DualPoint<S> line_through(const Triple<S>& p, const Triple<S>& q) {
  Triple<S> l = cross(p, q);
  if (is_zero_triple(l)) {
    throw Error(ErrorKind::no_unique_line, triple_string(p) + " and " + triple_string(q) +
                                               " do not span a line");
  }
  return DualPoint<S>(l);
}

}  // namespace chordcubic

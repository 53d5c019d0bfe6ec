#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "chordcubic/scalars.hpp"

namespace chordcubic {

/// The fixed variable set of the symbolic engine.
enum class Var : std::uint8_t { x = 0, y = 1, a = 2, b = 3 };

inline constexpr std::array<Var, 4> kAllVars{Var::x, Var::y, Var::a, Var::b};

/// Exponent vector indexed by Var.
struct Monomial {
  std::array<std::uint32_t, 4> exps{};

  std::uint32_t operator[](Var v) const { return exps[static_cast<std::size_t>(v)]; }
  std::uint32_t& operator[](Var v) { return exps[static_cast<std::size_t>(v)]; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Descending lexicographic order on (e_y, e_x, e_a, e_b).
struct MonomialOrder {
  bool operator()(const Monomial& l, const Monomial& r) const {
    constexpr std::array<Var, 4> keys{Var::y, Var::x, Var::a, Var::b};
    for (Var v : keys) {
      if (l[v] != r[v]) return l[v] > r[v];
    }
    return false;
  }
};

/// Sparse polynomial in x, y, a, b with exact rational coefficients. No zero
/// coefficient is ever stored, so equal polynomials have identical tables.
class MultiPoly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT: constants promote implicitly
  MultiPoly(long long c) : MultiPoly(Rational(c)) {}  // NOLINT

  static MultiPoly variable(Var v);
  static MultiPoly term(const Rational& c, const Monomial& m);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  MultiPoly lift(long long n) const { return MultiPoly(n); }
  std::uint32_t degree_in(Var v) const;
  /// Coefficient of m, zero when absent.
  Rational coefficient(const Monomial& m) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly l, const MultiPoly& r) { return l += r; }
  friend MultiPoly operator-(MultiPoly l, const MultiPoly& r) { return l -= r; }
  friend MultiPoly operator*(const MultiPoly& l, const MultiPoly& r);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly pow(unsigned e) const;

  /// Terms in canonical order, e.g. "y^2 - x^3 - a*x^2 - b*x"; "0" when empty.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

MultiPoly poly_mul(const MultiPoly& lhs, const MultiPoly& rhs);
bool is_zero(const MultiPoly& q);

/// f(x) = x^3 + a x^2 + b x with a, b symbolic.
MultiPoly curve_rhs();

/// Rewrites every y^2 as f(x); the result has y-degree at most 1.
MultiPoly reduce_mod_curve(const MultiPoly& q);

/// Partial substitution of polynomials for variables. Unbound variables stay.
using PolyBindings = std::array<std::optional<MultiPoly>, 4>;
MultiPoly poly_substitute(const MultiPoly& q, const PolyBindings& bindings);

/// Binds selected variables to rationals, e.g. specializing (a, b).
MultiPoly poly_specialize(const MultiPoly& q, std::optional<Rational> x,
                          std::optional<Rational> y, std::optional<Rational> a,
                          std::optional<Rational> b);

/// Full evaluation in the field of the assigned values. For F_p each rational
/// coefficient must have a denominator invertible mod p (else
/// non_invertible_denominator).
template <FieldElement S>
S poly_evaluate(const MultiPoly& q, const std::array<S, 4>& values) {
  const S& like = values[0];
  S total = like.lift(0);
  for (const auto& [m, c] : q.terms()) {
    S t = coerce(c, like);
    for (Var v : kAllVars) {
      for (std::uint32_t k = 0; k < m[v]; ++k) t = t * values[static_cast<std::size_t>(v)];
    }
    total = total + t;
  }
  return total;
}

}  // namespace chordcubic

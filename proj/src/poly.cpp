#include "chordcubic/poly.hpp"

#include <sstream>
#include <vector>

namespace chordcubic {

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::variable(Var v) {
  Monomial m;
  m[v] = 1;
  return term(Rational(1), m);
}

MultiPoly MultiPoly::term(const Rational& c, const Monomial& m) {
  MultiPoly p;
  p.add_term(m, c);
  return p;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::uint32_t MultiPoly::degree_in(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& l, const MultiPoly& r) {
  MultiPoly out;
  for (const auto& [ml, cl] : l.terms_) {
    for (const auto& [mr, cr] : r.terms_) {
      Monomial m;
      for (std::size_t i = 0; i < 4; ++i) m.exps[i] = ml.exps[i] + mr.exps[i];
      out.add_term(m, cl * cr);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  constexpr std::array<std::pair<Var, char>, 4> order{
      {{Var::x, 'x'}, {Var::y, 'y'}, {Var::a, 'a'}, {Var::b, 'b'}}};
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out << "-";
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = m == Monomial{};
    bool wrote = false;
    if (!(mag == Rational(1)) || constant) {
      out << mag.to_string();
      wrote = true;
    }
    for (auto [v, name] : order) {
      if (m[v] == 0) continue;
      if (wrote) out << "*";
      out << name;
      if (m[v] > 1) out << "^" << m[v];
      wrote = true;
    }
  }
  return out.str();
}

MultiPoly poly_mul(const MultiPoly& lhs, const MultiPoly& rhs) { return lhs * rhs; }

bool is_zero(const MultiPoly& q) { return q.is_zero(); }

MultiPoly curve_rhs() {
  MultiPoly x = MultiPoly::variable(Var::x);
  return x.pow(3) + MultiPoly::variable(Var::a) * x.pow(2) + MultiPoly::variable(Var::b) * x;
}

MultiPoly reduce_mod_curve(const MultiPoly& q) {
  const MultiPoly f = curve_rhs();
  std::vector<MultiPoly> f_powers{MultiPoly(1)};
  MultiPoly out;
  for (const auto& [m, c] : q.terms()) {
    std::uint32_t half = m[Var::y] / 2;
    while (f_powers.size() <= half) f_powers.push_back(f_powers.back() * f);
    Monomial rest = m;
    rest[Var::y] = m[Var::y] % 2;
    out += MultiPoly::term(c, rest) * f_powers[half];
  }
  return out;
}

MultiPoly poly_substitute(const MultiPoly& q, const PolyBindings& bindings) {
  // Cache powers of each bound value.
  std::array<std::vector<MultiPoly>, 4> powers;
  for (std::size_t i = 0; i < 4; ++i) {
    if (bindings[i]) powers[i].push_back(MultiPoly(1));
  }
  auto power = [&](std::size_t i, std::uint32_t e) -> const MultiPoly& {
    while (powers[i].size() <= e) powers[i].push_back(powers[i].back() * *bindings[i]);
    return powers[i][e];
  };

  MultiPoly out;
  for (const auto& [m, c] : q.terms()) {
    Monomial kept = m;
    MultiPoly factor(c);
    for (std::size_t i = 0; i < 4; ++i) {
      if (!bindings[i] || m.exps[i] == 0) continue;
      kept.exps[i] = 0;
      factor *= power(i, m.exps[i]);
    }
    out += factor * MultiPoly::term(Rational(1), kept);
  }
  return out;
}

MultiPoly poly_specialize(const MultiPoly& q, std::optional<Rational> x,
                          std::optional<Rational> y, std::optional<Rational> a,
                          std::optional<Rational> b) {
  PolyBindings bind;
  auto set = [&](Var v, const std::optional<Rational>& r) {
    if (r) bind[static_cast<std::size_t>(v)] = MultiPoly(*r);
  };
  set(Var::x, x);
  set(Var::y, y);
  set(Var::a, a);
  set(Var::b, b);
  return poly_substitute(q, bind);
}

}  // namespace chordcubic

#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "chordcubic/chord.hpp"
#include "chordcubic/projective.hpp"
#include "chordcubic/roots.hpp"

namespace chordcubic {

template <RingElement R>
R evaluate_form(const TernaryForm<R>& form, const Triple<R>& pt) {
  return form.evaluate(pt);
}

/// True iff UX + VY + WZ = 0.
template <RingElement R>
bool dual_incidence(const Triple<R>& pt, const Triple<R>& line) {
  return dot(pt, line).is_zero();
}

/// Determinant of the matrix of second partials. Throws wrong_degree unless
/// the form is a cubic.
template <RingElement R>
TernaryForm<R> hessian_cubic(const TernaryForm<R>& form) {
  if (form.degree() != 3) {
    throw Error(ErrorKind::wrong_degree, "hessian_cubic needs a cubic form");
  }
  std::array<TernaryForm<R>, 3> first{form.partial(0), form.partial(1), form.partial(2)};
  std::array<std::array<TernaryForm<R>, 3>, 3> m{{
      {first[0].partial(0), first[0].partial(1), first[0].partial(2)},
      {first[1].partial(0), first[1].partial(1), first[1].partial(2)},
      {first[2].partial(0), first[2].partial(1), first[2].partial(2)},
  }};
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template <RingElement R>
Triple<R> gradient_at(const TernaryForm<R>& form, const Triple<R>& pt) {
  return {form.partial(0).evaluate(pt), form.partial(1).evaluate(pt),
          form.partial(2).evaluate(pt)};
}

/// A smooth point of the curve where the Hessian vanishes. Throws
/// not_on_curve if pt is not a zero of the form.
template <FieldElement S>
bool is_flex(const TernaryForm<S>& form, const Triple<S>& pt) {
  if (!form.evaluate(pt).is_zero()) {
    throw Error(ErrorKind::not_on_curve, triple_string(pt) + " is not on the curve");
  }
  if (is_zero_triple(gradient_at(form, pt))) return false;
  return hessian_cubic(form).evaluate(pt).is_zero();
}

template <FieldElement S>
struct IntersectionRecord {
  Triple<S> point;
  unsigned multiplicity;
};

/// Two points spanning the line: the first two nonzero, independent vectors
/// among line x e_U, line x e_V, line x e_W.
template <FieldElement S>
std::pair<Triple<S>, Triple<S>> line_basis(const Triple<S>& line) {
  if (is_zero_triple(line)) throw Error(ErrorKind::zero_triple, "[0:0:0] is not a line");
  const S zero = line[0].lift(0), one = line[0].lift(1);
  std::vector<Triple<S>> candidates;
  for (int i = 0; i < 3; ++i) {
    Triple<S> e{zero, zero, zero};
    e[i] = one;
    Triple<S> c = cross(line, e);
    if (!is_zero_triple(c)) candidates.push_back(c);
  }
  for (std::size_t j = 1; j < candidates.size(); ++j) {
    if (!proportional(candidates[0], candidates[j])) return {candidates[0], candidates[j]};
  }
  throw Error(ErrorKind::degenerate_line, "line has no spanning basis");  // unreachable
}

/// Coefficients c_k of s^(d-k) t^k in form(s P + t Q).
template <RingElement R>
std::vector<R> restrict_to_line(const TernaryForm<R>& form, const Triple<R>& p,
                                const Triple<R>& q) {
  const unsigned d = form.degree();
  const R zero = p[0].lift(0);
  std::vector<R> out(d + 1, zero);
  std::size_t n = 0;
  for (const auto& e : form.monomials()) {
    const R& c = form.coefficients()[n++];
    if (c.is_zero()) continue;
    std::vector<R> prod{c};
    for (int var = 0; var < 3; ++var) {
      for (unsigned k = 0; k < e[var]; ++k) {
        std::vector<R> next(prod.size() + 1, zero);
        for (std::size_t i = 0; i < prod.size(); ++i) {
          next[i] = next[i] + prod[i] * p[var];
          next[i + 1] = next[i + 1] + prod[i] * q[var];
        }
        prod = std::move(next);
      }
    }
    for (std::size_t i = 0; i <= d; ++i) out[i] = out[i] + prod[i];
  }
  return out;
}

/// Points of the line on the curve, with intersection multiplicity, rational
/// over the working field. Throws degenerate_line if the line lies in the
/// curve.
template <FieldElement S>
std::vector<IntersectionRecord<S>> line_cubic_intersection(const TernaryForm<S>& form,
                                                           const Triple<S>& line) {
  auto [p, q] = line_basis(line);
  std::vector<S> c = restrict_to_line(form, p, q);
  if (std::all_of(c.begin(), c.end(), [](const S& s) { return s.is_zero(); })) {
    throw Error(ErrorKind::degenerate_line, triple_string(line) + " lies in the curve");
  }
  std::vector<IntersectionRecord<S>> out;
  unsigned at_p = 0;
  while (c[at_p].is_zero()) ++at_p;
  if (at_p > 0) out.push_back({normalize_point(p), at_p});
  for (const auto& [r, mult] : roots_in_field(c)) {
    Triple<S> pt{r * p[0] + q[0], r * p[1] + q[1], r * p[2] + q[2]};
    out.push_back({normalize_point(pt), mult});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& l, const auto& r) { return l.point < r.point; });
  return out;
}

/// Calls fn on every point of P^2(F_p), each normalized once.
template <class Fn>
void for_each_plane_point(const PrimeField& field, Fn&& fn) {
  const std::uint32_t p = field.modulus();
  const Fp zero = field(0), one = field(1);
  for (std::uint32_t x = 0; x < p; ++x) {
    for (std::uint32_t y = 0; y < p; ++y) fn(Triple<Fp>{field(x), field(y), one});
  }
  for (std::uint32_t x = 0; x < p; ++x) fn(Triple<Fp>{field(x), one, zero});
  fn(Triple<Fp>{one, zero, zero});
}

/// F_p-rational flexes by exhaustive scan, in scan order.
std::vector<Triple<Fp>> find_flexes_over_Fp(const TernaryForm<Fp>& form);

/// No F_p point kills the form and all three partials.
bool smooth_over_Fp(const TernaryForm<Fp>& form);

/// Number of F_p-rational points of the projective zero set.
std::size_t count_points_over_Fp(const TernaryForm<Fp>& form);

struct InterpolationResult {
  unsigned degree;
  std::size_t nullity;
};

/// Rank of the rows over the field.
template <FieldElement S>
std::size_t matrix_rank(std::vector<std::vector<S>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const S inv = rows[rank][col].inv();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const S factor = rows[r][col] * inv;
      for (std::size_t k = col; k < cols; ++k) rows[r][k] = rows[r][k] - factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Smallest degree d <= dmax admitting a nonzero form through every point,
/// with the dimension of that space of forms. nullopt when none exists.
template <FieldElement S>
std::optional<InterpolationResult> min_interpolating_degree(const std::vector<Triple<S>>& points,
                                                            unsigned dmax) {
  if (dmax > 8) throw Error(ErrorKind::out_of_range, "dmax is capped at 8");
  for (unsigned d = 1; d <= dmax; ++d) {
    const auto monomials = TernaryForm<S>::monomials(d);
    std::vector<std::vector<S>> rows;
    rows.reserve(points.size());
    for (const auto& pt : points) {
      std::vector<S> row;
      row.reserve(monomials.size());
      for (const auto& e : monomials) {
        S v = pt[0].lift(1);
        for (int var = 0; var < 3; ++var) {
          for (unsigned k = 0; k < e[var]; ++k) v = v * pt[var];
        }
        row.push_back(v);
      }
      rows.push_back(std::move(row));
    }
    const std::size_t rank = matrix_rank(std::move(rows));
    if (rank < monomials.size()) return InterpolationResult{d, monomials.size() - rank};
  }
  return std::nullopt;
}

}  // namespace chordcubic

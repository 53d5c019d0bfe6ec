#include <doctest.h>

#include <random>
#include <set>

#include "chordcubic/chord.hpp"
#include "chordcubic/plane.hpp"
#include "chordcubic/verify.hpp"

using namespace chordcubic;

namespace {

using QForm = TernaryForm<Rational>;
using FForm = TernaryForm<Fp>;

template <RingElement R>
struct Vars {
  TernaryForm<R> U, V, W;
  explicit Vars(const R& like)
      : U(TernaryForm<R>::variable(0, like)),
        V(TernaryForm<R>::variable(1, like)),
        W(TernaryForm<R>::variable(2, like)) {}
};

CurveParams<Rational> qcurve(long long a, long long b) { return validate_curve(Rational(a), Rational(b)); }

CurveParams<Fp> fcurve(long long a, long long b, std::uint32_t p) {
  PrimeField f(p);
  return validate_curve(f(a), f(b));
}

// Second partials by finite differences with step 1. For a cubic these
// stencils are exact, since every fourth derivative vanishes.
Rational fd_second(const QForm& f, const Triple<Rational>& pt, int i, int j) {
  auto at = [&](int di, int dj) {
    Triple<Rational> q = pt;
    q[i] = q[i] + Rational(di);
    q[j] = q[j] + Rational(dj);
    return f.evaluate(q);
  };
  if (i == j) {
    Triple<Rational> plus = pt, minus = pt;
    plus[i] = plus[i] + Rational(1);
    minus[i] = minus[i] - Rational(1);
    return f.evaluate(plus) - Rational(2) * f.evaluate(pt) + f.evaluate(minus);
  }
  return (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / Rational(4);
}

Rational fd_hessian(const QForm& f, const Triple<Rational>& pt) {
  Rational m[3][3];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = fd_second(f, pt, i, j);
  }
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::out_of_range;
}

}  // namespace

TEST_CASE("evaluation and incidence") {
  Vars<Rational> v{Rational(0)};
  CHECK(evaluate_form(v.W * v.W * v.W, {0, 1, 0}) == Rational(0));
  CHECK(evaluate_form(v.U * v.U * v.U + v.V * v.V * v.V + v.W * v.W * v.W, {1, 1, 1}) == Rational(3));
  CHECK(evaluate_form(chord_cubic(qcurve(-3, 2)), {0, 1, 0}).is_zero());
  CHECK(dual_incidence(Triple<Rational>{0, 1, 0}, Triple<Rational>{1, 0, 0}));
  CHECK(dual_incidence(Triple<Rational>{2, 4, 1}, Triple<Rational>{1, 0, -2}));
  CHECK_FALSE(dual_incidence(Triple<Rational>{1, 1, 1}, Triple<Rational>{1, 0, 0}));
}

TEST_CASE("Hessian examples") {
  Vars<Rational> v{Rational(0)};
  QForm uvw = v.U * v.V * v.W;
  CHECK(hessian_cubic(uvw) == uvw.scaled(Rational(2)));
  QForm fermat = v.U * v.U * v.U + v.V * v.V * v.V + v.W * v.W * v.W;
  CHECK(hessian_cubic(fermat) == uvw.scaled(Rational(216)));
  QForm g = chord_cubic(qcurve(-3, 2));
  CHECK(hessian_cubic(g).evaluate({0, 1, 0}).is_zero());
  CHECK(hessian_cubic(g).evaluate({1, 0, 0}) == Rational(-256));
  CHECK(kind_of([&] { hessian_cubic(v.U * v.V); }) == ErrorKind::wrong_degree);
}

TEST_CASE("Hessian agrees with finite differences and scales by lambda^3") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long long> c(-4, 4);
  for (int i = 0; i < 60; ++i) {
    QForm f(3, Rational(0));
    for (const auto& e : QForm::monomials(3)) f.set(e, Rational(c(rng)));
    QForm h = hessian_cubic(f);
    for (int k = 0; k < 5; ++k) {
      Triple<Rational> pt{c(rng), c(rng), c(rng)};
      CHECK(h.evaluate(pt) == fd_hessian(f, pt));
    }
    Rational lambda = make_rational(c(rng) | 1, 3);
    CHECK(hessian_cubic(f.scaled(lambda)) == h.scaled(lambda.pow(3)));
  }
}

TEST_CASE("flex predicate") {
  Vars<Rational> v{Rational(0)};
  QForm fermat = v.U * v.U * v.U + v.V * v.V * v.V + v.W * v.W * v.W;
  CHECK(is_flex(fermat, {0, 1, -1}));
  QForm g = chord_cubic(qcurve(-3, 2));
  CHECK(is_flex(g, {0, 1, 0}));
  CHECK_FALSE(is_flex(g, {1, 0, 0}));
  CHECK(kind_of([&] { is_flex(g, {1, 1, 1}); }) == ErrorKind::not_on_curve);
}

TEST_CASE("line-cubic intersections") {
  for (auto [a, b] : {std::pair{-3, 2}, {0, 1}, {3, 1}, {5, -7}}) {
    auto c = qcurve(a, b);
    // The line T = 2bU - aW = 0 meets the image cubic only at [0:1:0].
    Triple<Rational> t_line{Rational(2 * b), Rational(0), Rational(-a)};
    auto hits = line_cubic_intersection(chord_cubic(c), t_line);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].point == Triple<Rational>{0, 1, 0});
    CHECK(hits[0].multiplicity == 3);
  }
  // V = 0 on (-3, 2): W (2U^2 - W^2); over Q only [1:0:0] is rational.
  auto hits = line_cubic_intersection(chord_cubic(qcurve(-3, 2)), Triple<Rational>{0, 1, 0});
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].point == Triple<Rational>{1, 0, 0});
  CHECK(hits[0].multiplicity == 1);
  // Over F_7, 2U^2 = W^2 splits: U = +-2W.
  auto c7 = fcurve(-3, 2, 7);
  PrimeField f7(7);
  auto hits7 = line_cubic_intersection(chord_cubic(c7), Triple<Fp>{f7(0), f7(1), f7(0)});
  REQUIRE(hits7.size() == 3);
  std::size_t total = 0;
  for (const auto& h : hits7) {
    CHECK(h.multiplicity == 1);
    CHECK(chord_cubic(c7).evaluate(h.point).is_zero());
    total += h.multiplicity;
  }
  CHECK(total == 3);
  // Fermat cubic meets W = 0 over F_7 in three points, as 7 = 1 mod 3.
  Vars<Fp> v{f7(0)};
  FForm fermat = v.U * v.U * v.U + v.V * v.V * v.V + v.W * v.W * v.W;
  auto fh = line_cubic_intersection(fermat, Triple<Fp>{f7(0), f7(0), f7(1)});
  REQUIRE(fh.size() == 3);
  for (const auto& h : fh) {
    CHECK(h.point[2].is_zero());
    CHECK(fermat.evaluate(h.point).is_zero());
  }
  CHECK(kind_of([&] { line_cubic_intersection(v.U * v.V * v.W, Triple<Fp>{f7(1), f7(0), f7(0)}); }) ==
        ErrorKind::degenerate_line);
}

TEST_CASE("intersection multiplicities sum to 3 on split lines") {
  // Lines through two image points: every chord through two F_p points of a
  // cubic meets it in a third F_p point (counted with multiplicity).
  auto c = fcurve(-3, 2, 101);
  auto g = chord_cubic(c);
  auto pts = enumerate_points(c);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  for (int i = 0; i < 100; ++i) {
    auto l1 = chord_map(pts[pick(rng)]).coords();
    auto l2 = chord_map(pts[pick(rng)]).coords();
    if (proportional(l1, l2)) continue;
    auto hits = line_cubic_intersection(g, cross(l1, l2));
    unsigned total = 0;
    for (const auto& h : hits) total += h.multiplicity;
    CHECK(total == 3);
  }
}

TEST_CASE("flexes, smoothness and point counts over F_p") {
  auto c7 = fcurve(-3, 2, 7);
  auto g7 = chord_cubic(c7);
  auto flexes = find_flexes_over_Fp(g7);
  PrimeField f7(7);
  CHECK(std::find(flexes.begin(), flexes.end(), Triple<Fp>{f7(0), f7(1), f7(0)}) != flexes.end());
  CHECK(smooth_over_Fp(g7));
  Vars<Fp> v{f7(0)};
  CHECK_FALSE(smooth_over_Fp(v.U * v.V * v.W));
  for (std::uint32_t p : {7u, 13u, 101u}) {
    for (auto [a, b] : {std::pair{-3, 2}, {1, 3}, {0, 4}, {2, 5}}) {
      PrimeField f(p);
      if ((f(a) * f(a) - f(4) * f(b)).is_zero()) continue;
      auto c = validate_curve(f(a), f(b));
      auto w = weierstrass_form(c);
      CHECK(smooth_over_Fp(w));
      CHECK(smooth_over_Fp(chord_cubic(c)));
      CHECK(count_points_over_Fp(w) == enumerate_points(c).size());
      auto wf = find_flexes_over_Fp(w);
      CHECK(wf.size() <= 9);
      std::vector<Triple<Fp>> torsion;
      for (const auto& q : three_torsion_flexes(c)) torsion.push_back(q.coords());
      std::sort(wf.begin(), wf.end());
      std::sort(torsion.begin(), torsion.end());
      CHECK(wf == torsion);
    }
  }
}

TEST_CASE("interpolation degree") {
  PrimeField f(101);
  std::vector<Triple<Fp>> line{{f(0), f(1), f(0)}, {f(0), f(0), f(1)}, {f(0), f(1), f(1)}};
  auto r = min_interpolating_degree(line, 8);
  REQUIRE(r.has_value());
  CHECK(r->degree == 1);
  CHECK(r->nullity == 1);
  CHECK(kind_of([&] { min_interpolating_degree(line, 9); }) == ErrorKind::out_of_range);
  // Image of E(F_101) under the chord map: degree 3, nullity 1.
  auto c = fcurve(-3, 2, 101);
  std::set<DualPoint<Fp>> image;
  for (const auto& q : enumerate_points(c)) image.insert(chord_map(q));
  std::vector<Triple<Fp>> pts;
  for (const auto& l : image) pts.push_back(l.coords());
  auto ri = min_interpolating_degree(pts, 8);
  REQUIRE(ri.has_value());
  CHECK(ri->degree == 3);
  CHECK(ri->nullity == 1);
  // Monotone: more points never lower the degree.
  std::vector<Triple<Fp>> prefix;
  unsigned last = 0;
  for (const auto& pt : pts) {
    prefix.push_back(pt);
    auto step = min_interpolating_degree(prefix, 8);
    REQUIRE(step.has_value());
    CHECK(step->degree >= last);
    last = step->degree;
  }
  CHECK(last == 3);
  CHECK(matrix_rank(std::vector<std::vector<Fp>>{{f(1), f(2)}, {f(2), f(4)}}) == 1);
}

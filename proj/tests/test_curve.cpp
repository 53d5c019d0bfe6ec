#include <doctest.h>

#include <cmath>
#include <random>

#include "chordcubic/curve.hpp"

using namespace chordcubic;

namespace {

using QPoint = CurvePoint<Rational>;
using FPoint = CurvePoint<Fp>;

CurveParams<Rational> qcurve(long long a, long long b) { return validate_curve(Rational(a), Rational(b)); }

CurveParams<Fp> fcurve(long long a, long long b, std::uint32_t p) {
  PrimeField f(p);
  return validate_curve(f(a), f(b));
}

QPoint qpt(const CurveParams<Rational>& c, long long x, long long y) {
  return QPoint::affine(c, Rational(x), Rational(y));
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

// Affine points by scanning every (x, y) in F_p^2, plus O.
std::size_t brute_count(long long a, long long b, long long p) {
  std::size_t n = 1;
  for (long long x = 0; x < p; ++x) {
    for (long long y = 0; y < p; ++y) {
      if ((y * y - x * x * x - a * x * x - b * x) % p == 0) ++n;
    }
  }
  return n;
}

}  // namespace

TEST_CASE("curve validation") {
  CHECK_NOTHROW(qcurve(0, 4));
  CHECK(kind_of([] { qcurve(0, 0); }) == ErrorKind::beta_degenerate);
  CHECK(kind_of([] { qcurve(2, 1); }) == ErrorKind::double_root);
  CHECK(kind_of([] { fcurve(2, 1, 101); }) == ErrorKind::double_root);
  // a^2 = 4b only modulo p: (1, 2) over F_7 since 4*2 = 8 = 1.
  CHECK(kind_of([] { fcurve(1, 2, 7); }) == ErrorKind::double_root);
}

TEST_CASE("points on the curve") {
  auto c = qcurve(0, 4);
  CHECK(is_on_curve(c, Triple<Rational>{2, 4, 1}));
  CHECK(is_on_curve(c, Triple<Rational>{0, 1, 0}));
  CHECK(is_on_curve(qcurve(-3, 2), Triple<Rational>{0, 1, 0}));
  CHECK_FALSE(is_on_curve(c, Triple<Rational>{1, 1, 1}));
  CHECK(is_on_curve(c, Triple<Rational>{4, 8, 2}));  // projective rescaling of (2, 4)
  CHECK(kind_of([&] { is_on_curve(c, Triple<Rational>{0, 0, 0}); }) == ErrorKind::zero_triple);
  CHECK(kind_of([&] { qpt(c, 1, 1); }) == ErrorKind::not_on_curve);
  CHECK(to_string(qpt(c, 2, 4)) == "[2:4:1]");
  CHECK(to_string(QPoint::infinity(c)) == "[0:1:0]");
}

TEST_CASE("group law examples") {
  auto c = qcurve(0, 4);
  auto p = qpt(c, 2, 4);
  auto O = QPoint::infinity(c);
  CHECK(group_add(O, p) == p);
  CHECK(group_add(beta_point(c), beta_point(c)) == O);
  auto d = qcurve(0, -1);
  CHECK(group_add(qpt(d, -1, 0), qpt(d, 0, 0)) == qpt(d, 1, 0));
  CHECK(scalar_mul(2, p) == beta_point(c));
  CHECK(scalar_mul(0, p) == O);
  CHECK(scalar_mul(4, p) == O);
  CHECK(point_order(p, 10) == 4);
  CHECK(kind_of([&] { group_add(p, qpt(d, 0, 0)); }) == ErrorKind::cross_curve);
}

TEST_CASE("translation by beta") {
  auto c = qcurve(0, 4);
  CHECK(translate_by_beta(qpt(c, 2, 4)) == qpt(c, 2, -4));
  auto e = qcurve(-3, 2);
  CHECK(translate_by_beta(qpt(e, 1, 0)) == qpt(e, 2, 0));
  CHECK(translate_by_beta(QPoint::infinity(c)) == beta_point(c));
  CHECK(translate_by_beta(beta_point(c)) == QPoint::infinity(c));
}

TEST_CASE("translation agrees with the group law on every point") {
  for (std::uint32_t p : {5u, 7u, 101u}) {
    for (auto [a, b] : {std::pair{-3, 2}, {0, -1}, {0, 4}, {5, 3}}) {
      PrimeField f(p);
      if ((f(a) * f(a) - f(4) * f(b)).is_zero()) continue;
      auto c = validate_curve(f(a), f(b));
      for (const auto& q : enumerate_points(c)) {
        CHECK(translate_by_beta(q) == group_add(q, beta_point(c)));
      }
    }
  }
}

TEST_CASE("rational 2-torsion") {
  auto e = qcurve(-3, 2);
  std::vector<QPoint> want{QPoint::infinity(e), qpt(e, 0, 0), qpt(e, 1, 0), qpt(e, 2, 0)};
  CHECK(two_torsion_points(e) == want);
  auto d = qcurve(0, -1);
  auto got = two_torsion_points(d);
  REQUIRE(got.size() == 4);
  CHECK(std::find(got.begin(), got.end(), qpt(d, 1, 0)) != got.end());
  CHECK(std::find(got.begin(), got.end(), qpt(d, -1, 0)) != got.end());
  auto c = qcurve(0, 4);
  CHECK(two_torsion_points(c) == std::vector<QPoint>{QPoint::infinity(c), beta_point(c)});
  for (const auto& t : got) CHECK(scalar_mul(2, t) == QPoint::infinity(d));
}

TEST_CASE("enumeration over F_5 and brute-force counts") {
  CHECK(enumerate_points(fcurve(0, -1, 5)).size() == 8);
  CHECK(enumerate_points(fcurve(0, 4, 5)).size() == 8);
  for (std::uint32_t p : {5u, 7u, 11u, 101u}) {
    for (auto [a, b] : {std::pair{-3, 2}, {0, -1}, {0, 4}, {1, 1}, {7, 3}}) {
      PrimeField f(p);
      if ((f(b)).is_zero() || (f(a) * f(a) - f(4) * f(b)).is_zero()) continue;
      auto c = validate_curve(f(a), f(b));
      auto pts = enumerate_points(c);
      CHECK(pts.size() == brute_count(a, b, p));
      CHECK(pts.front().is_infinity());
      CHECK(std::find(pts.begin(), pts.end(), beta_point(c)) != pts.end());
      CHECK(std::is_sorted(pts.begin(), pts.end(), canonical_less<Fp>));
      // Hasse: |#E - (p + 1)| <= 2 sqrt(p).
      double gap = std::abs(static_cast<double>(pts.size()) - static_cast<double>(p + 1));
      CHECK(gap <= 2.0 * std::sqrt(static_cast<double>(p)));
    }
  }
}

TEST_CASE("3-torsion") {
  auto c = fcurve(0, -1, 5);
  auto flexes = three_torsion_flexes(c);
  CHECK(flexes == std::vector<FPoint>{FPoint::infinity(c)});
  for (std::uint32_t p : {7u, 13u, 101u, 211u}) {
    for (auto [a, b] : {std::pair{-3, 2}, {1, 3}, {2, 5}, {0, 4}}) {
      PrimeField f(p);
      if ((f(a) * f(a) - f(4) * f(b)).is_zero()) continue;
      auto params = validate_curve(f(a), f(b));
      auto t = three_torsion_flexes(params);
      CHECK((t.size() == 1 || t.size() == 3 || t.size() == 9));
      CHECK(t.front().is_infinity());
      for (const auto& q : t) CHECK(scalar_mul(3, q).is_infinity());
    }
  }
  // Over Q: (x, y) = (1, 1) on y^2 = x^3 - 3x^2 + 3x has order 3.
  auto q = qcurve(-3, 3);
  auto rat = three_torsion_flexes(q);
  CHECK(rat.size() == 3);
  CHECK(std::find(rat.begin(), rat.end(), qpt(q, 1, 1)) != rat.end());
  CHECK(std::find(rat.begin(), rat.end(), qpt(q, 1, -1)) != rat.end());
  CHECK(scalar_mul(3, qpt(q, 1, 1)).is_infinity());
}

TEST_CASE("group axioms on random points") {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {101u, 211u}) {
    auto c = fcurve(-3, 2, p);
    auto pts = enumerate_points(c);
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    auto O = FPoint::infinity(c);
    for (int i = 0; i < 300; ++i) {
      const auto& P = pts[pick(rng)];
      const auto& Q = pts[pick(rng)];
      const auto& R = pts[pick(rng)];
      CHECK(group_add(P, Q) == group_add(Q, P));
      CHECK(group_add(group_add(P, Q), R) == group_add(P, group_add(Q, R)));
      CHECK(group_add(P, O) == P);
      CHECK(group_add(P, P.negated()) == O);
      CHECK(scalar_mul(static_cast<long long>(pts.size()), P) == O);
    }
  }
}

TEST_CASE("finding points of a given order") {
  auto c = fcurve(-3, 2, 101);  // #E = 104 = 8 * 13
  CHECK(enumerate_points(c).size() == 104);
  auto t4 = find_point_of_order(c, 4);
  REQUIRE(t4.has_value());
  CHECK(point_order(*t4, 104) == 4);
  CHECK_FALSE(find_point_of_order(c, 5).has_value());
  CHECK(find_point_of_order(c, 13).has_value());
}

#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "chordcubic/scalars.hpp"

using namespace chordcubic;

namespace {

// Brute-force inverse: the unique t in 1..p-1 with s*t = 1 (mod p).
long long brute_inverse(long long s, long long p) {
  for (long long t = 1; t < p; ++t) {
    if ((s * t) % p == 1) return t;
  }
  return -1;
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

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(2, 4).to_string() == "1/2");
  CHECK(make_rational(0, 5).to_string() == "0");
  CHECK(make_rational(0, 5).denominator() == 1);
  CHECK(make_rational(-3, -6).to_string() == "1/2");
  CHECK(make_rational(3, -6).to_string() == "-1/2");
  CHECK(kind_of([] { make_rational(1, 0); }) == ErrorKind::zero_denominator);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("6/-4") == make_rational(-3, 2));
  CHECK(Rational::parse("12345678901234567890/10").to_string() == "1234567890123456789");
  CHECK(kind_of([] { Rational::parse("1/0"); }) == ErrorKind::zero_denominator);
  CHECK(kind_of([] { Rational::parse("x"); }) == ErrorKind::malformed_rational);
  CHECK(kind_of([] { Rational::parse("1/2/3"); }) == ErrorKind::malformed_rational);
  CHECK(kind_of([] { Rational::parse(""); }) == ErrorKind::malformed_rational);
}

TEST_CASE("rational arithmetic round-trips exactly") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> num(-1000, 1000), den(1, 1000);
  for (int i = 0; i < 500; ++i) {
    Rational a = make_rational(num(rng), den(rng));
    Rational b = make_rational(num(rng), den(rng));
    CHECK((a + b) - b == a);
    if (!b.is_zero()) {
      CHECK((a * b) / b == a);
      CHECK(b.inv().inv() == b);
    }
    // Canonical form: gcd(n, d) = 1 and d > 0.
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.numerator().get_mpz_t(), a.denominator().get_mpz_t());
    CHECK(g == 1);
    CHECK(a.denominator() > 0);
  }
  CHECK(kind_of([] { Rational(0).inv(); }) == ErrorKind::division_by_zero);
}

TEST_CASE("prime field construction") {
  CHECK(PrimeField(7).modulus() == 7);
  CHECK(kind_of([] { PrimeField(9); }) == ErrorKind::not_prime);
  CHECK(kind_of([] { PrimeField(2); }) == ErrorKind::not_prime);
  CHECK(kind_of([] { PrimeField(3); }) == ErrorKind::not_prime);
  CHECK(kind_of([] { PrimeField(65537); }) == ErrorKind::out_of_range);
  CHECK(PrimeField(65521).modulus() == 65521);
  PrimeField f7(7);
  CHECK(f7(-1).value() == 6);
  CHECK(f7(15).value() == 1);
  CHECK(f7(3).to_string() == "3 mod 7");
}

TEST_CASE("field inverse in F_7") {
  PrimeField f7(7);
  CHECK(field_inv(f7(3)) == f7(5));
  CHECK(field_inv(f7(3)).value() == brute_inverse(3, 7));
  CHECK(field_inv(f7(1)) == f7(1));
  CHECK(field_inv(Rational(1)) == Rational(1));
  CHECK(kind_of([&] { field_inv(f7(0)); }) == ErrorKind::division_by_zero);
}

TEST_CASE("inverse agrees with brute force and is an involution") {
  for (std::uint32_t p : {5u, 7u, 11u, 101u, 211u}) {
    PrimeField f(p);
    for (long long s = 1; s < p; ++s) {
      CHECK(field_inv(f(s)).value() == brute_inverse(s, p));
      CHECK(field_inv(field_inv(f(s))) == f(s));
      CHECK(f(s).pow(p - 1) == f(1));  // Fermat
    }
  }
}

TEST_CASE("rationals reduce into F_p") {
  PrimeField f7(7);
  CHECK(f7.from_rational(make_rational(1, 2)) == f7(4));
  CHECK(f7.from_rational(make_rational(-3, 5)) == f7(-3) * f7(5).inv());
  CHECK(kind_of([&] { f7.from_rational(make_rational(1, 14)); }) ==
        ErrorKind::non_invertible_denominator);
}

TEST_CASE("mixing moduli is rejected") {
  PrimeField f5(5), f7(7);
  CHECK(kind_of([&] { (void)(f5(1) + f7(1)); }) == ErrorKind::field_mismatch);
  CHECK(kind_of([&] { (void)(f5(1) * f7(1)); }) == ErrorKind::field_mismatch);
}

TEST_CASE("squares table for p = 7") {
  SquaresTable t = squares_table(7);
  CHECK(t.residues() == std::vector<std::uint32_t>{0, 1, 2, 4});
  auto r2 = t.roots(2);
  CHECK(std::vector<std::uint32_t>(r2.begin(), r2.end()) == std::vector<std::uint32_t>{3, 4});
  CHECK_FALSE(t.contains(3));
  CHECK(t.roots(0).size() == 1);
}

TEST_CASE("squares table matches a direct scan") {
  for (std::uint32_t p : {5u, 7u, 13u, 101u, 409u}) {
    SquaresTable t = squares_table(p);
    std::map<std::uint32_t, std::set<std::uint32_t>> oracle;
    for (std::uint32_t y = 0; y < p; ++y) oracle[(y * y) % p].insert(y);
    CHECK(t.size() == (p + 1) / 2);
    CHECK(oracle.size() == (p + 1) / 2);
    std::size_t covered = 0;
    for (std::uint32_t r = 0; r < p; ++r) {
      auto roots = t.roots(r);
      std::set<std::uint32_t> got(roots.begin(), roots.end());
      CHECK(got == oracle[r]);
      covered += roots.size();
    }
    CHECK(covered == p);
  }
}

TEST_CASE("exact square roots") {
  CHECK(exact_sqrt(make_rational(9, 4)) == make_rational(3, 2));
  CHECK_FALSE(exact_sqrt(Rational(2)).has_value());
  CHECK_FALSE(exact_sqrt(Rational(-4)).has_value());
  for (std::uint32_t p : {7u, 13u, 101u, 409u}) {
    PrimeField f(p);
    SquaresTable t(p);
    for (std::uint32_t r = 0; r < p; ++r) {
      auto s = exact_sqrt(f(r));
      CHECK(s.has_value() == t.contains(r));
      if (s) CHECK(*s * *s == f(r));
    }
  }
}

TEST_CASE("primality") {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 0; n < 200; ++n) {
    if (is_prime(n)) primes.push_back(n);
  }
  CHECK(primes.size() == 46);
  CHECK(primes.front() == 2);
  CHECK(primes.back() == 199);
  CHECK(is_prime(65521));
  CHECK_FALSE(is_prime(65535));
}

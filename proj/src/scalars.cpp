#include "chordcubic/scalars.hpp"

#include <algorithm>
#include <cctype>

namespace chordcubic {

namespace {

constexpr std::uint64_t kMaxModulus = 1u << 16;

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                        : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den)) {
    throw Error(ErrorKind::malformed_rational,
                "cannot parse '" + std::string(text) + "' as a rational");
  }
  return make_rational(parse_integer(num), parse_integer(den));
}

Rational make_rational(long long n, long long d) {
  return make_rational(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
}

Rational make_rational(const mpz_class& n, const mpz_class& d) {
  if (sgn(d) == 0) throw Error(ErrorKind::zero_denominator, "zero denominator");
  return Rational(mpq_class(n, d));
}

Rational Rational::inv() const {
  if (is_zero()) throw Error(ErrorKind::division_by_zero, "inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(unsigned e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), e);
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::division_by_zero, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p >= kMaxModulus) {
    throw Error(ErrorKind::out_of_range, "prime " + std::to_string(p) + " is not below 2^16");
  }
  if (!is_prime(p) || p <= 3) {
    throw Error(ErrorKind::not_prime,
                std::to_string(p) + " is not a prime greater than 3");
  }
  p_ = static_cast<std::uint32_t>(p);
}

Fp PrimeField::operator()(long long v) const { return Fp(v, *this); }

Fp PrimeField::from_integer(const mpz_class& n) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p_);
  return Fp(static_cast<long long>(r.get_ui()), *this);
}

Fp PrimeField::from_rational(const Rational& q) const {
  Fp den = from_integer(q.denominator());
  if (den.is_zero()) {
    throw Error(ErrorKind::non_invertible_denominator,
                "denominator of " + q.to_string() + " is divisible by " + std::to_string(p_));
  }
  return from_integer(q.numerator()) / den;
}

Fp::Fp(long long v, const PrimeField& field) : p_(field.modulus()) {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  value_ = static_cast<std::uint32_t>(r);
}

Fp Fp::lift(long long n) const { return Fp(n, field()); }

void Fp::check_same_field(const Fp& o) const {
  if (p_ != o.p_) {
    throw Error(ErrorKind::field_mismatch, "operands live in F_" + std::to_string(p_) +
                                               " and F_" + std::to_string(o.p_));
  }
}

Fp Fp::operator-() const { return Fp(value_ == 0 ? 0 : p_ - value_, p_); }

Fp& Fp::operator+=(const Fp& o) {
  check_same_field(o);
  value_ += o.value_;
  if (value_ >= p_) value_ -= p_;
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  check_same_field(o);
  value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + p_ - o.value_;
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  check_same_field(o);
  value_ = static_cast<std::uint32_t>(std::uint64_t{value_} * o.value_ % p_);
  return *this;
}

Fp Fp::pow(std::uint64_t e) const {
  std::uint64_t result = 1 % p_;
  std::uint64_t base = value_;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return Fp(static_cast<std::uint32_t>(result), p_);
}

Fp Fp::inv() const {
  if (is_zero()) {
    throw Error(ErrorKind::division_by_zero, "inverse of 0 mod " + std::to_string(p_));
  }
  // Extended Euclid on the residue and the modulus.
  long long r0 = p_, r1 = value_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return Fp(s0, field());
}

std::string Fp::to_string() const {
  return std::to_string(value_) + " mod " + std::to_string(p_);
}

SquaresTable::SquaresTable(std::uint32_t p) : p_(p) {
  if (p >= kMaxModulus) {
    throw Error(ErrorKind::out_of_range, "prime " + std::to_string(p) + " is not below 2^16");
  }
  if (p == 2 || !is_prime(p)) {
    throw Error(ErrorKind::not_prime, std::to_string(p) + " is not an odd prime");
  }
  roots_.resize(p);
  for (std::uint32_t y = 0; y < p; ++y) {
    roots_[std::uint64_t{y} * y % p].push_back(y);
  }
}

std::span<const std::uint32_t> SquaresTable::roots(std::uint32_t r) const {
  if (r >= p_) return {};
  return roots_[r];
}

std::vector<std::uint32_t> SquaresTable::residues() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t r = 0; r < p_; ++r) {
    if (!roots_[r].empty()) out.push_back(r);
  }
  return out;
}

std::size_t SquaresTable::size() const {
  return static_cast<std::size_t>(
      std::count_if(roots_.begin(), roots_.end(), [](const auto& v) { return !v.empty(); }));
}

SquaresTable squares_table(std::uint32_t p) { return SquaresTable(p); }

Rational field_inv(const Rational& s) { return s.inv(); }
Fp field_inv(const Fp& s) { return s.inv(); }

std::optional<Rational> exact_sqrt(const Rational& s) {
  if (s.sign() < 0) return std::nullopt;
  mpz_class n = s.numerator(), d = s.denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return make_rational(rn, rd);
}

std::optional<Fp> exact_sqrt(const Fp& s) {
  const std::uint32_t p = s.modulus();
  if (s.is_zero()) return s;
  if (s.pow((p - 1) / 2).value() != 1) return std::nullopt;
  // Tonelli-Shanks: p - 1 = q * 2^m with q odd.
  std::uint32_t q = p - 1, m = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++m;
  }
  Fp z = s.lift(2);
  while (z.pow((p - 1) / 2).value() == 1) z += s.lift(1);
  Fp c = z.pow(q);
  Fp t = s.pow(q);
  Fp r = s.pow((q + 1) / 2);
  while (t.value() != 1) {
    std::uint32_t i = 0;
    Fp t2 = t;
    while (t2.value() != 1) {
      t2 *= t2;
      ++i;
    }
    Fp b = c.pow(std::uint64_t{1} << (m - i - 1));
    m = i;
    c = b * b;
    t *= c;
    r *= b;
  }
  // Return the smaller root for determinism.
  Fp other = -r;
  return other.value() < r.value() ? other : r;
}

}  // namespace chordcubic

#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chordcubic/error.hpp"

namespace chordcubic {

// Ring and field contracts shared by every geometric routine. `lift(n)`
// produces the integer n in the same ring as its receiver; prime-field
// elements need it because the modulus travels with the value.
template <class R>
concept RingElement = std::copyable<R> && std::equality_comparable<R> &&
    requires(const R& r, long long n) {
      { r + r } -> std::convertible_to<R>;
      { r - r } -> std::convertible_to<R>;
      { r * r } -> std::convertible_to<R>;
      { -r } -> std::convertible_to<R>;
      { r.is_zero() } -> std::same_as<bool>;
      { r.lift(n) } -> std::same_as<R>;
    };

template <class F>
concept FieldElement = RingElement<F> && requires(const F& f) {
  { f.inv() } -> std::same_as<F>;
  { f / f } -> std::convertible_to<F>;
};

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : value_(static_cast<long>(n)) {}  // NOLINT
  explicit Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

  /// Parses "n", "-n" or "n/d". Throws malformed_rational or zero_denominator.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  Rational lift(long long n) const { return Rational(n); }
  Rational inv() const;
  Rational pow(unsigned e) const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational l, const Rational& r) { return l += r; }
  friend Rational operator-(Rational l, const Rational& r) { return l -= r; }
  friend Rational operator*(Rational l, const Rational& r) { return l *= r; }
  friend Rational operator/(Rational l, const Rational& r) { return l /= r; }
  friend bool operator==(const Rational& l, const Rational& r) { return l.value_ == r.value_; }
  friend std::strong_ordering operator<=>(const Rational& l, const Rational& r) {
    int c = cmp(l.value_, r.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "n/d", or "n" when d = 1.
  std::string to_string() const;

 private:
  mpq_class value_{0};
};

/// Reduced fraction n/d. Throws zero_denominator when d = 0.
Rational make_rational(long long n, long long d);
Rational make_rational(const mpz_class& n, const mpz_class& d);

bool is_prime(std::uint64_t n);

class Fp;

/// F_p for an odd prime 3 < p < 2^16.
class PrimeField {
 public:
  /// Throws not_prime for composites and characteristic 2 or 3, out_of_range
  /// for p >= 2^16.
  explicit PrimeField(std::uint64_t p);

  std::uint32_t modulus() const { return p_; }
  Fp operator()(long long v) const;
  /// Image of a rational; throws non_invertible_denominator when p divides
  /// the denominator.
  Fp from_rational(const Rational& q) const;
  Fp from_integer(const mpz_class& n) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  friend class Fp;
  struct Trusted {};
  PrimeField(std::uint32_t p, Trusted) : p_(p) {}

  std::uint32_t p_;
};

/// Residue class modulo a prime. The modulus travels with the value; mixing
/// moduli throws field_mismatch.
class Fp {
 public:
  Fp() = default;
  Fp(long long v, const PrimeField& field);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return p_; }
  PrimeField field() const { return PrimeField(p_, PrimeField::Trusted{}); }

  bool is_zero() const { return value_ == 0; }
  Fp lift(long long n) const;
  /// Throws division_by_zero for 0.
  Fp inv() const;
  Fp pow(std::uint64_t e) const;

  Fp operator-() const;
  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

  friend Fp operator+(Fp l, const Fp& r) { return l += r; }
  friend Fp operator-(Fp l, const Fp& r) { return l -= r; }
  friend Fp operator*(Fp l, const Fp& r) { return l *= r; }
  friend Fp operator/(Fp l, const Fp& r) { return l /= r; }
  friend bool operator==(const Fp&, const Fp&) = default;
  /// Orders by residue value; only meaningful within one field.
  friend auto operator<=>(const Fp& l, const Fp& r) { return l.value_ <=> r.value_; }

  /// "v mod p".
  std::string to_string() const;

 private:
  Fp(std::uint32_t v, std::uint32_t p) : value_(v), p_(p) {}
  void check_same_field(const Fp& o) const;

  std::uint32_t value_ = 0;
  std::uint32_t p_ = 0;
};

/// Square roots of every quadratic residue modulo p, 0 included.
class SquaresTable {
 public:
  /// Accepts odd primes p < 2^16; throws not_prime / out_of_range otherwise.
  explicit SquaresTable(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  /// Roots of r in ascending order; empty for non-residues.
  std::span<const std::uint32_t> roots(std::uint32_t r) const;
  bool contains(std::uint32_t r) const { return !roots(r).empty(); }
  /// Residues in ascending order.
  std::vector<std::uint32_t> residues() const;
  std::size_t size() const;

 private:
  std::uint32_t p_;
  std::vector<std::vector<std::uint32_t>> roots_;
};

SquaresTable squares_table(std::uint32_t p);

Rational field_inv(const Rational& s);
Fp field_inv(const Fp& s);

/// Exact square root when one exists in the field. Only used to locate
/// rational points (2-torsion, flexes); no identity check relies on it.
std::optional<Rational> exact_sqrt(const Rational& s);
std::optional<Fp> exact_sqrt(const Fp& s);

/// Maps a rational coefficient into the field of `like`.
inline Rational coerce(const Rational& q, const Rational&) { return q; }
inline Fp coerce(const Rational& q, const Fp& like) { return like.field().from_rational(q); }

inline std::string to_string(const Rational& q) { return q.to_string(); }
inline std::string to_string(const Fp& s) { return s.to_string(); }

/// Bare rendering used inside projective triples: the rational text, or the
/// residue alone for F_p.
inline std::string coordinate_string(const Rational& q) { return q.to_string(); }
inline std::string coordinate_string(const Fp& s) { return std::to_string(s.value()); }

}  // namespace chordcubic

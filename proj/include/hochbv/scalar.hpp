#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "hochbv/errors.hpp"

namespace hochbv {

enum class RingKind { Integers, Rationals, PrimeField };

// Ground ring tag: Z, Q or F_p.
class Ring {
 public:
  constexpr Ring() = default;

  static constexpr Ring integers() { return Ring(RingKind::Integers, 0); }
  static constexpr Ring rationals() { return Ring(RingKind::Rationals, 0); }
  static Ring prime_field(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t{1} << 31) || !is_prime(p))
      fail(ErrorCode::InvalidSpec, "not a supported prime modulus: " + std::to_string(p));
    return Ring(RingKind::PrimeField, p);
  }

  // Accepts "z", "q", "f<p>".
  static Ring parse(const std::string& text) {
    if (text == "z" || text == "Z") return integers();
    if (text == "q" || text == "Q") return rationals();
    if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
      std::int64_t p = 0;
      for (std::size_t i = 1; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9' || p > (std::int64_t{1} << 40))
          fail(ErrorCode::InvalidSpec, "bad ring tag: " + text);
        p = p * 10 + (text[i] - '0');
      }
      return prime_field(p);
    }
    fail(ErrorCode::InvalidSpec, "bad ring tag: " + text);
  }

  constexpr RingKind kind() const { return kind_; }
  constexpr std::int64_t modulus() const { return modulus_; }
  constexpr bool is_field() const { return kind_ != RingKind::Integers; }
  constexpr std::int64_t characteristic() const { return modulus_; }

  std::string to_string() const {
    switch (kind_) {
      case RingKind::Integers: return "z";
      case RingKind::Rationals: return "q";
      case RingKind::PrimeField: return "f" + std::to_string(modulus_);
    }
    return "?";
  }

  friend constexpr bool operator==(const Ring&, const Ring&) = default;

 private:
  constexpr Ring(RingKind kind, std::int64_t modulus) : kind_(kind), modulus_(modulus) {}

  static bool is_prime(std::int64_t p) {
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  RingKind kind_ = RingKind::Rationals;
  std::int64_t modulus_ = 0;
};

// Exact element of a Ring. F_p values are stored reduced in [0, p).
class Scalar {
 public:
  Scalar() : ring_(Ring::rationals()), value_(mpq_class(0)) {}
  Scalar(Ring ring, long long n) : ring_(ring) {
    if (ring.kind() == RingKind::PrimeField)
      value_ = reduce(n, ring.modulus());
    else
      value_ = mpq_class(static_cast<long>(n));
  }
  Scalar(Ring ring, const mpq_class& q) : ring_(ring) {
    mpq_class c = q;
    c.canonicalize();
    switch (ring.kind()) {
      case RingKind::Integers:
        if (c.get_den() != 1) fail(ErrorCode::DivisionError, "non-integer value in Z");
        value_ = c;
        break;
      case RingKind::Rationals:
        value_ = c;
        break;
      case RingKind::PrimeField: {
        const std::int64_t p = ring.modulus();
        mpz_class num = c.get_num() % p;
        mpz_class den = c.get_den() % p;
        if (den == 0) fail(ErrorCode::DivisionError, "denominator divisible by p");
        value_ = mul_mod(reduce(num.get_si(), p), inv_mod(reduce(den.get_si(), p), p), p);
        break;
      }
    }
  }

  static Scalar zero(Ring ring) { return Scalar(ring, 0); }
  static Scalar one(Ring ring) { return Scalar(ring, 1); }

  const Ring& ring() const { return ring_; }

  bool is_zero() const {
    if (auto v = std::get_if<std::int64_t>(&value_)) return *v == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
  }
  bool is_one() const {
    if (auto v = std::get_if<std::int64_t>(&value_)) return *v == 1;
    return std::get<mpq_class>(value_) == 1;
  }

  // Units: nonzero in a field, +-1 in Z.
  bool is_unit() const {
    if (ring_.is_field()) return !is_zero();
    const auto& q = std::get<mpq_class>(value_);
    return q == 1 || q == -1;
  }

  Scalar operator-() const {
    if (auto v = std::get_if<std::int64_t>(&value_))
      return from_small(ring_, *v == 0 ? 0 : ring_.modulus() - *v);
    return Scalar(ring_, mpq_class(-std::get<mpq_class>(value_)), Raw{});
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    if (a.ring_.kind() == RingKind::PrimeField) {
      std::int64_t s = a.small() + b.small();
      if (s >= a.ring_.modulus()) s -= a.ring_.modulus();
      return from_small(a.ring_, s);
    }
    return Scalar(a.ring_, mpq_class(a.big() + b.big()), Raw{});
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    if (a.ring_.kind() == RingKind::PrimeField)
      return from_small(a.ring_, mul_mod(a.small(), b.small(), a.ring_.modulus()));
    return Scalar(a.ring_, mpq_class(a.big() * b.big()), Raw{});
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const {
    if (!is_unit()) fail(ErrorCode::DivisionError, "inverse of non-unit " + to_string());
    if (ring_.kind() == RingKind::PrimeField)
      return from_small(ring_, inv_mod(small(), ring_.modulus()));
    return Scalar(ring_, mpq_class(1 / big()), Raw{});
  }

  // Exact division; in Z requires divisibility.
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    if (b.is_zero()) fail(ErrorCode::DivisionError, "division by zero");
    if (a.ring_.kind() == RingKind::PrimeField) return a * b.inverse();
    mpq_class q = a.big() / b.big();
    return Scalar(a.ring_, q);
  }

  bool divides(const Scalar& other) const {
    check_same(*this, other);
    if (is_zero()) return other.is_zero();
    if (ring_.is_field()) return true;
    return mpz_divisible_p(other.big().get_num().get_mpz_t(), big().get_num().get_mpz_t()) != 0;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.ring_ == b.ring_ && a.value_ == b.value_;
  }

  // Integer value (Z) or representative in [0,p) (F_p).
  mpz_class to_integer() const {
    if (auto v = std::get_if<std::int64_t>(&value_)) return mpz_class(static_cast<long>(*v));
    const auto& q = std::get<mpq_class>(value_);
    if (q.get_den() != 1) fail(ErrorCode::DivisionError, "not an integer");
    return q.get_num();
  }
  mpq_class to_rational() const {
    if (auto v = std::get_if<std::int64_t>(&value_)) return mpq_class(static_cast<long>(*v));
    return std::get<mpq_class>(value_);
  }

  // Change of ring (Z -> Q, Z -> F_p, Q -> F_p when defined).
  Scalar to_ring(Ring target) const { return Scalar(target, to_rational()); }

  std::string to_string() const {
    if (auto v = std::get_if<std::int64_t>(&value_)) return std::to_string(*v);
    return std::get<mpq_class>(value_).get_str();
  }

 private:
  struct Raw {};
  Scalar(Ring ring, mpq_class&& q, Raw) : ring_(ring), value_(std::move(q)) {}

  static Scalar from_small(Ring ring, std::int64_t v) {
    Scalar s;
    s.ring_ = ring;
    s.value_ = v;
    return s;
  }

  std::int64_t small() const { return std::get<std::int64_t>(value_); }
  const mpq_class& big() const { return std::get<mpq_class>(value_); }

  static void check_same(const Scalar& a, const Scalar& b) {
    if (!(a.ring_ == b.ring_))
      fail(ErrorCode::RingMismatch, a.ring_.to_string() + " vs " + b.ring_.to_string());
  }
  static std::int64_t reduce(long long n, std::int64_t p) {
    std::int64_t r = n % p;
    return r < 0 ? r + p : r;
  }
  static std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) { return (a * b) % p; }
  static std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t result = 1, base = a % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = mul_mod(result, base, p);
      base = mul_mod(base, base, p);
      e >>= 1;
    }
    return result;
  }

  Ring ring_;
  std::variant<std::int64_t, mpq_class> value_;
};

inline Scalar sign_scalar(Ring ring, int exponent) { return Scalar(ring, (exponent % 2 == 0) ? 1 : -1); }

}  // namespace hochbv

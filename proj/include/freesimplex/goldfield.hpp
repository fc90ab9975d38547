#pragma once

// Exact arithmetic in Z[sqrt5, 1/2].
//
// Every scalar produced by words in the simplex vertices q_i^{+-1} lives in
// this ring: a value is (p + q*sqrt5) / 2^e with p, q arbitrary-precision
// integers.  The canonical representative has p, q not both even (zero is
// (0, 0, 0)), so structural equality is value equality.  The exponent may
// be negative; 2 is stored as (1, 0, -1).
//
// An element is an algebraic integer iff it lies in Z[(1+sqrt5)/2], i.e.
// (e <= 0) or (e == 1 and p = q mod 2).  The shifted logarithm of the
// algebraic denominator, lad(x), is the k with x = y / 2^(k+1) for an odd
// algebraic integer y; lad(0) is -infinity.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace freesimplex {

class Dyadic5 {
 public:
  Dyadic5() = default;
  Dyadic5(long value);  // NOLINT(google-explicit-constructor)
  Dyadic5(mpz_class p, mpz_class q, std::int64_t e);

  static Dyadic5 sqrt5() { return Dyadic5(0, 1, 0); }
  /// (p + q*sqrt5) / 2^e built from machine integers.
  static Dyadic5 of(long p, long q, std::int64_t e) { return Dyadic5(p, q, e); }

  const mpz_class& p() const { return p_; }
  const mpz_class& q() const { return q_; }
  std::int64_t e() const { return e_; }

  bool is_zero() const { return p_ == 0 && q_ == 0; }

  Dyadic5 operator-() const;
  Dyadic5& operator+=(const Dyadic5& other);
  Dyadic5& operator-=(const Dyadic5& other);
  Dyadic5& operator*=(const Dyadic5& other);

  friend Dyadic5 operator+(Dyadic5 x, const Dyadic5& y) { return x += y; }
  friend Dyadic5 operator-(Dyadic5 x, const Dyadic5& y) { return x -= y; }
  friend Dyadic5 operator*(Dyadic5 x, const Dyadic5& y) { return x *= y; }
  friend bool operator==(const Dyadic5& x, const Dyadic5& y) {
    return x.e_ == y.e_ && x.p_ == y.p_ && x.q_ == y.q_;
  }

  /// x * 2^n; only the exponent moves.
  Dyadic5 mul_pow2(std::int64_t n) const;

  /// Symbolic form "(p+q√5)/2^e" with zero parts and trivial denominators
  /// dropped, e.g. "-1/2^2", "(-5-√5)/2^3", "2".
  std::string to_string() const;

  /// Nearest double; only for diagnostics and tests, never for decisions.
  double to_double() const;

 private:
  void canonicalize();

  mpz_class p_{0};
  mpz_class q_{0};
  std::int64_t e_ = 0;
};

// Arithmetic helpers spelled as free functions, matching the operation names.
inline Dyadic5 add(const Dyadic5& x, const Dyadic5& y) { return x + y; }
inline Dyadic5 mul(const Dyadic5& x, const Dyadic5& y) { return x * y; }
inline Dyadic5 neg(const Dyadic5& x) { return -x; }
inline Dyadic5 mul_pow2(const Dyadic5& x, std::int64_t n) { return x.mul_pow2(n); }

/// Exact sign under the real embedding sqrt5 > 0.
int sign(const Dyadic5& x);

/// sqrt5 -> -sqrt5.
Dyadic5 galois(const Dyadic5& x);

bool is_algebraic_integer(const Dyadic5& x);
bool is_odd_alg_int(const Dyadic5& x);

/// An integer or -infinity.  -infinity absorbs addition and is below every
/// integer.
class LadValue {
 public:
  constexpr LadValue() = default;  // -infinity
  constexpr explicit LadValue(std::int64_t k) : value_(k) {}

  static constexpr LadValue neg_infinity() { return LadValue(); }

  constexpr bool is_neg_infinity() const { return !value_.has_value(); }
  constexpr std::int64_t value() const { return *value_; }

  friend constexpr bool operator==(const LadValue&, const LadValue&) = default;
  friend constexpr std::strong_ordering operator<=>(const LadValue& a, const LadValue& b) {
    if (a.is_neg_infinity() || b.is_neg_infinity()) {
      return static_cast<int>(!a.is_neg_infinity()) <=> static_cast<int>(!b.is_neg_infinity());
    }
    return *a.value_ <=> *b.value_;
  }
  friend constexpr LadValue operator+(const LadValue& a, std::int64_t n) {
    return a.is_neg_infinity() ? a : LadValue(*a.value_ + n);
  }
  friend constexpr LadValue operator+(const LadValue& a, const LadValue& b) {
    return (a.is_neg_infinity() || b.is_neg_infinity()) ? LadValue() : LadValue(*a.value_ + *b.value_);
  }

  /// "-inf" or the decimal value.
  std::string to_string() const;

 private:
  std::optional<std::int64_t> value_;
};

LadValue lad(const Dyadic5& x);

}  // namespace freesimplex

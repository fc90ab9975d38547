#include "freesimplex/goldfield.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace freesimplex {

namespace {

mpz_class shifted(const mpz_class& v, std::int64_t bits) {
  mpz_class out;
  mpz_mul_2exp(out.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  return out;
}

std::string render_numerator(const mpz_class& p, const mpz_class& q, bool* two_terms) {
  std::string out;
  *two_terms = false;
  if (p != 0) out = p.get_str();
  if (q != 0) {
    std::string coef;
    if (q == 1) {
      coef = "";
    } else if (q == -1) {
      coef = "-";
    } else {
      coef = q.get_str();
    }
    if (!out.empty()) {
      *two_terms = true;
      if (q > 0) out += "+";
    }
    out += coef + "√5";
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace

Dyadic5::Dyadic5(long value) : p_(value) { canonicalize(); }

Dyadic5::Dyadic5(mpz_class p, mpz_class q, std::int64_t e) : p_(std::move(p)), q_(std::move(q)), e_(e) {
  canonicalize();
}

void Dyadic5::canonicalize() {
  if (p_ == 0 && q_ == 0) {
    e_ = 0;
    return;
  }
  // mpz_scan1 on a negative value sees the two's complement, which has the
  // same trailing zeros as the magnitude.
  mp_bitcnt_t tz = ~mp_bitcnt_t{0};
  if (p_ != 0) tz = mpz_scan1(p_.get_mpz_t(), 0);
  if (q_ != 0) tz = std::min(tz, mpz_scan1(q_.get_mpz_t(), 0));
  if (tz == 0) return;
  mpz_tdiv_q_2exp(p_.get_mpz_t(), p_.get_mpz_t(), tz);
  mpz_tdiv_q_2exp(q_.get_mpz_t(), q_.get_mpz_t(), tz);
  e_ -= static_cast<std::int64_t>(tz);
}

Dyadic5 Dyadic5::operator-() const {
  Dyadic5 out = *this;
  out.p_ = -out.p_;
  out.q_ = -out.q_;
  return out;
}

Dyadic5& Dyadic5::operator+=(const Dyadic5& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (e_ == other.e_) {
    p_ += other.p_;
    q_ += other.q_;
  } else if (e_ > other.e_) {
    p_ += shifted(other.p_, e_ - other.e_);
    q_ += shifted(other.q_, e_ - other.e_);
  } else {
    p_ = shifted(p_, other.e_ - e_) + other.p_;
    q_ = shifted(q_, other.e_ - e_) + other.q_;
    e_ = other.e_;
  }
  canonicalize();
  return *this;
}

Dyadic5& Dyadic5::operator-=(const Dyadic5& other) { return *this += -other; }

Dyadic5& Dyadic5::operator*=(const Dyadic5& other) {
  // (a + b√5)(c + d√5) = (ac + 5bd) + (ad + bc)√5
  mpz_class p = p_ * other.p_ + 5 * q_ * other.q_;
  mpz_class q = p_ * other.q_ + q_ * other.p_;
  p_ = std::move(p);
  q_ = std::move(q);
  e_ += other.e_;
  canonicalize();
  return *this;
}

Dyadic5 Dyadic5::mul_pow2(std::int64_t n) const {
  if (is_zero()) return *this;
  Dyadic5 out = *this;
  out.e_ -= n;
  return out;
}

std::string Dyadic5::to_string() const {
  bool two_terms = false;
  if (e_ <= 0) return render_numerator(shifted(p_, -e_), shifted(q_, -e_), &two_terms);
  std::string num = render_numerator(p_, q_, &two_terms);
  if (two_terms) num = "(" + num + ")";
  return num + "/2^" + std::to_string(e_);
}

double Dyadic5::to_double() const {
  return std::ldexp(p_.get_d() + q_.get_d() * std::sqrt(5.0), static_cast<int>(-e_));
}

int sign(const Dyadic5& x) {
  const int sp = sgn(x.p());
  const int sq = sgn(x.q());
  if (sp == 0) return sq;
  if (sq == 0 || sp == sq) return sp;
  // Opposite signs: compare p^2 against 5 q^2.
  const mpz_class lhs = x.p() * x.p();
  const mpz_class rhs = 5 * x.q() * x.q();
  return lhs > rhs ? sp : sq;
}

Dyadic5 galois(const Dyadic5& x) { return Dyadic5(x.p(), -x.q(), x.e()); }

bool is_algebraic_integer(const Dyadic5& x) {
  if (x.e() <= 0) return true;
  if (x.e() > 1) return false;
  // e == 1: canonical form forbids both even, so p = q mod 2 means both odd.
  return mpz_odd_p(x.p().get_mpz_t()) && mpz_odd_p(x.q().get_mpz_t());
}

bool is_odd_alg_int(const Dyadic5& x) {
  return is_algebraic_integer(x) && !is_algebraic_integer(x.mul_pow2(-1));
}

std::string LadValue::to_string() const {
  return is_neg_infinity() ? std::string("-inf") : std::to_string(*value_);
}

LadValue lad(const Dyadic5& x) {
  if (x.is_zero()) return LadValue::neg_infinity();
  const bool both_odd = mpz_odd_p(x.p().get_mpz_t()) && mpz_odd_p(x.q().get_mpz_t());
  return LadValue(both_odd ? x.e() - 2 : x.e() - 1);
}

}  // namespace freesimplex

#include <doctest.h>

#include <gmpxx.h>

#include <random>

#include "freesimplex/goldfield.hpp"
#include "freesimplex/json_io.hpp"
#include "oracles.hpp"

using freesimplex::Dyadic5;
using freesimplex::LadValue;
using freesimplex::lad;

namespace {

const Dyadic5 kPhi = Dyadic5::of(1, 1, 1);      // (1+√5)/2
const Dyadic5 kPhiBar = Dyadic5::of(1, -1, 1);  // (1-√5)/2

}  // namespace

TEST_CASE("addition") {
  CHECK(kPhi + kPhiBar == Dyadic5(1));
  const Dyadic5 x = Dyadic5::of(7, -3, 5);
  CHECK(x + Dyadic5() == x);
  CHECK(Dyadic5::of(3, 0, 3) + Dyadic5::of(-5, 0, 3) == Dyadic5::of(-1, 0, 2));
  CHECK(x - x == Dyadic5());
}

TEST_CASE("multiplication") {
  CHECK(kPhi * kPhiBar == Dyadic5(-1));
  const Dyadic5 s4 = Dyadic5::of(0, 1, 2);
  CHECK(s4 * s4 == Dyadic5::of(5, 0, 4));
  const Dyadic5 x = Dyadic5::of(-9, 4, 3);
  CHECK(x * Dyadic5(1) == x);
  CHECK(x * Dyadic5() == Dyadic5());
}

TEST_CASE("negation, powers of two and canonical equality") {
  CHECK(Dyadic5(1).mul_pow2(-1) == Dyadic5::of(1, 0, 1));
  CHECK(-Dyadic5() == Dyadic5());
  CHECK(Dyadic5::of(2, 2, 2) == kPhi);
  CHECK(Dyadic5::of(2, 2, 2).e() == 1);
  CHECK(Dyadic5(2).e() == -1);
  CHECK(Dyadic5(0).e() == 0);
  CHECK(Dyadic5(mpz_class(0), mpz_class(0), 17).e() == 0);
  CHECK(Dyadic5().mul_pow2(5).e() == 0);
}

TEST_CASE("exact sign") {
  CHECK(sign(kPhiBar) == -1);
  CHECK(sign(Dyadic5()) == 0);
  CHECK(sign(Dyadic5::of(-5, 3, 0)) == 1);
  CHECK(sign(Dyadic5::of(5, -3, 0)) == -1);
  CHECK(sign(Dyadic5::of(-9, 4, 0)) == -1);  // 81 > 80
  CHECK(sign(Dyadic5::of(3, 0, 7)) == 1);
}

TEST_CASE("galois conjugation") {
  CHECK(galois(Dyadic5::of(0, 1, 2)) == Dyadic5::of(0, -1, 2));
  CHECK(galois(Dyadic5::of(3, 0, 3)) == Dyadic5::of(3, 0, 3));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 2000; ++t) {
    const Dyadic5 x = oracle::random_dyadic(rng);
    const Dyadic5 y = oracle::random_dyadic(rng);
    CHECK(galois(galois(x)) == x);
    CHECK(galois(x + y) == galois(x) + galois(y));
    CHECK(galois(x * y) == galois(x) * galois(y));
    CHECK(lad(galois(x)) == lad(x));
  }
}

TEST_CASE("algebraic integers and parity") {
  CHECK(is_algebraic_integer(kPhi));
  CHECK_FALSE(is_algebraic_integer(Dyadic5::of(1, 0, 2)));
  CHECK_FALSE(is_algebraic_integer(Dyadic5::of(1, 1, 2)));
  CHECK(is_algebraic_integer(Dyadic5(2)));
  CHECK_FALSE(is_algebraic_integer(Dyadic5::of(1, 0, 1)));

  CHECK(is_odd_alg_int(kPhi));
  CHECK(is_odd_alg_int(kPhiBar));
  CHECK_FALSE(is_odd_alg_int(Dyadic5(2)));
  CHECK(is_odd_alg_int(Dyadic5(1)));
  CHECK(is_odd_alg_int(Dyadic5::sqrt5()));
  CHECK_FALSE(is_odd_alg_int(Dyadic5::of(1, 0, 1)));

  // odd + odd can be odd or even
  CHECK(is_odd_alg_int(kPhi + kPhiBar));
  CHECK_FALSE(is_odd_alg_int(Dyadic5(1) + Dyadic5(1)));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 2000; ++t) {
    const Dyadic5 x = oracle::random_dyadic(rng);
    CHECK(is_algebraic_integer(x) == oracle::is_algebraic_integer(oracle::from_dyadic(x)));
    // Even algebraic integers: 2 * (algebraic integer).
    const Dyadic5 a = oracle::random_dyadic(rng, 50, 1);
    const Dyadic5 b = oracle::random_dyadic(rng, 50, 1);
    if (is_algebraic_integer(a) && is_algebraic_integer(b)) {
      const Dyadic5 even_sum = a.mul_pow2(1) + b.mul_pow2(1);
      CHECK(is_algebraic_integer(even_sum));
      CHECK_FALSE(is_odd_alg_int(even_sum));
    }
  }
}

TEST_CASE("lad examples") {
  CHECK(lad(Dyadic5()).is_neg_infinity());
  CHECK(lad(Dyadic5::of(-1, 0, 2)) == LadValue(1));
  CHECK(lad(Dyadic5::of(0, 1, 2)) == LadValue(1));
  CHECK(lad(Dyadic5::of(3, 0, 3)) == LadValue(2));
  CHECK(lad(Dyadic5::of(-5, -1, 3)) == LadValue(1));
  CHECK(lad(Dyadic5::of(5, -1, 3)) == LadValue(1));
  CHECK(lad(Dyadic5(1)) == LadValue(-1));
  CHECK(lad(Dyadic5(2)) == LadValue(-2));
}

TEST_CASE("lad closed form agrees with the defining property, and k is unique") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 3000; ++t) {
    const Dyadic5 x = oracle::random_dyadic(rng, 1000, 20);
    const auto ks = oracle::lad_by_definition(oracle::from_dyadic(x));
    if (x.is_zero()) {
      CHECK(ks.empty());
      CHECK(lad(x).is_neg_infinity());
      continue;
    }
    REQUIRE(ks.size() == 1);
    CHECK(lad(x) == LadValue(ks.front()));
  }
}

TEST_CASE("canonicalization is idempotent and preserves the value") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-100000, 100000);
  std::uniform_int_distribution<int> shift(0, 30);
  std::uniform_int_distribution<int> expo(-10, 40);
  for (int t = 0; t < 2000; ++t) {
    const mpz_class p = coef(rng);
    const mpz_class q = coef(rng);
    const int e = expo(rng);
    const int s = shift(rng);
    const Dyadic5 x(p, q, e);
    const Dyadic5 scaled(p << s, q << s, e + s);
    CHECK(x == scaled);
    CHECK(Dyadic5(x.p(), x.q(), x.e()) == x);
    if (!x.is_zero()) CHECK((mpz_odd_p(x.p().get_mpz_t()) || mpz_odd_p(x.q().get_mpz_t())));

    mpf_class hp(0, 512);
    mpf_class root5(0, 512);
    mpf_sqrt_ui(root5.get_mpf_t(), 5);
    mpf_class num = mpf_class(p, 512) + mpf_class(q, 512) * root5;
    mpf_class via(0, 512);
    if (e >= 0) {
      mpf_div_2exp(hp.get_mpf_t(), num.get_mpf_t(), static_cast<mp_bitcnt_t>(e));
    } else {
      mpf_mul_2exp(hp.get_mpf_t(), num.get_mpf_t(), static_cast<mp_bitcnt_t>(-e));
    }
    mpf_class cnum = mpf_class(x.p(), 512) + mpf_class(x.q(), 512) * root5;
    if (x.e() >= 0) {
      mpf_div_2exp(via.get_mpf_t(), cnum.get_mpf_t(), static_cast<mp_bitcnt_t>(x.e()));
    } else {
      mpf_mul_2exp(via.get_mpf_t(), cnum.get_mpf_t(), static_cast<mp_bitcnt_t>(-x.e()));
    }
    mpf_class diff = abs(hp - via);
    CHECK(diff < mpf_class("1e-100", 512));
  }
}

TEST_CASE("lad laws on random pairs") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 10000; ++t) {
    const Dyadic5 x = oracle::random_dyadic(rng);
    const Dyadic5 y = oracle::random_dyadic(rng);
    if (!x.is_zero() && !y.is_zero()) CHECK(lad(x * y) == lad(x) + lad(y) + 1);
    CHECK(lad(x * Dyadic5()) == lad(x) + lad(Dyadic5()) + 1);
    const LadValue hi = std::max(lad(x), lad(y));
    CHECK(lad(x + y) <= hi);
    if (lad(x) != lad(y)) CHECK(lad(x + y) == hi);
  }
}

TEST_CASE("sign agrees with interval evaluation") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<long> coef(-1000000, 1000000);
  int decided = 0;
  for (int t = 0; t < 10000; ++t) {
    const long p = coef(rng);
    const long q = coef(rng);
    const Dyadic5 x = Dyadic5::of(p, q, 3);
    // p + q*[2.2360679, 2.2360680], all endpoints exact in long double
    const long double lo_root = 2.2360679L;
    const long double hi_root = 2.2360680L;
    long double a = p + q * lo_root;
    long double b = p + q * hi_root;
    const long double lo = std::min(a, b);
    const long double hi = std::max(a, b);
    if (lo > 1e-6L) {
      CHECK(sign(x) == 1);
      ++decided;
    } else if (hi < -1e-6L) {
      CHECK(sign(x) == -1);
      ++decided;
    }
    CHECK(sign(x) == -sign(-x));
  }
  CHECK(decided > 9900);
}

TEST_CASE("symbolic rendering") {
  CHECK(Dyadic5::of(-1, 0, 2).to_string() == "-1/2^2");
  CHECK(Dyadic5::of(-5, -1, 3).to_string() == "(-5-√5)/2^3");
  CHECK(Dyadic5::of(0, 1, 2).to_string() == "√5/2^2");
  CHECK(Dyadic5(2).to_string() == "2");
  CHECK(Dyadic5().to_string() == "0");
  CHECK(Dyadic5::of(1, -3, -1).to_string() == "2-6√5");
}

TEST_CASE("JSON round trip preserves the exact value") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    Dyadic5 x = oracle::random_dyadic(rng) * oracle::random_dyadic(rng) * oracle::random_dyadic(rng);
    x = x * x * x * x;  // beyond 64-bit coefficients
    const nlohmann::json j = x;
    CHECK(j.at("p").is_string());
    CHECK(nlohmann::json::parse(j.dump()).get<Dyadic5>() == x);
  }
  const nlohmann::json inf = LadValue::neg_infinity();
  CHECK(inf == "-inf");
  CHECK(inf.get<LadValue>().is_neg_infinity());
  CHECK(nlohmann::json(LadValue(-3)).get<LadValue>() == LadValue(-3));
}

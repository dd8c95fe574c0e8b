#include <doctest.h>

#include "apdisc/conjectures.hpp"
#include "oracle.hpp"

using namespace apdisc::conj;
using apdisc::nt::PolyForm;

namespace {

// Least m with C(k,2), k = 1..n, distinct mod m and mod m + gap.
u64 pair_oracle(u64 n, u64 gap) {
  const auto values = oracle::terms(1, -1, n);
  u64 m = 1;
  while (!(oracle::distinct(values, m) && oracle::distinct(values, m + gap))) ++m;
  return m;
}

bool pow2_times_prime_or_one(u64 m) {
  while (m % 2 == 0) m /= 2;
  return m == 1 || oracle::trial_prime(m);
}

}  // namespace

TEST_CASE("twin-gap check examples") {
  const auto a = conjecture11_check(1, 6);
  CHECK(a.observed == 11);
  CHECK(a.predicted == 11);
  CHECK(a.agrees);
  const auto b = conjecture11_check(5, 9);
  CHECK(b.observed == 19);
  CHECK(b.predicted == 19);
  CHECK(b.params == "d=5");
}

TEST_CASE("twin-gap check against brute force") {
  for (u64 d = 1; d <= 4; ++d) {
    for (u64 n = 2; n <= 40; ++n) {
      const auto r = conjecture11_check(d, n);
      REQUIRE(r.observed == pair_oracle(n, 2 * d));
      u64 p = 2 * n - 1;
      while (!(oracle::trial_prime(p) && oracle::trial_prime(p + 2 * d))) ++p;
      REQUIRE(r.predicted == p);
      REQUIRE(r.agrees == (r.observed == r.predicted));
    }
  }
}

TEST_CASE("consecutive-moduli check") {
  const auto one = conjecture12_check(1);
  CHECK(one.observed == 1);
  CHECK(one.agrees);
  CHECK(conjecture12_check(5).observed == 11);
  const auto hundred = conjecture12_check(100);
  CHECK(hundred.observed == 256);
  CHECK(*hundred.m_class);
  CHECK(*hundred.m1_class);  // 257 is prime
  for (u64 n = 1; n <= 60; ++n) {
    const auto r = conjecture12_check(n);
    REQUIRE(r.observed == pair_oracle(n, 1));
    REQUIRE(*r.m_class == pow2_times_prime_or_one(r.observed));
    REQUIRE(*r.m1_class == pow2_times_prime_or_one(r.observed + 1));
    REQUIRE(r.agrees == (*r.m_class && *r.m1_class));
  }
}

TEST_CASE("polynomial-form check examples") {
  const auto a = conjecture13_check(PolyForm::hex, 2, Variant::binomial);
  CHECK(a.observed == 3);
  CHECK(a.predicted == 3);
  const auto b = conjecture13_check(PolyForm::four_square, 3, Variant::binomial);
  CHECK(b.observed == 5);
  CHECK(b.predicted == 5);
  CHECK(conjecture13_lower_bound(Variant::binomial, 1) == 2);
  CHECK(conjecture13_lower_bound(Variant::squares, 3) == 7);
  CHECK(parse_variant("squares") == Variant::squares);
  CHECK_THROWS_AS(parse_variant("cubes"), std::invalid_argument);
}

TEST_CASE("polynomial-form check disagrees at n = 1") {
  // Every modulus separates a single term, so m = 1, but no form value of 1
  // is prime.
  for (auto form : {PolyForm::hex, PolyForm::four_square}) {
    const auto r = conjecture13_check(form, 1, Variant::binomial);
    CHECK(r.observed == 1);
    CHECK_FALSE(r.agrees);
  }
}

TEST_CASE("polynomial-form check against brute force") {
  for (auto form : {PolyForm::hex, PolyForm::four_square}) {
    for (auto variant : {Variant::binomial, Variant::squares}) {
      for (u64 n = 2; n <= 40; ++n) {
        const auto r = conjecture13_check(form, n, variant);
        const auto values = variant == Variant::binomial ? oracle::terms(1, -1, n) : oracle::terms(2, 0, n);
        u64 observed = 0;
        for (u64 x = 0;; ++x) {
          const u64 m = form == PolyForm::hex ? x * x + x + 1 : 4 * x * x + 1;
          if (oracle::distinct(values, m)) {
            observed = m;
            break;
          }
        }
        REQUIRE(r.observed == observed);
        const u64 bound = variant == Variant::binomial ? 2 * n - 1 : 2 * n + 1;
        u64 predicted = 0;
        for (u64 x = 0;; ++x) {
          const u64 m = form == PolyForm::hex ? x * x + x + 1 : 4 * x * x + 1;
          if (m >= bound && oracle::trial_prime(m)) {
            predicted = m;
            break;
          }
        }
        REQUIRE(r.predicted == predicted);
        REQUIRE(r.agrees);
      }
    }
  }
}

TEST_CASE("prime-indexed check examples") {
  const auto a = conjecture14_check(3);
  CHECK(a.observed == 5);
  CHECK(a.predicted == 5);
  CHECK(conjecture14_check(4).observed == 13);
  const auto b = conjecture14_check(10);
  CHECK(b.observed == 37);
  CHECK(b.predicted == 37);
  CHECK_THROWS_AS(conjecture14_check(2), std::invalid_argument);
}

TEST_CASE("prime-indexed differences factor through p_i + p_j - 1") {
  std::vector<u64> primes;
  for (u64 x = 2; primes.size() < 60; ++x) {
    if (oracle::trial_prime(x)) primes.push_back(x);
  }
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const oracle::i128 pi = primes[i], pj = primes[j];
      REQUIRE(6 * pj * (pj - 1) - 6 * pi * (pi - 1) == 6 * (pj - pi) * (pi + pj - 1));
    }
  }
  for (u64 n = 3; n <= 30; ++n) {
    std::vector<oracle::i128> values;
    for (u64 k = 0; k < n; ++k) values.push_back(6 * static_cast<oracle::i128>(primes[k]) * (primes[k] - 1));
    const auto r = conjecture14_check(n);
    REQUIRE(r.observed == oracle::least_modulus(values));
    u64 q = primes[n - 1];
    auto blocked = [&](u64 p) {
      for (u64 i = 0; i < n; ++i) {
        for (u64 j = i + 1; j < n; ++j) {
          if ((primes[i] + primes[j] - 1) % p == 0) return true;
        }
      }
      return false;
    };
    while (!(oracle::trial_prime(q) && !blocked(q))) ++q;
    REQUIRE(r.predicted == q);
  }
}

TEST_CASE("disagreements carry a certificate") {
  CHECK_FALSE(conjecture11_check(1, 6).certificate.has_value());
  const auto r = conjecture11_check(1, 4);
  CHECK_FALSE(r.agrees);
  REQUIRE(r.certificate.has_value());
  CHECK_FALSE(r.certificate->empty());
  CHECK(conjecture13_check(PolyForm::hex, 1, Variant::squares).certificate.has_value());
}

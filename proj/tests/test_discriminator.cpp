#include <doctest.h>

#include <random>

#include "apdisc/discriminator.hpp"
#include "oracle.hpp"

using namespace apdisc::disc;
using apdisc::nt::gcd;
using apdisc::nt::mod_floor;

namespace {

const HalfQuadratic kFourK4KMinus1(32, -8);  // 4k(4k-1)
const HalfQuadratic kBinomial = HalfQuadratic::binomial2();

std::vector<ApCase> all_cases(i64 d_min, i64 d_max) {
  std::vector<ApCase> out;
  for (i64 d = d_min; d <= d_max; ++d) {
    for (i64 c = -d + 1; c < d; ++c) {
      if (gcd(mod_floor(c, d), d) == 1) out.push_back(ApCase::make(d, c));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("HalfQuadratic requires A + B even") {
  CHECK_THROWS_AS(HalfQuadratic(1, 0), std::invalid_argument);
  CHECK_NOTHROW(HalfQuadratic(3, -1));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const i64 a = static_cast<i64>(rng() % 2001) - 1000;
    const i64 b = static_cast<i64>(rng() % 2001) - 1000;
    if ((a + b) % 2 != 0) continue;
    for (u64 k = 1; k <= 10'000; ++k) {
      const oracle::i128 twice = static_cast<oracle::i128>(a) * k * k + static_cast<oracle::i128>(b) * k;
      REQUIRE(twice % 2 == 0);
    }
    REQUIRE(HalfQuadratic(a, b).value(0) == 0);
  }
}

TEST_CASE("ApCase builds 2 r(d) k (d k - c)") {
  for (const auto& ap : all_cases(2, 36)) {
    const auto direct = oracle::ap_terms(ap.d, ap.c, 10);
    for (u64 k = 1; k <= 10; ++k) REQUIRE(ap.seq.value(k) == direct[k - 1]);
  }
  CHECK(ApCase::make(12, 5).rad == 6);
  CHECK_THROWS_AS(ApCase::make(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(ApCase::make(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(ApCase::make(1, 0), std::invalid_argument);
}

TEST_CASE("eval_mod examples") {
  CHECK(eval_mod(kFourK4KMinus1, 2, 16) == 8);
  CHECK(eval_mod(HalfQuadratic(7, 5), 1, 1) == 0);
  CHECK(eval_mod(kBinomial, 5, 11) == 10);
}

TEST_CASE("eval_mod matches exact values for large coefficients") {
  std::mt19937_64 rng(5);
  // The largest progression coefficient in the tables: d = 36, r = 6.
  const ApCase big = ApCase::make(36, 23);
  for (int i = 0; i < 20000; ++i) {
    const u64 k = 1 + rng() % (u64{1} << 20);
    const u64 m = 1 + rng() % (u64{1} << 40);
    REQUIRE(eval_mod(big.seq, k, m) == oracle::residue(big.seq.value(k), m));
    const i64 a = static_cast<i64>(rng() % 200001) - 100000;
    const i64 b = a % 2 == 0 ? -2 * a : a + 2;
    const HalfQuadratic seq(a, b);
    REQUIRE(eval_mod(seq, k, m) == oracle::residue(oracle::half_quadratic(a, b, k), m));
  }
}

TEST_CASE("pairwise_distinct examples") {
  CHECK(pairwise_distinct(kFourK4KMinus1, 6, 17));
  CHECK_FALSE(pairwise_distinct(kFourK4KMinus1, 6, 16));
  CHECK(pairwise_distinct(HalfQuadratic(3, 1), 1, 1));
  CHECK_THROWS_AS(pairwise_distinct(kBinomial, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(pairwise_distinct(kBinomial, 5, 0), std::invalid_argument);
}

TEST_CASE("pairwise_distinct_fast examples") {
  CHECK(pairwise_distinct_fast(ApCase::make(4, 1), 6, 17));
  CHECK_FALSE(pairwise_distinct_fast(ApCase::make(4, 1), 6, 16));
  CHECK(pairwise_distinct_fast(ApCase::make(5, -1), 1, 1));
}

TEST_CASE("fast path, occupancy scan and brute force agree on a small grid") {
  for (const auto& ap : all_cases(2, 9)) {
    for (u64 n = 1; n <= 30; ++n) {
      const auto values = oracle::ap_terms(ap.d, ap.c, n);
      for (u64 m = 1; m <= 300; ++m) {
        const bool expected = oracle::distinct(values, m);
        REQUIRE_MESSAGE(pairwise_distinct(ap.seq, n, m) == expected, ap.d << " " << ap.c << " " << n << " " << m);
        REQUIRE_MESSAGE(pairwise_distinct_fast(ap, n, m) == expected, ap.d << " " << ap.c << " " << n << " " << m);
      }
    }
  }
}

TEST_CASE("fast path agrees with the scan for large moduli") {
  std::mt19937_64 rng(17);
  const auto cases = all_cases(4, 36);
  for (int i = 0; i < 3000; ++i) {
    const auto& ap = cases[rng() % cases.size()];
    const u64 n = 2 + rng() % 300;
    const u64 m = n + rng() % (u64{1} << 34);
    REQUIRE(pairwise_distinct_fast(ap, n, m) == pairwise_distinct(ap.seq, n, m));
  }
}

TEST_CASE("residue_count") {
  CHECK(residue_count(kBinomial, 5, 11) == 5);
  CHECK(residue_count(kBinomial, 5, 1) == 1);
  CHECK(residue_count(kBinomial, 4, 3) == 2);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 3000; ++i) {
    const i64 a = static_cast<i64>(rng() % 61) - 30;
    const i64 b = (a % 2 == 0 ? 0 : 1) + 2 * (static_cast<i64>(rng() % 31) - 15);
    const HalfQuadratic seq(a, b);
    const u64 n = 1 + rng() % 60;
    const u64 m = 1 + rng() % 200;
    const u64 count = residue_count(seq, n, m);
    REQUIRE(count == oracle::count_residues(oracle::terms(a, b, n), m));
    REQUIRE((count == n) == pairwise_distinct(seq, n, m));
    if (n >= 2 && m < n) REQUIRE_FALSE(pairwise_distinct(seq, n, m));
  }
}

TEST_CASE("a collision persists for longer prefixes") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 2000; ++i) {
    const i64 a = 2 * (static_cast<i64>(rng() % 41) - 20);
    const i64 b = 2 * (static_cast<i64>(rng() % 41) - 20);
    const HalfQuadratic seq(a, b);
    const u64 n = 1 + rng() % 40;
    const u64 m = 1 + rng() % 150;
    if (pairwise_distinct(seq, n, m)) continue;
    for (u64 longer = n; longer <= n + 20; ++longer) REQUIRE_FALSE(pairwise_distinct(seq, longer, m));
  }
}

TEST_CASE("least_modulus examples") {
  CHECK(least_modulus(kFourK4KMinus1, 6) == 17);
  CHECK(least_modulus(HalfQuadratic(16, -8), 5) == 19);  // 4k(2k-1)
  CHECK(least_modulus(HalfQuadratic(5, 3), 1) == 1);
  CHECK_THROWS_AS(least_modulus(kBinomial, 0), std::invalid_argument);
}

TEST_CASE("least_modulus is the least separating modulus") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 400; ++i) {
    const i64 a = static_cast<i64>(rng() % 81) - 40;
    const i64 b = (a % 2 == 0 ? 0 : 1) + 2 * (static_cast<i64>(rng() % 41) - 20);
    if (a == 0 && b == 0) continue;  // constant sequence: no modulus separates it
    const u64 n = 1 + rng() % 40;
    const auto values = oracle::terms(a, b, n);
    // Sequences with f(k) == f(l) for k != l have no discriminator.
    std::set<oracle::i128> exact(values.begin(), values.end());
    if (exact.size() != values.size()) continue;
    const HalfQuadratic seq(a, b);
    const u64 m = least_modulus(seq, n);
    REQUIRE(m == oracle::least_modulus(values));
    REQUIRE(m == least_modulus(seq, n, ScanStart::one));
  }
}

TEST_CASE("least_modulus_pair") {
  CHECK(least_modulus_pair(kBinomial, 5, 2) == 11);
  CHECK(least_modulus_pair(kBinomial, 1, 2) == 1);
  CHECK(least_modulus_pair(kBinomial, 6, 4) == 13);
  for (u64 n = 1; n <= 40; ++n) {
    for (u64 gap : {1, 2, 4, 6}) {
      const auto values = oracle::terms(1, -1, n);
      u64 m = 1;
      while (!(oracle::distinct(values, m) && oracle::distinct(values, m + gap))) ++m;
      REQUIRE(least_modulus_pair(kBinomial, n, gap) == m);
    }
  }
}

TEST_CASE("find_collision certificates") {
  const auto hit = find_collision(kFourK4KMinus1, 6, 16);
  REQUIRE(hit.has_value());
  CHECK(*hit == Collision{1, 5, 16});
  CHECK_FALSE(find_collision(kFourK4KMinus1, 6, 17).has_value());
  const std::vector<u64> values = {12, 36, 120};
  CHECK_FALSE(find_collision(values, 5).has_value());
  const auto v = find_collision(values, 4);
  REQUIRE(v.has_value());
  CHECK(v->k == 1);
  CHECK(v->l == 2);
}

TEST_CASE("divisor-pair collisions below the predicted prime") {
  // Every prime at most the upper window end is separating exactly when it is
  // in the class c mod d and above (d(2n-1)-c)/(d-1).
  for (i64 d = 3; d <= 8; ++d) {
    const i64 q = std::max<i64>(11, d) - 2;  // eps = 2/q
    for (i64 c = -d + 1; c < d; ++c) {
      if (gcd(mod_floor(c, d), d) != 1) continue;
      const auto ap = ApCase::make(d, c);
      for (u64 n = 3 * d; n <= 3 * static_cast<u64>(d) + 20; ++n) {
        const oracle::i128 top = d * ((2 * q + 2) * static_cast<oracle::i128>(n) - q) - c * q;
        for (u64 p = 2; static_cast<oracle::i128>(p) * q * (d - 1) <= top; ++p) {
          if (!oracle::trial_prime(p)) continue;
          const bool in_class = mod_floor(static_cast<i64>(p) - c, d) == 0;
          const bool above = static_cast<oracle::i128>(p) * (d - 1) > d * (2 * static_cast<oracle::i128>(n) - 1) - c;
          REQUIRE(pairwise_distinct(ap.seq, n, p) == (in_class && above));
        }
      }
    }
  }
}

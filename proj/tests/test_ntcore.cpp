#include <doctest.h>

#include <random>
#include <vector>

#include "apdisc/ntcore.hpp"
#include "oracle.hpp"

using namespace apdisc::nt;

namespace {

std::vector<u64> smallest_factor_table(u64 limit) {
  std::vector<u64> spf(limit + 1, 0);
  for (u64 i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    for (u64 j = i; j <= limit; j += i) {
      if (spf[j] == 0) spf[j] = i;
    }
  }
  return spf;
}

}  // namespace

TEST_CASE("is_prime examples") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK(is_prime(48619));
  CHECK(oracle::trial_prime(48619));
}

TEST_CASE("is_prime agrees with a sieve up to 10^6") {
  const auto spf = smallest_factor_table(1'000'000);
  for (u64 x = 0; x <= 1'000'000; ++x) {
    const bool sieve = x >= 2 && spf[x] == x;
    REQUIRE_MESSAGE(is_prime(x) == sieve, "x = " << x);
  }
}

TEST_CASE("is_prime on hard 64-bit inputs") {
  CHECK(is_prime(2305843009213693951ULL));   // 2^61 - 1
  CHECK(is_prime(18446744073709551557ULL));  // largest prime below 2^64
  CHECK_FALSE(is_prime(18446744073709551615ULL));
  CHECK_FALSE(is_prime(3215031751ULL));           // strong pseudoprime to 2, 3, 5, 7
  CHECK_FALSE(is_prime(3825123056546413051ULL));  // strong pseudoprime to bases up to 23
  CHECK_FALSE(is_prime(4294967297ULL));  // 641 * 6700417
  CHECK_FALSE(is_prime(1000000007ULL * 998244353ULL));
}

TEST_CASE("is_prime matches trial division on random 36-bit inputs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<u64> dist(1, u64{1} << 36);
  for (int i = 0; i < 800; ++i) {
    const u64 x = dist(rng) | 1;
    REQUIRE_MESSAGE(is_prime(x) == oracle::trial_prime(x), "x = " << x);
  }
}

TEST_CASE("radical") {
  CHECK(radical(1) == 1);
  CHECK(radical(12) == 6);
  CHECK(radical(36) == 6);
  const auto spf = smallest_factor_table(100'000);
  for (u64 d = 1; d <= 100'000; ++d) {
    std::vector<u64> primes;
    for (u64 x = d; x > 1; x /= spf[x]) {
      if (primes.empty() || primes.back() != spf[x]) primes.push_back(spf[x]);
    }
    const u64 r = radical(d);
    REQUIRE(d % r == 0);
    u64 expected = 1;
    for (u64 p : primes) {
      expected *= p;
      REQUIRE((r / p) % p != 0);
    }
    REQUIRE(r == expected);
  }
}

TEST_CASE("euler_phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(97) == 96);
  for (u64 d = 1; d <= 300; ++d) {
    u64 count = 0;
    for (u64 a = 1; a <= d; ++a) count += gcd(a, d) == 1;
    REQUIRE(euler_phi(d) == count);
  }
}

TEST_CASE("first_prime_in_ap examples") {
  CHECK(first_prime_in_ap({1, 4, 16}) == 17);
  CHECK(first_prime_in_ap({-3, 4, 25}) == 29);
  CHECK(first_prime_in_ap({0, 1, 2}) == 2);
}

TEST_CASE("first_prime_in_ap is the least class prime at or above the bound") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const u64 modulus = 1 + rng() % 40;
    const i64 residue = static_cast<i64>(rng() % (2 * modulus)) - static_cast<i64>(modulus);
    if (modulus > 1 && gcd(mod_floor(residue, modulus), modulus) != 1) continue;
    const u64 lower = 2 + rng() % 5000;
    const u64 p = first_prime_in_ap({residue, modulus, lower});
    REQUIRE(oracle::trial_prime(p));
    REQUIRE(p >= lower);
    REQUIRE(p % modulus == mod_floor(residue, modulus));
    for (u64 x = lower; x < p; ++x) {
      REQUIRE_FALSE((oracle::trial_prime(x) && x % modulus == mod_floor(residue, modulus)));
    }
  }
}

TEST_CASE("first_prime_in_ap errors") {
  CHECK_THROWS_AS(first_prime_in_ap({2, 4, 3}), std::invalid_argument);
  CHECK_THROWS_AS(first_prime_in_ap({1, 4, 1}), std::invalid_argument);
  CHECK_THROWS_AS(first_prime_in_ap({1, 0, 5}), std::invalid_argument);
  // 1 mod 4 primes start at 5; a ceiling of 4 cannot reach one.
  CHECK_THROWS_AS(first_prime_in_ap({1, 4, 2}, 4), ScanCeilingExceeded);
  // Nothing in [24, 28] is prime.
  CHECK_THROWS_AS(first_prime_in_ap({0, 1, 24}, 28), ScanCeilingExceeded);
}

TEST_CASE("segmented sieve matches trial division across segment boundaries") {
  const u64 lo = kSieveSegmentBytes - 500;
  const u64 hi = 2 * kSieveSegmentBytes + 777;
  const auto primes = primes_in_range(lo, hi);
  std::size_t i = 0;
  for (u64 x = lo; x <= hi; ++x) {
    if (oracle::trial_prime(x)) {
      REQUIRE(i < primes.size());
      REQUIRE(primes[i++] == x);
    }
  }
  CHECK(i == primes.size());
  CHECK(primes_in_range(0, 10) == std::vector<u64>{2, 3, 5, 7});
  CHECK(primes_in_range(14, 16).empty());
  CHECK(primes_in_range(10, 5).empty());
}

TEST_CASE("nth_primes") {
  CHECK(nth_primes(1) == std::vector<u64>{2});
  CHECK(nth_primes(3) == std::vector<u64>{2, 3, 5});
  CHECK(nth_primes(10).back() == 29);
  CHECK(nth_primes(1000).back() == 7919);
  CHECK_THROWS_AS(nth_primes(0), std::invalid_argument);
}

TEST_CASE("classify_two_power_times_prime") {
  CHECK(classify_two_power_times_prime(1));
  CHECK(classify_two_power_times_prime(24));
  CHECK_FALSE(classify_two_power_times_prime(36));
  const auto spf = smallest_factor_table(1'000'000);
  for (u64 m = 1; m <= 1'000'000; ++m) {
    u64 odd = m;
    while (odd % 2 == 0) odd /= 2;
    const bool expected = odd == 1 || spf[odd] == odd;
    REQUIRE_MESSAGE(classify_two_power_times_prime(m) == expected, "m = " << m);
  }
}

TEST_CASE("first_prime_of_form") {
  CHECK(first_prime_of_form(PolyForm::hex, 9) == 13);
  CHECK(first_prime_of_form(PolyForm::hex, 2) == 3);
  CHECK(first_prime_of_form(PolyForm::four_square, 6) == 17);
  CHECK_THROWS_AS(first_prime_of_form(PolyForm::hex, 14, 20), ScanCeilingExceeded);
  CHECK_THROWS_AS(first_prime_of_form(PolyForm::hex, 1), std::invalid_argument);
  CHECK(parse_poly_form("4x2+1") == PolyForm::four_square);
  CHECK_THROWS_AS(parse_poly_form("x^3"), std::invalid_argument);
}

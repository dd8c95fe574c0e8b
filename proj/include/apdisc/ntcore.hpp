#pragma once

// Deterministic 64-bit primality, sieving and prime search in residue
// classes and along quadratic polynomial forms.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apdisc::nt {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline constexpr u64 kDefaultScanCeiling = u64{1} << 40;

/// Raised when a bounded search runs past its ceiling without an answer.
class ScanCeilingExceeded : public std::runtime_error {
public:
  ScanCeilingExceeded(const std::string& what, u64 ceiling)
      : std::runtime_error(what), ceiling_(ceiling) {}
  u64 ceiling() const noexcept { return ceiling_; }

private:
  u64 ceiling_;
};

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m);

/// Floor-style remainder: result in [0, m) for any sign of `a`. Requires m > 0.
inline u64 mod_floor(i128 a, u64 m) {
  i128 r = a % static_cast<i128>(m);
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

u64 gcd(u64 a, u64 b);

/// Inverse of a modulo m, or 0 when gcd(a, m) != 1 (m == 1 gives 0 too).
u64 inverse_mod(u64 a, u64 m);

/// Miller-Rabin with the first twelve prime bases; exact for every 64-bit input.
bool is_prime(u64 x);

/// Product of the distinct primes dividing d; radical(1) == 1.
u64 radical(u64 d);

u64 euler_phi(u64 d);

/// Distinct prime divisors of d in increasing order (trial division).
std::vector<u64> prime_divisors(u64 d);

/// Target of a prime-in-progression search. `residue` may be negative; only
/// its class modulo `modulus` matters.
struct PrimeQuery {
  i64 residue = 0;
  u64 modulus = 1;
  u64 lower_bound = 2;

  /// Throws std::invalid_argument unless modulus >= 1, lower_bound >= 2 and
  /// the residue class is coprime to the modulus.
  void validate() const;
};

/// Least prime p >= q.lower_bound with p == q.residue (mod q.modulus).
/// Throws ScanCeilingExceeded when the scan passes `ceiling`.
u64 first_prime_in_ap(const PrimeQuery& q, u64 ceiling = kDefaultScanCeiling);

/// Segment size used by the sieve: 256 KiB of byte flags.
inline constexpr std::size_t kSieveSegmentBytes = std::size_t{256} * 1024;

/// Calls `visit(p)` for every prime p in [lo, hi], in increasing order, using
/// a segmented sieve of Eratosthenes.
void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& visit);

std::vector<u64> primes_in_range(u64 lo, u64 hi);

/// The first n primes [2, 3, 5, ...]. Throws std::invalid_argument if n == 0.
std::vector<u64> nth_primes(std::size_t n);

/// True iff m / 2^v2(m) is 1 or prime.
bool classify_two_power_times_prime(u64 m);

enum class PolyForm {
  hex,          // x^2 + x + 1
  four_square,  // 4x^2 + 1
};

u64 form_value(PolyForm form, u64 x);
std::string to_string(PolyForm form);
/// Accepts "x2+x+1"/"hex" and "4x2+1"/"four-square".
PolyForm parse_poly_form(const std::string& text);

/// Least prime p >= lower_bound of the form f(x), x >= 0.
u64 first_prime_of_form(PolyForm form, u64 lower_bound,
                        u64 ceiling = kDefaultScanCeiling);

}  // namespace apdisc::nt

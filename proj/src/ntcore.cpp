#include "apdisc/ntcore.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

namespace apdisc::nt {

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 inverse_mod(u64 a, u64 m) {
  if (m <= 1) return 0;
  i128 old_r = a % m, r = m;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    i128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return 0;
  return mod_floor(old_s, m);
}

namespace {

constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool strong_probable_prime(u64 n, u64 a, u64 odd_part, int twos) {
  u64 x = powmod(a, odd_part, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < twos; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

u64 isqrt(u64 x) {
  auto r = static_cast<u64>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && static_cast<u128>(r) * r > x) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

bool is_prime(u64 x) {
  if (x < 2) return false;
  for (u64 p : kWitnesses) {
    if (x == p) return true;
    if (x % p == 0) return false;
  }
  if (x < 41 * 41) return true;
  const u64 m = x - 1;
  const int twos = std::countr_zero(m);
  const u64 odd_part = m >> twos;
  return std::ranges::all_of(
      kWitnesses, [&](u64 a) { return strong_probable_prime(x, a, odd_part, twos); });
}

std::vector<u64> prime_divisors(u64 d) {
  std::vector<u64> out;
  for (u64 p = 2; p * p <= d; p += (p == 2 ? 1 : 2)) {
    if (d % p == 0) {
      out.push_back(p);
      while (d % p == 0) d /= p;
    }
  }
  if (d > 1) out.push_back(d);
  return out;
}

u64 radical(u64 d) {
  u64 r = 1;
  for (u64 p : prime_divisors(d)) r *= p;
  return r;
}

u64 euler_phi(u64 d) {
  u64 phi = d;
  for (u64 p : prime_divisors(d)) phi = phi / p * (p - 1);
  return phi;
}

void PrimeQuery::validate() const {
  if (modulus == 0) throw std::invalid_argument("PrimeQuery: modulus must be >= 1");
  if (lower_bound < 2) throw std::invalid_argument("PrimeQuery: lower_bound must be >= 2");
  if (modulus > 1 && gcd(mod_floor(residue, modulus), modulus) != 1) {
    throw std::invalid_argument("PrimeQuery: residue class is not coprime to the modulus");
  }
}

u64 first_prime_in_ap(const PrimeQuery& q, u64 ceiling) {
  q.validate();
  const u64 target = mod_floor(q.residue, q.modulus);
  const u64 offset = (target + q.modulus - q.lower_bound % q.modulus) % q.modulus;
  if (q.lower_bound > ceiling || offset > ceiling - q.lower_bound) {
    throw ScanCeilingExceeded("first_prime_in_ap: lower bound beyond scan ceiling", ceiling);
  }
  for (u64 x = q.lower_bound + offset; x <= ceiling; x += q.modulus) {
    if (is_prime(x)) return x;
    if (ceiling - x < q.modulus) break;
  }
  throw ScanCeilingExceeded("first_prime_in_ap: no prime in class below scan ceiling", ceiling);
}

void for_each_prime(u64 lo, u64 hi, const std::function<void(u64)>& visit) {
  lo = std::max<u64>(lo, 2);
  if (hi < lo) return;
  const u64 root = isqrt(hi);

  std::vector<u64> base;
  {
    std::vector<char> small(root + 1, 1);
    for (u64 i = 2; i <= root; ++i) {
      if (!small[i]) continue;
      base.push_back(i);
      for (u64 j = i * i; j <= root; j += i) small[j] = 0;
    }
  }

  std::vector<char> segment(kSieveSegmentBytes);
  for (u64 low = lo; low <= hi;) {
    const u64 high = (hi - low < kSieveSegmentBytes - 1) ? hi : low + kSieveSegmentBytes - 1;
    const std::size_t len = high - low + 1;
    std::fill_n(segment.begin(), len, 1);
    for (u64 p : base) {
      if (p * p > high) break;
      u64 start = std::max(p * p, (low + p - 1) / p * p);
      for (u64 j = start; j <= high; j += p) {
        segment[j - low] = 0;
        if (high - j < p) break;
      }
    }
    for (std::size_t i = 0; i < len; ++i) {
      if (segment[i]) visit(low + i);
    }
    if (high == hi) break;
    low = high + 1;
  }
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
  std::vector<u64> out;
  for_each_prime(lo, hi, [&](u64 p) { out.push_back(p); });
  return out;
}

std::vector<u64> nth_primes(std::size_t n) {
  if (n == 0) throw std::invalid_argument("nth_primes: n must be >= 1");
  // p_n < n (ln n + ln ln n) for n >= 6.
  u64 bound = 15;
  if (n >= 6) {
    const double x = static_cast<double>(n);
    bound = static_cast<u64>(x * (std::log(x) + std::log(std::log(x)))) + 1;
  }
  std::vector<u64> out = primes_in_range(2, bound);
  out.resize(n);
  return out;
}

bool classify_two_power_times_prime(u64 m) {
  if (m == 0) return false;
  m >>= std::countr_zero(m);
  return m == 1 || is_prime(m);
}

u64 form_value(PolyForm form, u64 x) {
  switch (form) {
    case PolyForm::hex:
      return x * x + x + 1;
    case PolyForm::four_square:
      return 4 * x * x + 1;
  }
  return 0;
}

std::string to_string(PolyForm form) {
  return form == PolyForm::hex ? "x2+x+1" : "4x2+1";
}

PolyForm parse_poly_form(const std::string& text) {
  if (text == "x2+x+1" || text == "x^2+x+1" || text == "hex") return PolyForm::hex;
  if (text == "4x2+1" || text == "4x^2+1" || text == "four-square") return PolyForm::four_square;
  throw std::invalid_argument("unknown polynomial form: " + text);
}

u64 first_prime_of_form(PolyForm form, u64 lower_bound, u64 ceiling) {
  if (lower_bound < 2) throw std::invalid_argument("first_prime_of_form: lower_bound must be >= 2");
  for (u64 x = 0;; ++x) {
    const u64 v = form_value(form, x);
    if (v > ceiling) break;
    if (v >= lower_bound && is_prime(v)) return v;
  }
  throw ScanCeilingExceeded("first_prime_of_form: no prime of form " + to_string(form) +
                                " below scan ceiling",
                            ceiling);
}

}  // namespace apdisc::nt

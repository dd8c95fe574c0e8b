#include "apdisc/verifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "apdisc/tables.hpp"

namespace apdisc::verify {

using nt::i128;
using Clock = std::chrono::steady_clock;

namespace {

bool is_power_of(u64 x, u64 base) {
  if (x < base) return false;
  while (x % base == 0) x /= base;
  return x == 1;
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

VerificationRecord compare(std::string case_id, i64 d, i64 c, u64 n,
                           const disc::HalfQuadratic& seq, u64 predicted, Clock::time_point start) {
  VerificationRecord r;
  r.case_id = std::move(case_id);
  r.d = d;
  r.c = c;
  r.n = n;
  r.least_m = disc::least_modulus(seq, n);
  r.predicted = predicted;
  r.match = r.least_m == r.predicted;
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
  return r;
}

}  // namespace

u64 predicted_lower_bound(i64 d, i64 c, u64 n) {
  if (d < 2) throw std::invalid_argument("predicted_lower_bound: d must be >= 2");
  const i128 num = static_cast<i128>(2) * d * static_cast<i128>(n) - c;
  return static_cast<u64>(ceil_div(num, d - 1));
}

u64 predicted_prime(i64 d, i64 c, u64 n, u64 ceiling) {
  const u64 lower = std::max<u64>(predicted_lower_bound(d, c, n), 2);
  return nt::first_prime_in_ap({c, static_cast<u64>(d), lower}, ceiling);
}

VerificationRecord verify_theorem11(i64 d, i64 c, u64 n, u64 ceiling) {
  if (d < 4) throw std::invalid_argument("verify_theorem11: d must be >= 4");
  if (n == 0) throw std::invalid_argument("verify_theorem11: n must be >= 1");
  const auto start = Clock::now();
  const auto ap = disc::ApCase::make(d, c);
  const u64 predicted = predicted_prime(d, c, n, ceiling);
  return compare("ap", d, c, n, ap.seq, predicted, start);
}

VerificationRecord verify_remark11(int d) {
  const auto row = tables::row(d);
  if (!row) throw std::invalid_argument("verify_remark11: d must lie in [4, 36]");
  return verify_theorem11(d, row->counter_c, row->m_threshold);
}

std::optional<u64> corollary_threshold(i64 d, i64 c) {
  if (d == 4 && (c == 1 || c == -1)) return 6;
  if (d == 5) {
    switch (c) {
      case 1: return 8;
      case 2: return 10;
      case -1: return 15;
      case -2: return 5;
      default: break;
    }
  }
  return std::nullopt;
}

VerificationRecord verify_corollary11(i64 d, i64 c, u64 n, u64 ceiling) {
  if (!corollary_threshold(d, c)) {
    throw std::invalid_argument("verify_corollary11: (d, c) must be (4, +-1) or (5, +-1 / +-2)");
  }
  return verify_theorem11(d, c, n, ceiling);
}

bool class_member(const ModulusClass& mc, u64 x) {
  using Kind = ModulusClass::Kind;
  switch (mc.kind) {
    case Kind::prime_any:
      return nt::is_prime(x);
    case Kind::prime_in_ap:
      return nt::is_prime(x) && x % mc.modulus == nt::mod_floor(mc.residue, mc.modulus);
    case Kind::prime_or_pow2:
      return nt::is_prime(x) || is_power_of(x, 2);
    case Kind::prime1mod3_or_pow3:
      return (nt::is_prime(x) && x % 3 == 1) || is_power_of(x, 3);
    case Kind::prime2mod3_or_pow3:
      return (nt::is_prime(x) && x % 3 == 2) || is_power_of(x, 3);
  }
  return false;
}

u64 least_class_member(const ModulusClass& mc, u64 bound, u64 ceiling) {
  for (u64 x = std::max<u64>(bound, 1); x <= ceiling; ++x) {
    if (class_member(mc, x)) return x;
  }
  throw nt::ScanCeilingExceeded("least_class_member: no member below scan ceiling", ceiling);
}

const std::vector<SmallCaseInfo>& small_cases() {
  using Kind = ModulusClass::Kind;
  static const std::vector<SmallCaseInfo> cases = {
      {SmallCase::two_minus, "4k(2k-1)", 2, 1, {Kind::prime_or_pow2}, 5, 4, 1},
      {SmallCase::two_plus, "4k(2k+1)", 2, -1, {Kind::prime_or_pow2}, 7, 4, 0},
      {SmallCase::three_minus1, "6k(3k-1)", 3, 1, {Kind::prime1mod3_or_pow3}, 4, 3, 0},
      {SmallCase::three_plus1, "6k(3k+1)", 3, -1, {Kind::prime2mod3_or_pow3}, 5, 3, 0},
      {SmallCase::three_minus2, "6k(3k-2)", 3, 2, {Kind::prime2mod3_or_pow3}, 3, 3, 1},
      {SmallCase::three_plus2, "6k(3k+2)", 3, -2, {Kind::prime1mod3_or_pow3}, 8, 3, 0},
  };
  return cases;
}

const SmallCaseInfo& info(SmallCase id) {
  return small_cases()[static_cast<std::size_t>(id)];
}

std::optional<SmallCase> parse_small_case(const std::string& name) {
  for (const auto& c : small_cases()) {
    if (name == c.name) return c.id;
  }
  return std::nullopt;
}

VerificationRecord verify_theorem12(SmallCase id, u64 n, u64 ceiling) {
  if (n == 0) throw std::invalid_argument("verify_theorem12: n must be >= 1");
  const auto start = Clock::now();
  const SmallCaseInfo& ci = info(id);
  const auto ap = disc::ApCase::make(ci.d, ci.c);
  const u64 bound = ci.slope * n - ci.deficit;
  const u64 predicted = least_class_member(ci.target, bound, ceiling);
  return compare(ci.name, ci.d, ci.c, n, ap.seq, predicted, start);
}

VerificationRecord verify_remark12(Sign sign, u64 n, u64 ceiling) {
  if (n == 0) throw std::invalid_argument("verify_remark12: n must be >= 1");
  const auto start = Clock::now();
  const bool minus = sign == Sign::minus;
  // 8k(2k -+ 1) = (32 k^2 -+ 16 k) / 2
  const disc::HalfQuadratic seq(32, minus ? -16 : 16);
  const u64 bound = minus ? 4 * n - 1 : 4 * n + 1;
  const u64 predicted = least_class_member({ModulusClass::Kind::prime_any}, bound, ceiling);
  return compare(minus ? "8k(2k-1)" : "8k(2k+1)", 2, minus ? 1 : -1, n, seq, predicted, start);
}

Rational default_window_eps(i64 d) { return {2, std::max<i64>(11, d) - 2}; }

std::vector<u64> window_missing_residues(i64 d, u64 n, Rational eps) {
  if (d < 2) throw std::invalid_argument("prime window: d must be >= 2");
  if (eps.den <= 0 || eps.num <= 0) throw std::invalid_argument("prime window: eps must be positive");
  const i128 nn = n;
  // Lower end 2dn/(d-1); upper end ((2 den + num) n - 2 den) d / (den (d-1)).
  const i128 lo_num = 2 * static_cast<i128>(d) * nn;
  const i128 lo_den = d - 1;
  const i128 hi_num = ((2 * static_cast<i128>(eps.den) + eps.num) * nn - 2 * static_cast<i128>(eps.den)) * d;
  const i128 hi_den = static_cast<i128>(eps.den) * (d - 1);

  const u64 ud = static_cast<u64>(d);
  std::vector<char> seen(ud, 0);
  const i128 first = floor_div(lo_num, lo_den) + 1;
  const i128 last = ceil_div(hi_num, hi_den) - 1;
  if (first <= last) {
    nt::for_each_prime(static_cast<u64>(std::max<i128>(first, 2)), static_cast<u64>(last), [&](u64 p) {
      const i128 pp = p;
      if (pp * lo_den > lo_num && pp * hi_den < hi_num) seen[p % ud] = 1;
    });
  }
  std::vector<u64> missing;
  for (u64 a = 0; a < ud; ++a) {
    if (nt::gcd(a, ud) == 1 && !seen[a]) missing.push_back(a);
  }
  return missing;
}

bool prime_window_all_residues(i64 d, u64 n, Rational eps) {
  return window_missing_residues(d, n, eps).empty();
}

}  // namespace apdisc::verify

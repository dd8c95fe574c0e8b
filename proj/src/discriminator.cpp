#include "apdisc/discriminator.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace apdisc::disc {

using nt::i128;
using nt::mod_floor;
using nt::u128;

namespace {

// Beyond this many bits the occupancy set gives way to sorting residues.
constexpr u64 kBitsetLimit = u64{1} << 26;

void require_n(u64 n) {
  if (n == 0) throw std::invalid_argument("sequence length n must be >= 1");
}

void require_m(u64 m) {
  if (m == 0) throw std::invalid_argument("modulus m must be >= 1");
}

// Walks f(1), f(2), ... mod m using first differences
//   f(k+1) - f(k) = a k + (a + b) / 2,
// so every step is an addition of two residues below m.
class ResidueWalk {
public:
  ResidueWalk(const HalfQuadratic& seq, u64 m)
      : m_(m),
        value_(eval_mod(seq, 1, m)),
        step_(mod_floor(static_cast<i128>(seq.a()) + (static_cast<i128>(seq.a()) + seq.b()) / 2, m)),
        accel_(mod_floor(seq.a(), m)) {}

  u64 current() const noexcept { return value_; }

  void advance() noexcept {
    value_ = add(value_, step_);
    step_ = add(step_, accel_);
  }

private:
  u64 add(u64 x, u64 y) const noexcept {
    u64 s = x + y;
    return s >= m_ ? s - m_ : s;
  }

  u64 m_;
  u64 value_;
  u64 step_;
  u64 accel_;
};

u64 first_repeat_sorted(std::vector<std::pair<u64, u64>>& residues) {
  std::sort(residues.begin(), residues.end());
  u64 first = 0;
  for (std::size_t i = 1; i < residues.size(); ++i) {
    if (residues[i].first == residues[i - 1].first) {
      const u64 l = residues[i].second;
      if (first == 0 || l < first) first = l;
    }
  }
  return first;
}

}  // namespace

HalfQuadratic::HalfQuadratic(i64 a, i64 b) : a_(a), b_(b) {
  if (((static_cast<i128>(a) + b) & 1) != 0) {
    throw std::invalid_argument("HalfQuadratic: A + B must be even");
  }
}

i128 HalfQuadratic::value(u64 k) const {
  const i128 kk = static_cast<i128>(k);
  return (static_cast<i128>(a_) * kk * kk + static_cast<i128>(b_) * kk) / 2;
}

std::string HalfQuadratic::describe() const {
  std::ostringstream os;
  os << "(" << a_ << "k^2" << (b_ < 0 ? " - " : " + ") << (b_ < 0 ? -b_ : b_) << "k)/2";
  return os.str();
}

ApCase ApCase::make(i64 d, i64 c) {
  if (d < 2) throw std::invalid_argument("ApCase: d must be >= 2");
  if (c <= -d || c >= d) throw std::invalid_argument("ApCase: c must lie in (-d, d)");
  const u64 ud = static_cast<u64>(d);
  if (nt::gcd(mod_floor(c, ud), ud) != 1) {
    throw std::invalid_argument("ApCase: gcd(c, d) must be 1");
  }
  const u64 rad = nt::radical(ud);
  const i64 r = static_cast<i64>(rad);
  return ApCase{d, c, rad, HalfQuadratic(4 * r * d, -4 * r * c)};
}

std::string Collision::describe() const {
  std::ostringstream os;
  os << "f(" << k << ") == f(" << l << ") mod " << modulus;
  return os.str();
}

u64 eval_mod(const HalfQuadratic& seq, u64 k, u64 m) {
  require_m(m);
  const u128 two_m = static_cast<u128>(m) * 2;
  const u128 kk = k % two_m;
  const u128 a = static_cast<u128>(mod_floor(seq.a(), 2 * m));
  const u128 b = static_cast<u128>(mod_floor(seq.b(), 2 * m));
  const u128 k2 = kk * kk % two_m;
  const u128 twice = (a * k2 % two_m + b * kk % two_m) % two_m;
  // The representative of A k^2 + B k in [0, 2m) is even because A k^2 + B k is.
  return static_cast<u64>(twice / 2);
}

void ResidueScanner::reserve(u64 m) {
  const std::size_t words = static_cast<std::size_t>((m + 63) / 64);
  if (bits_.size() < words) bits_.resize(words, 0);
}

bool ResidueScanner::test_and_set(u64 r) {
  std::uint64_t& word = bits_[r >> 6];
  const std::uint64_t mask = std::uint64_t{1} << (r & 63);
  if (word & mask) return true;
  word |= mask;
  touched_.push_back(r);
  return false;
}

void ResidueScanner::reset() {
  for (u64 r : touched_) bits_[r >> 6] = 0;
  touched_.clear();
}

u64 ResidueScanner::first_repeat(const HalfQuadratic& seq, u64 n, u64 m) {
  require_n(n);
  require_m(m);
  if (n == 1) return 0;
  if (m > kBitsetLimit) {
    std::vector<std::pair<u64, u64>> residues;
    residues.reserve(n);
    ResidueWalk walk(seq, m);
    for (u64 k = 1; k <= n; ++k, walk.advance()) residues.emplace_back(walk.current(), k);
    return first_repeat_sorted(residues);
  }
  reserve(m);
  ResidueWalk walk(seq, m);
  u64 hit = 0;
  for (u64 k = 1; k <= n; ++k, walk.advance()) {
    if (test_and_set(walk.current())) {
      hit = k;
      break;
    }
  }
  reset();
  return hit;
}

u64 ResidueScanner::first_repeat(std::span<const u64> values, u64 m) {
  require_m(m);
  if (values.size() <= 1) return 0;
  if (m > kBitsetLimit) {
    std::vector<std::pair<u64, u64>> residues;
    residues.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) residues.emplace_back(values[i] % m, i + 1);
    return first_repeat_sorted(residues);
  }
  reserve(m);
  u64 hit = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (test_and_set(values[i] % m)) {
      hit = i + 1;
      break;
    }
  }
  reset();
  return hit;
}

u64 ResidueScanner::count(const HalfQuadratic& seq, u64 n, u64 m) {
  require_n(n);
  require_m(m);
  if (m > kBitsetLimit) {
    std::vector<u64> residues;
    residues.reserve(n);
    ResidueWalk walk(seq, m);
    for (u64 k = 1; k <= n; ++k, walk.advance()) residues.push_back(walk.current());
    std::sort(residues.begin(), residues.end());
    return static_cast<u64>(std::unique(residues.begin(), residues.end()) - residues.begin());
  }
  reserve(m);
  ResidueWalk walk(seq, m);
  u64 distinct = 0;
  for (u64 k = 1; k <= n; ++k, walk.advance()) {
    if (!test_and_set(walk.current())) ++distinct;
  }
  reset();
  return distinct;
}

bool pairwise_distinct(const HalfQuadratic& seq, u64 n, u64 m) {
  require_n(n);
  require_m(m);
  if (n >= 2 && m < n) return false;
  ResidueScanner scanner;
  return scanner.first_repeat(seq, n, m) == 0;
}

bool pairwise_distinct_fast(const ApCase& c, u64 n, u64 m) {
  require_n(n);
  require_m(m);
  if (n == 1) return true;
  if (m < n) return false;

  const u64 d = static_cast<u64>(c.d);
  const u64 two_rad = 2 * c.rad % m;
  // Collision iff some 1 <= u <= n-1 and s == u (mod 2) with
  // u + 2 <= s <= 2n - u satisfy m | 2 r(d) u (d s - c).
  for (u64 u = 1; u < n; ++u) {
    const u64 g = nt::gcd(m, nt::mulmod(two_rad, u % m, m));
    const u64 rest = m / g;  // need d s == c (mod rest)
    const u64 h = nt::gcd(d % rest, rest);
    if (mod_floor(c.c, h) != 0) continue;
    const u64 step = rest / h;
    u64 s0 = 0;
    if (step > 1) {
      const u64 dh = (d / h) % step;
      const u64 ch = mod_floor(c.c / static_cast<i64>(h), step);
      s0 = nt::mulmod(ch, nt::inverse_mod(dh, step), step);
    }
    u64 first = s0;
    u64 stride = step;
    if (step % 2 == 1) {
      if (first % 2 != u % 2) first += step;
      stride = 2 * step;
    } else if (first % 2 != u % 2) {
      continue;
    }
    const u64 lo = u + 2;
    const u64 hi = 2 * n - u;
    if (lo > hi) continue;
    u64 s = first;
    if (s < lo) s += (lo - s + stride - 1) / stride * stride;
    if (s <= hi) return false;
  }
  return true;
}

u64 residue_count(const HalfQuadratic& seq, u64 n, u64 m) {
  ResidueScanner scanner;
  return scanner.count(seq, n, m);
}

std::optional<Collision> find_collision(const HalfQuadratic& seq, u64 n, u64 m) {
  ResidueScanner scanner;
  const u64 l = scanner.first_repeat(seq, n, m);
  if (l == 0) return std::nullopt;
  const u64 target = eval_mod(seq, l, m);
  for (u64 k = 1; k < l; ++k) {
    if (eval_mod(seq, k, m) == target) return Collision{k, l, m};
  }
  return std::nullopt;
}

std::optional<Collision> find_collision(std::span<const u64> values, u64 m) {
  ResidueScanner scanner;
  const u64 l = scanner.first_repeat(values, m);
  if (l == 0) return std::nullopt;
  const u64 target = values[l - 1] % m;
  for (u64 k = 1; k < l; ++k) {
    if (values[k - 1] % m == target) return Collision{k, l, m};
  }
  return std::nullopt;
}

u64 least_modulus(const HalfQuadratic& seq, u64 n, ScanStart start) {
  require_n(n);
  ResidueScanner scanner;
  for (u64 m = (start == ScanStart::pigeonhole ? n : 1);; ++m) {
    if (scanner.first_repeat(seq, n, m) == 0) return m;
  }
}

u64 least_modulus(std::span<const u64> values) {
  ResidueScanner scanner;
  for (u64 m = std::max<u64>(values.size(), 1);; ++m) {
    if (scanner.first_repeat(values, m) == 0) return m;
  }
}

u64 least_modulus_pair(const HalfQuadratic& seq, u64 n, u64 gap) {
  require_n(n);
  if (gap == 0) throw std::invalid_argument("least_modulus_pair: gap must be >= 1");
  if (n == 1) return 1;
  ResidueScanner scanner;
  // distinct[i] caches the verdict for modulus n + i, so each m is scanned once.
  std::vector<signed char> distinct;
  auto ok = [&](u64 m) {
    const u64 i = m - n;
    if (i >= distinct.size()) distinct.resize(i + 1, -1);
    if (distinct[i] < 0) distinct[i] = scanner.first_repeat(seq, n, m) == 0 ? 1 : 0;
    return distinct[i] == 1;
  };
  for (u64 m = n;; ++m) {
    if (ok(m) && ok(m + gap)) return m;
  }
}

}  // namespace apdisc::disc

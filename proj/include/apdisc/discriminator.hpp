#pragma once

// Integer-valued quadratic sequences f(k) = (A k^2 + B k) / 2 and the least
// modulus m under which f(1), ..., f(n) are pairwise distinct.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apdisc/ntcore.hpp"

namespace apdisc::disc {

using nt::i64;
using nt::u64;

/// f(k) = (a k^2 + b k) / 2 with a + b even, so f is integer valued and f(0) = 0.
class HalfQuadratic {
public:
  HalfQuadratic(i64 a, i64 b);

  static HalfQuadratic binomial2() { return {1, -1}; }  // k(k-1)/2
  static HalfQuadratic squares() { return {2, 0}; }     // k^2

  i64 a() const noexcept { return a_; }
  i64 b() const noexcept { return b_; }

  /// Exact value; callers keep k small enough for 128 bits.
  nt::i128 value(u64 k) const;

  std::string describe() const;

  friend bool operator==(const HalfQuadratic&, const HalfQuadratic&) = default;

private:
  i64 a_;
  i64 b_;
};

/// The progression case (d, c): sequence 2 r(d) k (d k - c).
struct ApCase {
  i64 d;
  i64 c;
  u64 rad;
  HalfQuadratic seq;

  /// Throws std::invalid_argument unless d >= 2, -d < c < d and gcd(c, d) = 1.
  static ApCase make(i64 d, i64 c);
};

/// 1 <= k < l <= n with f(k) == f(l) (mod m).
struct Collision {
  u64 k;
  u64 l;
  u64 modulus;

  std::string describe() const;
  friend bool operator==(const Collision&, const Collision&) = default;
};

/// f(k) mod m, reduced modulo 2m with 128-bit intermediates before halving.
u64 eval_mod(const HalfQuadratic& seq, u64 k, u64 m);

/// Reusable occupancy bitset for residue scans. Bits set during one scan are
/// cleared from an undo list, so consecutive moduli never re-zero the whole set.
class ResidueScanner {
public:
  /// Index l of the first term whose residue repeats an earlier one, or 0 if
  /// f(1..n) are pairwise distinct mod m.
  u64 first_repeat(const HalfQuadratic& seq, u64 n, u64 m);

  /// Same, over explicit values.
  u64 first_repeat(std::span<const u64> values, u64 m);

  /// Number of distinct residues among f(1..n) mod m (no early exit).
  u64 count(const HalfQuadratic& seq, u64 n, u64 m);

private:
  bool test_and_set(u64 r);
  void reset();
  void reserve(u64 m);

  std::vector<std::uint64_t> bits_;
  std::vector<u64> touched_;
};

bool pairwise_distinct(const HalfQuadratic& seq, u64 n, u64 m);

/// Distinctness decided from the factorisation
///   f(l) - f(k) = 2 r(d) (l - k) (d (l + k) - c)
/// by solving for s = l + k per difference u = l - k. Agrees with
/// pairwise_distinct on c.seq.
bool pairwise_distinct_fast(const ApCase& c, u64 n, u64 m);

u64 residue_count(const HalfQuadratic& seq, u64 n, u64 m);

std::optional<Collision> find_collision(const HalfQuadratic& seq, u64 n, u64 m);
std::optional<Collision> find_collision(std::span<const u64> values, u64 m);

enum class ScanStart {
  pigeonhole,  // m = n; no smaller modulus can separate n terms
  one,         // m = 1; debug route confirming the pigeonhole shortcut
};

/// Least m >= 1 with f(1..n) pairwise distinct mod m. Throws
/// std::invalid_argument for n == 0.
u64 least_modulus(const HalfQuadratic& seq, u64 n, ScanStart start = ScanStart::pigeonhole);

/// Least m >= 1 separating all of `values`.
u64 least_modulus(std::span<const u64> values);

/// Least m with f(1..n) pairwise distinct both mod m and mod m + gap.
u64 least_modulus_pair(const HalfQuadratic& seq, u64 n, u64 gap);

}  // namespace apdisc::disc

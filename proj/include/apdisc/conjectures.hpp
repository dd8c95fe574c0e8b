#pragma once

// Checkers for open statements about binomial and prime-indexed
// discriminators. Each report recomputes both sides from scratch.

#include <chrono>
#include <optional>
#include <string>

#include "apdisc/discriminator.hpp"
#include "apdisc/ntcore.hpp"

namespace apdisc::conj {

using nt::i64;
using nt::u64;

struct ConjectureReport {
  std::string id;      // "1.1" .. "1.4"
  std::string params;  // "d=3", "form=x2+x+1 variant=binomial", ...
  u64 n = 0;
  u64 observed = 0;
  u64 predicted = 0;
  bool agrees = false;
  std::optional<bool> m_class;   // 1.2: m is 2^a or 2^a * prime
  std::optional<bool> m1_class;  // 1.2: same for m + 1
  std::optional<std::string> certificate;
  std::chrono::nanoseconds elapsed{0};
};

/// Least m with C(k,2), k = 1..n, distinct mod m and mod m + 2d, against the
/// first prime p >= 2n - 1 with p + 2d prime.
ConjectureReport conjecture11_check(u64 d, u64 n, u64 ceiling = nt::kDefaultScanCeiling);

/// Least m with C(k,2) distinct mod m and mod m + 1; both m and m + 1 must
/// be a power of two times 1 or a prime.
ConjectureReport conjecture12_check(u64 n);

enum class Variant {
  binomial,  // C(k,2)
  squares,   // k^2
};

std::string to_string(Variant v);
Variant parse_variant(const std::string& text);

/// Least predicted value for the variant: p >= 2n - 1 for C(k,2), p >= 2n + 1
/// for k^2 (k^2 needs p > 2n - 1 to separate k and p - k).
u64 conjecture13_lower_bound(Variant v, u64 n);

/// Least form value m = f(x), x >= 0, separating the variant's first n terms,
/// against the first prime of the same form at or above the variant's bound.
ConjectureReport conjecture13_check(nt::PolyForm form, u64 n, Variant variant,
                                    u64 ceiling = nt::kDefaultScanCeiling);

/// Least m separating 6 p_k (p_k - 1), k = 1..n, against the first prime
/// p >= p_n dividing no p_i + p_j - 1. Requires n >= 3.
ConjectureReport conjecture14_check(u64 n);

}  // namespace apdisc::conj

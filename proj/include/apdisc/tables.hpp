#pragma once

// Published thresholds for the progression moduli 4 <= d <= 36.

#include <array>
#include <cstdint>
#include <optional>

namespace apdisc::tables {

struct Row {
  int d;
  std::uint64_t m_threshold;    // M_d: n > M_d is proven to match
  std::int64_t counter_c;       // c_d: the class that fails at n = M_d
  const char* theta_error;      // eps_d, as printed (decimal string)
  std::uint64_t window_threshold;  // N_d: least n from which the prime window is full
};

inline constexpr int kMinD = 4;
inline constexpr int kMaxD = 36;

const std::array<Row, 33>& rows();

/// Row for d, or nullopt outside [4, 36].
std::optional<Row> row(int d);

/// Largest M_d over the table; n above it works for every 4 <= d <= 36.
std::uint64_t uniform_threshold();

/// Conjectured start n_d for the twin-gap discriminator, d = 1..10.
std::optional<std::uint64_t> twin_gap_threshold(int d);

}  // namespace apdisc::tables

#include "apdisc/tables.hpp"

#include <algorithm>

namespace apdisc::tables {

namespace {

constexpr std::array<Row, 33> kRows = {{
    {4, 8, -3, "0.002238", 79},
    {5, 14, -1, "0.002785", 206},
    {6, 10, 1, "0.002238", 103},
    {7, 100, -5, "0.003248", 333},
    {8, 21, 1, "0.002811", 301},
    {9, 315, 2, "0.003228", 356},
    {10, 53, 3, "0.002785", 232},
    {11, 1067, -7, "0.004125", 1079},
    {12, 27, 5, "0.002781", 346},
    {13, 1074, -5, "0.004560", 1166},
    {14, 122, -5, "0.003248", 806},
    {15, 809, -1, "0.008634", 1310},
    {16, 329, 11, "0.008994", 2183},
    {17, 5115, 15, "0.010746", 5153},
    {18, 95, 1, "0.003228", 1135},
    {19, 5390, 6, "0.011892", 5402},
    {20, 755, -9, "0.008501", 2388},
    {21, 3672, 1, "0.009708", 4059},
    {22, 640, 5, "0.004125", 2934},
    {23, 11193, 21, "0.012682", 11246},
    {24, 220, 1, "0.008173", 2480},
    {25, 12810, 19, "0.012214", 13144},
    {26, 1207, -3, "0.004560", 4775},
    {27, 7087, 23, "0.011579", 11646},
    {28, 2036, -9, "0.009908", 5314},
    {29, 13250, -1, "0.014102", 13478},
    {30, 177, 17, "0.008634", 5215},
    {31, 24310, 3, "0.014535", 24334},
    {32, 3678, -1, "0.011103", 8964},
    {33, 12794, -5, "0.011685", 15044},
    {34, 5303, 15, "0.010746", 14748},
    {35, 15628, 12, "0.012809", 16896},
    {36, 551, 23, "0.009544", 9847},
}};

constexpr std::array<std::uint64_t, 10> kTwinGap = {5, 6, 6, 10, 9, 8, 9, 18, 11, 9};

}  // namespace

const std::array<Row, 33>& rows() { return kRows; }

std::optional<Row> row(int d) {
  if (d < kMinD || d > kMaxD) return std::nullopt;
  return kRows[static_cast<std::size_t>(d - kMinD)];
}

std::uint64_t uniform_threshold() {
  return std::ranges::max(kRows, {}, &Row::m_threshold).m_threshold;
}

std::optional<std::uint64_t> twin_gap_threshold(int d) {
  if (d < 1 || d > 10) return std::nullopt;
  return kTwinGap[static_cast<std::size_t>(d - 1)];
}

}  // namespace apdisc::tables

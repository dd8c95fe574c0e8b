#pragma once

// Executable statements about least distinct-residue moduli of the
// progression sequences 2 r(d) k (d k - c) and their d = 2, 3 relatives.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apdisc/discriminator.hpp"
#include "apdisc/ntcore.hpp"

namespace apdisc::verify {

using nt::i64;
using nt::u64;

struct VerificationRecord {
  std::string case_id;
  i64 d = 0;
  i64 c = 0;
  u64 n = 0;
  u64 least_m = 0;
  u64 predicted = 0;
  bool match = false;
  std::chrono::nanoseconds elapsed{0};
};

/// ceil((2 d n - c) / (d - 1)) in exact integer arithmetic.
u64 predicted_lower_bound(i64 d, i64 c, u64 n);

/// First prime p == c (mod d) with p >= (2 d n - c) / (d - 1).
u64 predicted_prime(i64 d, i64 c, u64 n, u64 ceiling = nt::kDefaultScanCeiling);

/// Compares the least modulus of 2 r(d) k (d k - c), k = 1..n, with the
/// predicted prime. Requires d >= 4 (use verify_theorem12 for d = 2, 3).
VerificationRecord verify_theorem11(i64 d, i64 c, u64 n, u64 ceiling = nt::kDefaultScanCeiling);

/// verify_theorem11(d, c_d, M_d) from the constant tables; 4 <= d <= 36.
VerificationRecord verify_remark11(int d);

/// Start of the proven range for the d = 4 and d = 5 specialisations:
/// 6 for d = 4, c = +-1; 8, 10, 15, 5 for d = 5, c = 1, 2, -1, -2.
std::optional<u64> corollary_threshold(i64 d, i64 c);

VerificationRecord verify_corollary11(i64 d, i64 c, u64 n, u64 ceiling = nt::kDefaultScanCeiling);

struct ModulusClass {
  enum class Kind { prime_in_ap, prime_or_pow2, prime1mod3_or_pow3, prime2mod3_or_pow3, prime_any };
  Kind kind = Kind::prime_any;
  i64 residue = 0;  // prime_in_ap only
  u64 modulus = 1;  // prime_in_ap only
};

/// Membership; prime powers are read with exponent >= 1.
bool class_member(const ModulusClass& mc, u64 x);

/// Least member >= bound.
u64 least_class_member(const ModulusClass& mc, u64 bound, u64 ceiling = nt::kDefaultScanCeiling);

/// The six d = 2, 3 sequences.
enum class SmallCase { two_minus, two_plus, three_minus1, three_plus1, three_minus2, three_plus2 };

struct SmallCaseInfo {
  SmallCase id;
  const char* name;  // e.g. "6k(3k-1)"
  i64 d;
  i64 c;
  ModulusClass target;
  u64 threshold;   // least n covered by the statement
  u64 slope;       // bound = slope * n - deficit
  u64 deficit;
};

const std::vector<SmallCaseInfo>& small_cases();
const SmallCaseInfo& info(SmallCase id);
std::optional<SmallCase> parse_small_case(const std::string& name);

/// Least modulus of the case's sequence against the least class member at
/// or above the case's bound.
VerificationRecord verify_theorem12(SmallCase id, u64 n, u64 ceiling = nt::kDefaultScanCeiling);

enum class Sign { minus, plus };

/// 8k(2k -+ 1) against the least prime >= 4n -+ 1.
VerificationRecord verify_remark12(Sign sign, u64 n, u64 ceiling = nt::kDefaultScanCeiling);
inline u64 remark12_threshold(Sign sign) { return sign == Sign::minus ? 3 : 9; }

struct Rational {
  i64 num;
  i64 den;
};

/// 2 / (max(11, d) - 2).
Rational default_window_eps(i64 d);

/// Residues a coprime to d with no prime p == a (mod d) strictly inside
/// (2dn/(d-1), ((2+eps)n - 2) d/(d-1)). Endpoints compared exactly.
std::vector<u64> window_missing_residues(i64 d, u64 n, Rational eps);

bool prime_window_all_residues(i64 d, u64 n, Rational eps);
inline bool prime_window_all_residues(i64 d, u64 n) {
  return prime_window_all_residues(d, n, default_window_eps(d));
}

}  // namespace apdisc::verify

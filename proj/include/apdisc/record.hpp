#pragma once

// Line-delimited campaign records and resume support.

#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "apdisc/conjectures.hpp"
#include "apdisc/verifier.hpp"

namespace apdisc::io {

using nt::i64;
using nt::u64;

/// One (case, n) result. Serialised as a single JSON object per line with
/// keys cmd, case, d, c, n, least_m, predicted, match, ms and, when present,
/// m_class, m1_class, certificate.
struct Record {
  std::string cmd;
  std::string case_id;
  i64 d = 0;
  i64 c = 0;
  u64 n = 0;
  u64 least_m = 0;
  u64 predicted = 0;
  bool match = false;
  std::int64_t ms = 0;
  std::optional<bool> m_class;
  std::optional<bool> m1_class;
  std::optional<std::string> certificate;

  /// Identity of the (case, n) slot; stable across runs.
  std::string key() const;

  friend bool operator==(const Record&, const Record&) = default;
};

std::string serialize(const Record& r);

/// nullopt for malformed or truncated lines.
std::optional<Record> parse_record(std::string_view line);

Record from_verification(std::string cmd, const verify::VerificationRecord& v, bool timing);
Record from_conjecture(std::string cmd, const conj::ConjectureReport& r, bool timing);

struct ResumeState {
  std::vector<Record> records;
  std::set<std::string> keys;
  std::size_t corrupt = 0;
  bool ends_mid_line = false;  // last line lacks its newline
};

/// Reads prior records from `path`. A missing file yields an empty state;
/// corrupt lines are skipped with a warning on `log`.
ResumeState resume_scan(const std::string& path, std::ostream& log);

}  // namespace apdisc::io

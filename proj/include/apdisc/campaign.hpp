#pragma once

// Campaign orchestration behind the command-line tool.

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "apdisc/record.hpp"
#include "apdisc/verifier.hpp"

namespace apdisc::cli {

using nt::i64;
using nt::u64;

enum class Command {
  verify_theorem11,
  verify_remark11,
  verify_theorem12,
  verify_remark12,
  corollary11,
  window_check,
  conjecture,
  discriminator,
  tables,
};

std::string to_string(Command c);

enum ExitStatus : int {
  kOk = 0,
  kInvalidConfig = 1,
  kUnexpected = 2,  // mismatch inside a proven range, or a conjecture counterexample
  kScanCeiling = 3,
  kIoFailure = 4,
};

struct CampaignConfig {
  Command command = Command::tables;

  // Case selection; which fields apply depends on the command.
  std::optional<i64> d;
  std::optional<i64> c;
  bool all = false;
  std::string case_name;      // verify-theorem12: "4k(2k-1)" ... or "all"
  std::string sign;           // verify-remark12: minus | plus | all
  std::string conjecture_id;  // 1.1 .. 1.4
  std::string form = "x2+x+1";
  std::string variant = "binomial";
  std::optional<i64> a;
  std::optional<i64> b;
  std::optional<verify::Rational> eps;

  std::optional<u64> n_from;
  std::optional<u64> n_to;

  unsigned parallelism = 1;
  std::string output;  // empty: records go to the caller's stream
  bool resume = false;
  u64 scan_ceiling = nt::kDefaultScanCeiling;
  bool timing = true;  // false writes ms = 0 for byte-stable streams

  /// Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;
};

/// What a record must show for the campaign to count as clean.
enum class Expectation { none, match, mismatch };

struct Job {
  io::Record slot;  // cmd, case, d, c, n; identifies the record for resume
  Expectation expect = Expectation::none;
  /// Produces the full record. Throws nt::ScanCeilingExceeded when a bounded
  /// search runs out.
  std::function<io::Record()> evaluate;
};

/// The (case, n) slots a configuration covers, in emission order. Throws
/// std::invalid_argument for unusable parameters.
std::vector<Job> plan(const CampaignConfig& config);

struct Summary {
  std::size_t records = 0;
  std::size_t matches = 0;
  std::size_t mismatches = 0;
  std::size_t unexpected = 0;
  std::size_t resumed = 0;
  std::int64_t total_ms = 0;

  std::string to_string() const;
};

/// Runs the campaign. Records are written to config.output (appending when
/// resuming) or to `out`; warnings and the summary footer go to `log`.
int run(const CampaignConfig& config, std::ostream& out, std::ostream& log);

/// Writes the constant tables as one JSON object per d.
void write_tables(std::ostream& out);

}  // namespace apdisc::cli

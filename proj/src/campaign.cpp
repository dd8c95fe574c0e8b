#include "apdisc/campaign.hpp"

#include <fstream>
#include <json.hpp>
#include <map>
#include <sstream>
#include <stdexcept>

#include "apdisc/conjectures.hpp"
#include "apdisc/parallel.hpp"
#include "apdisc/tables.hpp"

namespace apdisc::cli {

namespace {

using verify::Rational;

struct Range {
  u64 from;
  u64 to;
};

Range range_or(const CampaignConfig& cfg, u64 from, u64 to) {
  Range r{cfg.n_from.value_or(from), cfg.n_to.value_or(to)};
  if (r.from == 0) throw std::invalid_argument("n-from must be >= 1");
  if (r.from > r.to) throw std::invalid_argument("n-from must not exceed n-to");
  return r;
}

io::Record slot(const CampaignConfig& cfg, std::string case_id, i64 d, i64 c, u64 n) {
  io::Record r;
  r.cmd = to_string(cfg.command);
  r.case_id = std::move(case_id);
  r.d = d;
  r.c = c;
  r.n = n;
  return r;
}

// Keeps the slot's identity fields authoritative over whatever the
// evaluator filled in.
io::Record stamp(const io::Record& slot, io::Record r) {
  r.cmd = slot.cmd;
  r.case_id = slot.case_id;
  r.d = slot.d;
  r.c = slot.c;
  r.n = slot.n;
  return r;
}

i64 require(const std::optional<i64>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string("missing --") + flag);
  return *v;
}

void plan_theorem11(const CampaignConfig& cfg, std::vector<Job>& jobs) {
  const i64 d = require(cfg.d, "d");
  const i64 c = require(cfg.c, "c");
  if (d < 4) throw std::invalid_argument("verify-theorem11 needs d >= 4");
  disc::ApCase::make(d, c);
  const auto row = tables::row(static_cast<int>(d));
  const u64 start = row ? row->m_threshold + 1 : 1;
  const Range range = range_or(cfg, start, cfg.n_from.value_or(start));
  for (u64 n = range.from; n <= range.to; ++n) {
    Job job;
    job.slot = slot(cfg, "ap", d, c, n);
    job.expect = (row && n > row->m_threshold) ? Expectation::match : Expectation::none;
    job.evaluate = [&cfg, d, c, n] {
      return io::from_verification(to_string(cfg.command), verify::verify_theorem11(d, c, n, cfg.scan_ceiling),
                                   cfg.timing);
    };
    jobs.push_back(std::move(job));
  }
}

void plan_remark11(const CampaignConfig& cfg, std::vector<Job>& jobs) {
  std::vector<int> ds;
  if (cfg.all) {
    for (int d = tables::kMinD; d <= tables::kMaxD; ++d) ds.push_back(d);
  } else {
    const i64 d = require(cfg.d, "d (or --all)");
    if (!tables::row(static_cast<int>(d))) throw std::invalid_argument("verify-remark11 needs 4 <= d <= 36");
    ds.push_back(static_cast<int>(d));
  }
  for (int d : ds) {
    const auto row = *tables::row(d);
    Job job;
    job.slot = slot(cfg, "ap", d, row.counter_c, row.m_threshold);
    job.expect = Expectation::mismatch;
    job.evaluate = [&cfg, d] {
      return io::from_verification(to_string(cfg.command), verify::verify_remark11(d), cfg.timing);
    };
    jobs.push_back(std::move(job));
  }
}

void plan_theorem12(const CampaignConfig& cfg, std::vector<Job>& jobs) {
  std::vector<verify::SmallCase> cases;
  if (cfg.case_name.empty() || cfg.case_name == "all") {
    for (const auto& ci : verify::small_cases()) cases.push_back(ci.id);
  } else {
    auto id = verify::parse_small_case(cfg.case_name);
    if (!id) throw std::invalid_argument("unknown --case " + cfg.case_name);
    cases.push_back(*id);
  }
  for (auto id : cases) {
    const auto& ci = verify::info(id);
    const Range range = range_or(cfg, ci.threshold, 1000);
    for (u64 n = range.from; n <= range.to; ++n) {
      Job job;
      job.slot = slot(cfg, ci.name, ci.d, ci.c, n);
      job.expect = n >= ci.threshold ? Expectation::match : Expectation::none;
      job.evaluate = [&cfg, id, n] {
        return io::from_verification(to_string(cfg.command), verify::verify_theorem12(id, n, cfg.scan_ceiling),
                                     cfg.timing);
      };
      jobs.push_back(std::move(job));
    }
  }
}

void plan_remark12(const CampaignConfig& cfg, std::vector<Job>& jobs) {
  std::vector<verify::Sign> signs;
  if (cfg.sign.empty() || cfg.sign == "all") {
    signs = {verify::Sign::minus, verify::Sign::plus};
  } else if (cfg.sign == "minus") {
    signs = {verify::Sign::minus};
  } else if (cfg.sign == "plus") {
    signs = {verify::Sign::plus};
  } else {
    throw std::invalid_argument("--sign must be minus, plus or all");
  }
  for (auto sign : signs) {
    const u64 threshold = verify::remark12_threshold(sign);
    const bool minus = sign == verify::Sign::minus;
    const Range range = range_or(cfg, threshold, 1000);
    for (u64 n = range.from; n <= range.to; ++n) {
      Job job;
      job.slot = slot(cfg, minus ? "8k(2k-1)" : "8k(2k+1)", 2, minus ? 1 : -1, n);
      job.expect = n >= threshold ? Expectation::match : Expectation::none;
      job.evaluate = [&cfg, sign, n] {
        return io::from_verification(to_string(cfg.command), verify::verify_remark12(sign, n, cfg.scan_ceiling),
                                     cfg.timing);
      };
      jobs.push_back(std::move(job));
    }
  }
}

void plan_corollary11(const CampaignConfig& cfg, std::vector<Job>& jobs) {
  std::vector<std::pair<i64, i64>> cases;
  if (cfg.all || (!cfg.d && !cfg.c)) {
    cases = {{4, 1}, {4, -1}, {5, 1}, {5, 2}, {5, -1}, {5, -2}};
  } else {
    cases = {{require(cfg.d, "d"), require(cfg.c, "c")}};
  }
  for (auto [d, c] : cases) {
    const auto threshold = verify::corollary_threshold(d, c);
    if (!threshold) throw std::invalid_argument("corollary11 covers d = 4, c = +-1 and d = 5, c = +-1, +-2");
    const Range range = range_or(cfg, *threshold, 500);
    for (u64 n = range.from; n <= range.to; ++n) {
      Job job;
      job.slot = slot(cfg, "ap", d, c, n);
      job.expect = n >= *threshold ? Expectation::match : Expectation::none;
      job.evaluate = [&cfg, d = d, c = c, n] {
        return io::from_verification(to_string(cfg.command),
                                     verify::verify_corollary11(d, c, n, cfg.scan_ceiling), cfg.timing);
      };
      jobs.push_back(std::move(job));
    }
  }
}

void plan_window(const CampaignConfig& cfg, std::vector<Job>& jobs) {
  std::vector<i64> ds;
  if (cfg.all) {
    for (int d = tables::kMinD; d <= tables::kMaxD; ++d) ds.push_back(d);
  } else {
    ds.push_back(require(cfg.d, "d (or --all)"));
  }
  for (i64 d : ds) {
    if (d < 4) throw std::invalid_argument("window-check needs d >= 4");
    const Rational eps = cfg.eps.value_or(verify::default_window_eps(d));
    const auto def = verify::default_window_eps(d);
    const bool default_eps = eps.num * def.den == def.num * eps.den;
    const auto row = tables::row(static_cast<int>(d));
    const u64 start = row ? row->window_threshold : 1;
    const Range range = range_or(cfg, start, start + 200);
    const std::string case_id = "eps=" + std::to_string(eps.num) + "/" + std::to_string(eps.den);
    for (u64 n = range.from; n <= range.to; ++n) {
      Job job;
      job.slot = slot(cfg, case_id, d, 0, n);
      job.expect = (row && default_eps && n >= row->window_threshold) ? Expectation::match : Expectation::none;
      job.evaluate = [&cfg, d, n, eps] {
        const auto start_time = std::chrono::steady_clock::now();
        const auto missing = verify::window_missing_residues(d, n, eps);
        const u64 phi = nt::euler_phi(static_cast<u64>(d));
        io::Record r;
        r.least_m = phi - missing.size();
        r.predicted = phi;
        r.match = missing.empty();
        if (!missing.empty()) {
          std::ostringstream os;
          os << "no prime in window for residues";
          for (u64 a : missing) os << ' ' << a;
          r.certificate = os.str();
        }
        if (cfg.timing) {
          r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_time)
                     .count();
        }
        return r;
      };
      jobs.push_back(std::move(job));
    }
  }
}

void plan_conjecture(const CampaignConfig& cfg, std::vector<Job>& jobs) {
  const std::string& id = cfg.conjecture_id;
  auto add = [&](io::Record s, Expectation expect, std::function<conj::ConjectureReport()> f) {
    Job job;
    job.slot = std::move(s);
    job.expect = expect;
    job.evaluate = [&cfg, f = std::move(f)] {
      return io::from_conjecture(to_string(cfg.command), f(), cfg.timing);
    };
    jobs.push_back(std::move(job));
  };

  if (id == "1.1") {
    std::vector<i64> ds;
    if (cfg.all) {
      for (i64 d = 1; d <= 10; ++d) ds.push_back(d);
    } else {
      ds.push_back(require(cfg.d, "d (or --all)"));
    }
    for (i64 d : ds) {
      if (d < 1) throw std::invalid_argument("conjecture 1.1 needs d >= 1");
      const auto threshold = tables::twin_gap_threshold(static_cast<int>(d));
      const u64 start = threshold.value_or(1);
      const Range range = range_or(cfg, start, start + 200);
      for (u64 n = range.from; n <= range.to; ++n) {
        const u64 ud = static_cast<u64>(d);
        add(slot(cfg, "1.1 d=" + std::to_string(d), d, 0, n),
            (threshold && n >= *threshold) ? Expectation::match : Expectation::none,
            [&cfg, ud, n] { return conj::conjecture11_check(ud, n, cfg.scan_ceiling); });
      }
    }
  } else if (id == "1.2") {
    const Range range = range_or(cfg, 1, 300);
    for (u64 n = range.from; n <= range.to; ++n) {
      add(slot(cfg, "1.2", 0, 0, n), Expectation::match, [n] { return conj::conjecture12_check(n); });
    }
  } else if (id == "1.3") {
    std::vector<nt::PolyForm> forms;
    if (cfg.form == "all") {
      forms = {nt::PolyForm::hex, nt::PolyForm::four_square};
    } else {
      forms = {nt::parse_poly_form(cfg.form)};
    }
    std::vector<conj::Variant> variants;
    if (cfg.variant == "all") {
      variants = {conj::Variant::binomial, conj::Variant::squares};
    } else {
      variants = {conj::parse_variant(cfg.variant)};
    }
    const Range range = range_or(cfg, 1, 200);
    for (auto form : forms) {
      for (auto variant : variants) {
        const std::string case_id =
            "1.3 form=" + nt::to_string(form) + " variant=" + conj::to_string(variant);
        for (u64 n = range.from; n <= range.to; ++n) {
          add(slot(cfg, case_id, 0, 0, n), Expectation::match,
              [&cfg, form, variant, n] { return conj::conjecture13_check(form, n, variant, cfg.scan_ceiling); });
        }
      }
    }
  } else if (id == "1.4") {
    const Range range = range_or(cfg, 3, 100);
    if (range.from < 3) throw std::invalid_argument("conjecture 1.4 needs n >= 3");
    for (u64 n = range.from; n <= range.to; ++n) {
      add(slot(cfg, "1.4", 0, 0, n), Expectation::match, [n] { return conj::conjecture14_check(n); });
    }
  } else {
    throw std::invalid_argument("--id must be one of 1.1, 1.2, 1.3, 1.4");
  }
}

void plan_discriminator(const CampaignConfig& cfg, std::vector<Job>& jobs) {
  const disc::HalfQuadratic seq(require(cfg.a, "a"), require(cfg.b, "b"));
  const Range range = range_or(cfg, 1, cfg.n_from.value_or(1));
  for (u64 n = range.from; n <= range.to; ++n) {
    Job job;
    job.slot = slot(cfg, seq.describe(), seq.a(), seq.b(), n);
    job.expect = Expectation::match;
    // least_m scans from the pigeonhole bound, predicted from m = 1.
    job.evaluate = [&cfg, seq, n] {
      const auto start = std::chrono::steady_clock::now();
      io::Record r;
      r.least_m = disc::least_modulus(seq, n, disc::ScanStart::pigeonhole);
      r.predicted = disc::least_modulus(seq, n, disc::ScanStart::one);
      r.match = r.least_m == r.predicted;
      if (cfg.timing) {
        r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                   .count();
      }
      return r;
    };
    jobs.push_back(std::move(job));
  }
}

bool violates(Expectation e, bool match) {
  return (e == Expectation::match && !match) || (e == Expectation::mismatch && match);
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::verify_theorem11: return "verify-theorem11";
    case Command::verify_remark11: return "verify-remark11";
    case Command::verify_theorem12: return "verify-theorem12";
    case Command::verify_remark12: return "verify-remark12";
    case Command::corollary11: return "corollary11";
    case Command::window_check: return "window-check";
    case Command::conjecture: return "conjecture";
    case Command::discriminator: return "discriminator";
    case Command::tables: return "tables";
  }
  return "unknown";
}

void CampaignConfig::validate() const {
  if (parallelism < 1) throw std::invalid_argument("parallelism must be >= 1");
  if (n_from && n_to && *n_from > *n_to) throw std::invalid_argument("n-from must not exceed n-to");
  if (n_from && *n_from == 0) throw std::invalid_argument("n-from must be >= 1");
  if (resume && output.empty()) throw std::invalid_argument("--resume needs --output");
  if (eps && (eps->num <= 0 || eps->den <= 0)) throw std::invalid_argument("eps must be a positive fraction");
  if (scan_ceiling < 2) throw std::invalid_argument("scan ceiling must be >= 2");
}

std::vector<Job> plan(const CampaignConfig& cfg) {
  std::vector<Job> jobs;
  switch (cfg.command) {
    case Command::verify_theorem11: plan_theorem11(cfg, jobs); break;
    case Command::verify_remark11: plan_remark11(cfg, jobs); break;
    case Command::verify_theorem12: plan_theorem12(cfg, jobs); break;
    case Command::verify_remark12: plan_remark12(cfg, jobs); break;
    case Command::corollary11: plan_corollary11(cfg, jobs); break;
    case Command::window_check: plan_window(cfg, jobs); break;
    case Command::conjecture: plan_conjecture(cfg, jobs); break;
    case Command::discriminator: plan_discriminator(cfg, jobs); break;
    case Command::tables: break;
  }
  return jobs;
}

std::string Summary::to_string() const {
  std::ostringstream os;
  os << "summary: records=" << records << " match=" << matches << " mismatch=" << mismatches
     << " unexpected=" << unexpected << " total_ms=" << total_ms;
  return os.str();
}

void write_tables(std::ostream& out) {
  for (const auto& row : tables::rows()) {
    nlohmann::ordered_json j;
    j["d"] = row.d;
    j["M"] = row.m_threshold;
    j["c"] = row.counter_c;
    j["eps"] = row.theta_error;
    j["N"] = row.window_threshold;
    out << j.dump() << '\n';
  }
}

int run(const CampaignConfig& cfg, std::ostream& out, std::ostream& log) {
  std::vector<Job> jobs;
  try {
    cfg.validate();
    jobs = plan(cfg);
  } catch (const std::invalid_argument& e) {
    log << "error: " << e.what() << '\n';
    return kInvalidConfig;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  std::map<std::string, io::Record> prior;
  if (!cfg.output.empty()) {
    try {
      if (cfg.resume) {
        io::ResumeState state = io::resume_scan(cfg.output, log);
        for (auto& r : state.records) prior.emplace(r.key(), std::move(r));
        file.open(cfg.output, std::ios::app | std::ios::binary);
        if (file && state.ends_mid_line) file << '\n';
      } else {
        file.open(cfg.output, std::ios::trunc | std::ios::binary);
      }
    } catch (const std::exception& e) {
      log << "error: " << e.what() << '\n';
      return kIoFailure;
    }
    if (!file) {
      log << "error: cannot open " << cfg.output << " for writing\n";
      return kIoFailure;
    }
    sink = &file;
  }

  if (cfg.command == Command::tables) {
    write_tables(*sink);
    sink->flush();
    return *sink ? kOk : kIoFailure;
  }

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (prior.count(jobs[i].slot.key()) == 0) pending.push_back(i);
  }

  struct Outcome {
    io::Record record;
    std::string ceiling_error;
  };
  std::map<std::size_t, io::Record> computed;
  std::string ceiling_error;
  bool io_failed = false;

  ordered_parallel_for(
      pending.size(), cfg.parallelism,
      [&](std::size_t i) {
        const Job& job = jobs[pending[i]];
        Outcome o;
        try {
          o.record = stamp(job.slot, job.evaluate());
        } catch (const nt::ScanCeilingExceeded& e) {
          o.ceiling_error = e.what();
        }
        return o;
      },
      [&](std::size_t i, Outcome&& o) {
        if (!o.ceiling_error.empty()) {
          ceiling_error = o.ceiling_error + " (n=" + std::to_string(jobs[pending[i]].slot.n) + ")";
          return false;
        }
        *sink << io::serialize(o.record) << '\n';
        sink->flush();
        if (!*sink) {
          io_failed = true;
          return false;
        }
        computed.emplace(pending[i], std::move(o.record));
        return true;
      });

  Summary summary;
  summary.resumed = jobs.size() - pending.size();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const io::Record* r = nullptr;
    if (auto it = computed.find(i); it != computed.end()) {
      r = &it->second;
    } else if (auto jt = prior.find(jobs[i].slot.key()); jt != prior.end()) {
      r = &jt->second;
    }
    if (!r) continue;
    ++summary.records;
    (r->match ? summary.matches : summary.mismatches)++;
    summary.total_ms += r->ms;
    if (violates(jobs[i].expect, r->match)) {
      ++summary.unexpected;
      log << "unexpected: " << io::serialize(*r) << '\n';
    }
  }
  if (summary.resumed > 0) log << "resumed " << summary.resumed << " completed records\n";
  log << summary.to_string() << '\n';

  if (io_failed) {
    log << "error: write failed\n";
    return kIoFailure;
  }
  if (!ceiling_error.empty()) {
    log << "error: scan ceiling reached: " << ceiling_error << '\n';
    return kScanCeiling;
  }
  return summary.unexpected > 0 ? kUnexpected : kOk;
}

}  // namespace apdisc::cli

// Command-line front end: one subcommand per campaign.

#include <CLI11.hpp>
#include <iostream>
#include <thread>

#include "apdisc/campaign.hpp"

using apdisc::cli::CampaignConfig;
using apdisc::cli::Command;

namespace {

std::optional<apdisc::verify::Rational> parse_eps(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw CLI::ValidationError("--eps", "expected a fraction such as 2/9");
  try {
    return apdisc::verify::Rational{std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--eps", "expected a fraction such as 2/9");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Least distinct-residue moduli of quadratic sequences versus primes in progressions"};
  app.require_subcommand(1);

  CampaignConfig cfg;
  cfg.parallelism = std::max(1u, std::thread::hardware_concurrency());
  std::string eps_text;
  bool no_timing = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n-from", cfg.n_from, "First n");
    sub->add_option("--n-to", cfg.n_to, "Last n (inclusive)");
    sub->add_option("-j,--parallel", cfg.parallelism, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", cfg.output, "Record file (default: standard output)");
    sub->add_flag("--resume", cfg.resume, "Skip (case, n) slots already present in --output");
    sub->add_option("--scan-ceiling", cfg.scan_ceiling, "Upper limit for open-ended prime searches");
    sub->add_flag("--no-timing", no_timing, "Write ms = 0 so record streams are byte-reproducible");
  };

  auto* t11 = app.add_subcommand("verify-theorem11", "Least modulus of 2r(d)k(dk-c) versus the predicted prime");
  t11->add_option("--d", cfg.d)->required();
  t11->add_option("--c", cfg.c)->required();
  common(t11);

  auto* r11 = app.add_subcommand("verify-remark11", "Tabulated counterexamples at n = M_d, c = c_d");
  r11->add_flag("--all", cfg.all, "All d = 4..36");
  r11->add_option("--d", cfg.d);
  common(r11);

  auto* t12 = app.add_subcommand("verify-theorem12", "The six d = 2, 3 sequences against prime-or-prime-power targets");
  t12->add_option("--case", cfg.case_name, "4k(2k-1), 4k(2k+1), 6k(3k-1), 6k(3k+1), 6k(3k-2), 6k(3k+2) or all");
  common(t12);

  auto* r12 = app.add_subcommand("verify-remark12", "8k(2k-1) and 8k(2k+1) against the least prime");
  r12->add_option("--sign", cfg.sign, "minus, plus or all");
  common(r12);

  auto* cor = app.add_subcommand("corollary11", "d = 4 and d = 5 specialisations");
  cor->add_option("--d", cfg.d);
  cor->add_option("--c", cfg.c);
  cor->add_flag("--all", cfg.all);
  common(cor);

  auto* win = app.add_subcommand("window-check", "Every coprime residue has a prime in the window");
  win->add_option("--d", cfg.d);
  win->add_flag("--all", cfg.all, "All d = 4..36");
  win->add_option("--eps", eps_text, "Window width as a fraction, default 2/(max(11,d)-2)");
  common(win);

  auto* conj = app.add_subcommand("conjecture", "Binomial and prime-indexed discriminator conjectures");
  conj->add_option("--id", cfg.conjecture_id, "1.1, 1.2, 1.3 or 1.4")->required();
  conj->add_option("--d", cfg.d, "Gap parameter for 1.1");
  conj->add_flag("--all", cfg.all, "1.1: all d = 1..10");
  conj->add_option("--form", cfg.form, "1.3: x2+x+1, 4x2+1 or all");
  conj->add_option("--variant", cfg.variant, "1.3: binomial, squares or all");
  common(conj);

  auto* dis = app.add_subcommand("discriminator", "Least modulus for f(k) = (A k^2 + B k)/2");
  dis->add_option("--a", cfg.a)->required();
  dis->add_option("--b", cfg.b)->required();
  common(dis);

  auto* tab = app.add_subcommand("tables", "Print the embedded constant tables");
  tab->add_option("-o,--output", cfg.output);

  try {
    app.parse(argc, argv);
    cfg.eps = parse_eps(eps_text);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : apdisc::cli::kInvalidConfig;
  }
  cfg.timing = !no_timing;

  const std::pair<CLI::App*, Command> commands[] = {
      {t11, Command::verify_theorem11}, {r11, Command::verify_remark11}, {t12, Command::verify_theorem12},
      {r12, Command::verify_remark12},  {cor, Command::corollary11},     {win, Command::window_check},
      {conj, Command::conjecture},      {dis, Command::discriminator},   {tab, Command::tables},
  };
  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) cfg.command = command;
  }

  std::ios::sync_with_stdio(false);
  return apdisc::cli::run(cfg, std::cout, std::cerr);
}

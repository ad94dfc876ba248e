// wth: secrecy rates, bounds, sweeps and exact verification for the
// wiretap channel with a helper.
//
// Exit codes: 0 success, 1 assertion failure, 2 usage error, 3 I/O error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "wiretap/wiretap.hpp"

namespace {

using namespace wiretap;

constexpr int kExitOk = 0;
constexpr int kExitAssert = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RatesArgs {
  std::optional<int> n11, n21, n2;
  std::optional<double> log_snr1, beta1, beta2;
  std::string const_c = "0";
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x == 0.0 ? 0.0 : x);
  return buf;
}

void print_bounds(std::ostream &os, const UpperBounds &ub) {
  os << "ub1=" << to_exact_string(ub.ub1) << '\n'
     << "ub2=" << to_exact_string(ub.ub2) << '\n'
     << "ub3=" << to_exact_string(ub.ub3) << '\n'
     << "min_ub=" << to_exact_string(ub.min_ub) << '\n';
}

int run_rates(const RatesArgs &a, bool gaussian_only, double default_log_snr1) {
  const bool det = a.n11 || a.n21 || a.n2;
  const bool gau = a.log_snr1 || a.beta1 || a.beta2;
  if (det && gau) throw UsageError("give either --n11/--n21/--n2 or --log-snr1/--beta1/--beta2, not both");
  if (!det && !gau) throw UsageError("give a deterministic triple (--n11 --n21 --n2) or a Gaussian one (--beta1 --beta2)");
  if (gaussian_only && det) throw UsageError("the gaussian subcommand takes --log-snr1/--beta1/--beta2 only");
  const Rational c = parse_rational(a.const_c);
  if (c < 0) throw UsageError("--const-c must be nonnegative");

  if (det) {
    if (!(a.n11 && a.n21 && a.n2)) throw UsageError("deterministic family needs all of --n11 --n21 --n2");
    const ChannelParams p(*a.n11, *a.n21, *a.n2);
    const auto rb = r_achievable(p);
    const auto ub = gaussian_upper_bounds(p, c);
    std::cout << "family=deterministic\n"
              << "n11=" << p.n11() << " n21=" << p.n21() << " n2=" << p.n2() << " q=" << p.q()
              << " delta=" << p.delta() << '\n'
              << "case=" << to_string(rb.case_tag) << '\n'
              << "r_private=" << rb.r_private << '\n'
              << "r_common=" << rb.r_common << '\n'
              << "r_ach=" << rb.r_ach << '\n';
    print_bounds(std::cout, ub);
    std::cout << "tight=" << (Rational(rb.r_ach) == ub.min_ub ? "true" : "false") << '\n';
    if (rb.case_tag == CaseTag::Singular)
      std::cout << "note: " << (rb.degenerate ? "degenerate instance (n11 = 0)"
                                              : "n11 == n21 (delta = 0): no alignment scheme; private rate only")
                << '\n';
    return kExitOk;
  }

  if (!(a.beta1 && a.beta2)) throw UsageError("Gaussian family needs --beta1 and --beta2");
  const GaussianParams g{a.log_snr1.value_or(default_log_snr1), *a.beta1, *a.beta2};
  g.validate();
  const auto gr = gaussian_rate(g);
  const auto p = correspondence(g);
  const auto ub = gaussian_upper_bounds(p, c);
  std::cout << "family=gaussian\n"
            << "log_snr1=" << fmt(g.log_snr1) << " beta1=" << fmt(g.beta1) << " beta2=" << fmt(g.beta2) << '\n'
            << "correspondence n11=" << p.n11() << " n21=" << p.n21() << " n2=" << p.n2() << '\n'
            << "case=" << to_string(gr.case_tag) << '\n'
            << "r_private=" << fmt(gr.r_private) << '\n'
            << "r_common=" << fmt(gr.r_common) << '\n';
  if (gr.case_tag == CaseTag::Aligned) std::cout << "d=" << gr.d << '\n';
  if (gr.r_common_sum) std::cout << "r_common_sum=" << fmt(*gr.r_common_sum) << '\n';
  std::cout << "r_ach=" << fmt(gr.r_ach) << '\n' << "normalized=" << fmt(gr.normalized) << '\n';
  print_bounds(std::cout, ub);
  std::cout << "const_c=" << to_exact_string(c) << '\n'
            << "tight=" << (gr.r_ach == to_double(ub.min_ub) ? "true" : "false") << '\n';
  if (gr.case_tag == CaseTag::Singular)
    std::cout << "note: beta1 == 1: no alignment scheme; private rate only\n";
  return kExitOk;
}

struct SweepArgs {
  std::string axis, start, stop, step;
  std::optional<int> n11, n21, n2;
  std::optional<std::string> beta1, beta2;
  double log_snr1 = 40;
  std::string const_c = "0";
  std::string out;
  std::string format = "csv";
  bool asymptotic = false;
};

int run_sweep_cmd(const SweepArgs &a) {
  SweepSpec spec;
  try {
    spec.axis = parse_axis(a.axis);
    spec.start = parse_rational(a.start);
    spec.stop = parse_rational(a.stop);
    spec.step = parse_rational(a.step);
    spec.fixed.n11 = a.n11;
    spec.fixed.n21 = a.n21;
    spec.fixed.n2 = a.n2;
    if (a.beta1) spec.fixed.beta1 = parse_rational(*a.beta1);
    if (a.beta2) spec.fixed.beta2 = parse_rational(*a.beta2);
    spec.log_snr1 = a.log_snr1;
    spec.const_c = parse_rational(a.const_c);
    spec.asymptotic = a.asymptotic;
    spec.validate();
  } catch (const parameter_error &e) {
    throw UsageError(e.what());
  }

  std::vector<SweepRow> rows;
  try {
    rows = run_sweep(spec);
  } catch (const parameter_error &e) {
    throw UsageError(e.what());
  }

  std::ostringstream buf;
  if (a.format == "svg")
    write_svg(buf, spec, rows);
  else
    write_csv(buf, rows);

  if (a.out.empty() || a.out == "-") {
    std::cout << buf.str();
    return kExitOk;
  }
  std::ofstream f(a.out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open '" << a.out << "' for writing\n";
    return kExitIo;
  }
  f << buf.str();
  f.flush();
  if (!f) {
    std::cerr << "error: failed writing '" << a.out << "'\n";
    return kExitIo;
  }
  std::cerr << "wrote " << rows.size() << " rows to " << a.out << '\n';
  return kExitOk;
}

int run_verify(int max_q, bool oracle, std::uint64_t seed) {
  AuditOptions o{max_q, oracle, seed};
  try {
    check_audit_caps(o);
  } catch (const std::exception &e) {
    throw UsageError(e.what());
  }
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = audit_grid(o);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  for (const auto &f : rep.findings) std::cout << "finding: " << f << '\n';
  for (const auto &f : rep.failures) std::cout << "FAIL: " << f << '\n';
  std::cout << "instances=" << rep.instances << " schemes_checked=" << rep.schemes_checked
            << " singular=" << rep.singular;
  if (oracle) std::cout << " oracle_runs=" << rep.oracle_runs << " oracle_gaps=" << rep.oracle_gaps;
  std::cout << " failures=" << rep.failures.size() << " seconds=" << fmt(secs) << '\n'
            << (rep.ok() ? "verify: PASS" : "verify: FAIL") << '\n';
  return rep.ok() ? kExitOk : kExitAssert;
}

void add_rates_options(CLI::App *cmd, RatesArgs &a, bool with_det) {
  if (with_det) {
    cmd->add_option("--n11", a.n11, "bit levels of the legitimate link")->check(CLI::NonNegativeNumber);
    cmd->add_option("--n21", a.n21, "bit levels of helper -> legitimate receiver")->check(CLI::NonNegativeNumber);
    cmd->add_option("--n2", a.n2, "bit levels of both links to the eavesdropper")->check(CLI::NonNegativeNumber);
  }
  cmd->add_option("--log-snr1", a.log_snr1, "log2 SNR1 (default from WTH_DEFAULT_LOG_SNR1, else 40)");
  cmd->add_option("--beta1", a.beta1, "SNR2 = SNR1^beta1");
  cmd->add_option("--beta2", a.beta2, "SNR3 = SNR1^beta2");
  cmd->add_option("--const-c", a.const_c, "gap constant c added to the converse bounds (rational)");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Secrecy rates for the wiretap channel with a helper"};
  app.require_subcommand(1);

  double default_log_snr1 = 40;
  app.add_option("--default-log-snr1", default_log_snr1, "fallback log2 SNR1")
      ->envname("WTH_DEFAULT_LOG_SNR1")
      ->group("");

  RatesArgs rates_args, gaussian_args;
  auto *rates = app.add_subcommand("rates", "achievable rate and converse bounds for one instance");
  add_rates_options(rates, rates_args, true);
  auto *gaussian = app.add_subcommand("gaussian", "rates for a Gaussian instance (log-snr1, beta1, beta2)");
  add_rates_options(gaussian, gaussian_args, false);

  SweepArgs sw;
  auto *sweep = app.add_subcommand("sweep", "normalized rate/bound along one parameter axis");
  sweep->add_option("--axis", sw.axis, "beta1|beta2|n11|n21|n2")->required();
  sweep->add_option("--start", sw.start, "first axis value (rational)")->required();
  sweep->add_option("--stop", sw.stop, "last axis value (rational)")->required();
  sweep->add_option("--step", sw.step, "axis increment (rational)")->required();
  sweep->add_option("--n11", sw.n11)->check(CLI::NonNegativeNumber);
  sweep->add_option("--n21", sw.n21)->check(CLI::NonNegativeNumber);
  sweep->add_option("--n2", sw.n2)->check(CLI::NonNegativeNumber);
  sweep->add_option("--beta1", sw.beta1, "fixed beta1 (rational)");
  sweep->add_option("--beta2", sw.beta2, "fixed beta2 (rational)");
  auto *sweep_snr = sweep->add_option("--log-snr1", sw.log_snr1, "log2 SNR1 for Gaussian axes");
  sweep->add_option("--const-c", sw.const_c, "gap constant c (rational)");
  sweep->add_option("--out", sw.out, "output path (default stdout)");
  sweep->add_option("--format", sw.format, "csv|svg")->check(CLI::IsMember({"csv", "svg"}));
  sweep->add_flag("--asymptotic", sw.asymptotic, "deterministic normalized rate under the n <-> ceil(log SNR) map");

  int max_q = 10;
  bool oracle = false;
  std::uint64_t seed = 1;
  auto *verify = app.add_subcommand("verify", "exhaustive scheme/bound/oracle audit for all instances with q <= max-q");
  verify->add_option("--max-q", max_q, "largest q to audit")->envname("WTH_MAX_Q");
  verify->add_flag("--oracle", oracle, "also run the brute-force optimality oracle (max-q <= 10)");
  verify->add_option("--seed", seed, "seed for roundtrip simulation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*rates) return run_rates(rates_args, false, default_log_snr1);
    if (*gaussian) return run_rates(gaussian_args, true, default_log_snr1);
    if (*sweep) {
      if (!*sweep_snr) sw.log_snr1 = default_log_snr1;
      return run_sweep_cmd(sw);
    }
    if (*verify) return run_verify(max_q, oracle, seed);
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const parameter_error &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitAssert;
  }
  return kExitUsage;
}

// Command-line front end: spectra, wavefunction tables, partner potentials and
// the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xsusy/errors.hpp"
#include "xsusy/models.hpp"
#include "xsusy/report.hpp"
#include "xsusy/susy.hpp"
#include "xsusy/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

struct FamilyFlags {
  std::string family = "oscillator";
  double omega = 1.0;
  int l = 0;
  double A = 3.0;
  double B = 1.0;
  std::string potential = "extended";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--family", family, "oscillator or scarf")
        ->check(CLI::IsMember({"oscillator", "scarf"}));
    cmd->add_option("--omega", omega, "oscillator frequency (> 0)");
    cmd->add_option("--l", l, "angular momentum (0, 1, 2, ...)");
    cmd->add_option("--A", A, "Scarf I parameter A");
    cmd->add_option("--B", B, "Scarf I parameter B, 0 < B < A - 1");
  }

  bool is_oscillator() const { return family == "oscillator"; }
  xsusy::OscillatorParams oscillator() const {
    xsusy::OscillatorParams p{omega, l};
    p.validate();
    return p;
  }
  xsusy::ScarfParams scarf() const {
    xsusy::ScarfParams p{A, B};
    p.validate();
    return p;
  }
  xsusy::PotentialKind kind() const {
    return potential == "standard" ? xsusy::PotentialKind::standard : xsusy::PotentialKind::extended;
  }
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  os << text;
  if (!os) throw std::runtime_error("write failed for '" + path + "'");
}

int run_spectrum(const FamilyFlags& f, int nu_max, int n_interior, bool no_refine, std::optional<double> tol,
                 bool json) {
  xsusy::SpectrumOptions opts{n_interior, !no_refine};
  const auto report =
      f.is_oscillator()
          ? xsusy::compute_spectrum(f.oscillator(), f.kind(), nu_max, opts, tol.value_or(xsusy::kOscillatorSpectrumTol))
          : xsusy::compute_spectrum(f.scarf(), f.kind(), nu_max, opts, tol.value_or(xsusy::kScarfSpectrumTol));
  if (json) std::cout << xsusy::to_json(report).dump(2) << '\n';
  else std::cout << xsusy::to_csv(report);
  return report.passed() ? kExitOk : kExitFailed;
}

int run_sample(const FamilyFlags& f, int nu, int points, std::optional<double> x_min, std::optional<double> x_max,
               bool normalized, bool factored, const std::string& output) {
  if (nu < 0) throw xsusy::DomainError("--nu must be nonnegative");
  xsusy::BoundStateProblem problem;
  double lo, hi;
  std::function<xsusy::GroundStateFactors(double)> factors;
  if (f.is_oscillator()) {
    const auto p = f.oscillator();
    problem = xsusy::make_problem(p, f.kind());
    lo = x_min.value_or(0.0);
    hi = x_max.value_or(xsusy::oscillator_support(p, nu));
    factors = [p](double x) { return xsusy::ground_state_factorized(p, x); };
  } else {
    const auto p = f.scarf();
    problem = xsusy::make_problem(p, f.kind());
    lo = x_min.value_or(-kHalfPi);
    hi = x_max.value_or(kHalfPi);
    factors = [p](double x) { return xsusy::ground_state_factorized(p, x); };
  }
  auto table = xsusy::sample_wavefunction(problem, nu, lo, hi, points);
  if (normalized) table = xsusy::normalize(table);
  if (!factored) {
    write_output(output, xsusy::to_csv(table));
    return kExitOk;
  }
  std::vector<double> phi, psi10;
  for (double x : table.xs) {
    const auto g = factors(x);
    phi.push_back(g.one_plus_phi - 1.0);
    psi10.push_back(g.psi10);
  }
  write_output(output, xsusy::to_csv(table, &phi, &psi10));
  return kExitOk;
}

template <class Params>
std::string partner_csv(const Params& p, const std::vector<double>& xs,
                        double (*v_plus)(double, const Params&)) {
  std::ostringstream os;
  os << "x,w,w1,w2,v_plus,v_minus\n";
  using xsusy::format_double;
  for (double x : xs) {
    const auto w = xsusy::superpotential_closed(p, x);
    os << format_double(x) << ',' << format_double(w.total()) << ',' << format_double(w.w1) << ','
       << format_double(w.w2) << ',' << format_double(v_plus(x, p)) << ','
       << format_double(xsusy::partner_potential(p, x)) << '\n';
  }
  return os.str();
}

int run_partner(const FamilyFlags& f, int points, std::optional<double> x_min, std::optional<double> x_max,
                const std::string& output) {
  if (f.is_oscillator()) {
    const auto p = f.oscillator();
    const auto xs = xsusy::linspace(x_min.value_or(0.05), x_max.value_or(xsusy::oscillator_support(p, 5)), points);
    write_output(output, partner_csv(p, xs, &xsusy::v_oscillator_extended));
  } else {
    const auto p = f.scarf();
    const auto xs = xsusy::linspace(x_min.value_or(-1.5), x_max.value_or(1.5), points);
    write_output(output, partner_csv(p, xs, &xsusy::v_scarf_extended));
  }
  return kExitOk;
}

int run_verify(const std::vector<std::string>& only, bool perturb, bool json) {
  xsusy::VerifyOptions opts{only, perturb};
  const auto summary = xsusy::run_verification(opts);
  if (json) {
    std::cout << xsusy::to_json(summary).dump(2) << '\n';
  } else {
    for (const auto& c : summary.checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << '[' << c.group << "] " << c.name << ": "
                << xsusy::format_double(c.value) << " <= " << xsusy::format_double(c.tolerance);
      if (!c.detail.empty()) std::cout << " (" << c.detail << ')';
      std::cout << '\n';
    }
    std::cout << (summary.passed() ? "all checks passed" : "verification FAILED") << '\n';
  }
  return summary.passed() ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rationally extended radial oscillator and Scarf I potentials: spectra, states, SUSY partners"};
  app.require_subcommand(1);

  FamilyFlags spec_flags;
  int nu_max = 5, n_interior = 8000;
  bool no_refine = false, spec_json = false;
  std::optional<double> tol;
  auto* spectrum = app.add_subcommand("spectrum", "analytic vs finite-difference spectrum");
  spec_flags.add_to(spectrum);
  spectrum->add_option("--potential", spec_flags.potential, "standard or extended")
      ->check(CLI::IsMember({"standard", "extended"}));
  spectrum->add_option("--nu-max", nu_max, "highest level");
  spectrum->add_option("--n", n_interior, "interior grid points of the coarse grid");
  spectrum->add_flag("--no-refine", no_refine, "skip Richardson extrapolation");
  spectrum->add_option("--tol", tol, "absolute tolerance on |E_analytic - E_numeric|");
  spectrum->add_flag("--json", spec_json, "JSON report on stdout");

  FamilyFlags sample_flags;
  int nu = 0, points = 2001;
  std::optional<double> x_min, x_max;
  bool normalized = false, factored = false;
  std::string output;
  auto* sample = app.add_subcommand("sample", "wavefunction table as CSV");
  sample_flags.add_to(sample);
  sample->add_option("--potential", sample_flags.potential, "standard or extended")
      ->check(CLI::IsMember({"standard", "extended"}));
  sample->add_option("--nu", nu, "level");
  sample->add_option("--points", points, "number of samples")->check(CLI::Range(2, 10000000));
  sample->add_option("--x-min", x_min, "left end of the table");
  sample->add_option("--x-max", x_max, "right end of the table");
  sample->add_flag("--normalized", normalized, "scale to unit norm");
  sample->add_flag("--factored", factored, "add phi and psi10 columns");
  sample->add_option("-o,--output", output, "output path (default stdout)");

  FamilyFlags partner_flags;
  int partner_points = 401;
  std::optional<double> p_min, p_max;
  std::string partner_output;
  auto* partner = app.add_subcommand("partner", "superpotential and V+/V- tables as CSV");
  partner_flags.add_to(partner);
  partner->add_option("--points", partner_points, "number of samples")->check(CLI::Range(2, 10000000));
  partner->add_option("--x-min", p_min, "left end");
  partner->add_option("--x-max", p_max, "right end");
  partner->add_option("-o,--output", partner_output, "output path (default stdout)");

  std::vector<std::string> only;
  bool perturb = false, verify_json = false;
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--only", only, "restrict to check groups")
      ->check(CLI::IsMember(xsusy::verification_groups()));
  verify->add_flag("--perturb-v2", perturb, "test hook: perturb the rational terms fed to the numeric oracle");
  verify->add_flag("--json", verify_json, "JSON summary on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*spectrum) return run_spectrum(spec_flags, nu_max, n_interior, no_refine, tol, spec_json);
    if (*sample) return run_sample(sample_flags, nu, points, x_min, x_max, normalized, factored, output);
    if (*partner) return run_partner(partner_flags, partner_points, p_min, p_max, partner_output);
    if (*verify) return run_verify(only, perturb, verify_json);
  } catch (const std::exception& e) {
    // Invalid parameters, degenerate tables and I/O failures alike.
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

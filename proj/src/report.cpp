#include "xsusy/report.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "xsusy/errors.hpp"

namespace xsusy {

namespace {

template <class Params>
SpectrumReport spectrum_impl(const Params& p, PotentialKind kind, int nu_max, const SpectrumOptions& opts,
                             double tolerance, double lo, double hi, std::string family,
                             nlohmann::json params) {
  if (nu_max < 0) throw DomainError("compute_spectrum: nu_max must be nonnegative");
  const auto problem = make_problem(p, kind);
  const auto numeric = solve_spectrum(problem.potential, lo, hi, nu_max + 1, opts);
  SpectrumReport r;
  r.family = std::move(family);
  r.potential = to_string(kind);
  r.params = std::move(params);
  r.domain_lo = lo;
  r.domain_hi = hi;
  r.n_interior = opts.n_interior;
  r.refine = opts.refine;
  r.tolerance = tolerance;
  for (int nu = 0; nu <= nu_max; ++nu) {
    const double e = problem.energy(nu);
    r.rows.push_back({nu, e, numeric[nu], std::abs(e - numeric[nu])});
  }
  return r;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

bool SpectrumReport::passed() const {
  for (const auto& row : rows)
    if (!(row.abs_diff <= tolerance)) return false;
  return true;
}

double oscillator_box(const OscillatorParams& p, int nu_max) {
  const double root = std::sqrt(p.omega);
  return std::max(20.0 / root, oscillator_support(p, nu_max) + 4.0 / root);
}

SpectrumReport compute_spectrum(const OscillatorParams& p, PotentialKind kind, int nu_max,
                                const SpectrumOptions& opts, double tolerance) {
  p.validate();
  return spectrum_impl(p, kind, nu_max, opts, tolerance, 0.0, oscillator_box(p, nu_max), "oscillator",
                       {{"omega", p.omega}, {"l", p.l}});
}

SpectrumReport compute_spectrum(const ScarfParams& p, PotentialKind kind, int nu_max,
                                const SpectrumOptions& opts, double tolerance) {
  p.validate();
  const double h = 0.5 * std::numbers::pi;
  return spectrum_impl(p, kind, nu_max, opts, tolerance, -h, h, "scarf", {{"A", p.A}, {"B", p.B}});
}

nlohmann::json to_json(const SpectrumReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"nu", r.nu}, {"E_analytic", r.e_analytic}, {"E_numeric", r.e_numeric}, {"abs_diff", r.abs_diff}});
  return {{"schema_version", kSchemaVersion},
          {"family", report.family},
          {"potential", report.potential},
          {"params", report.params},
          {"rows", rows},
          {"oracle",
           {{"domain", {report.domain_lo, report.domain_hi}},
            {"n_interior", report.n_interior},
            {"refine", report.refine},
            {"tolerance", report.tolerance}}},
          {"passed", report.passed()}};
}

std::string to_csv(const SpectrumReport& report) {
  std::ostringstream os;
  os << "nu,E_analytic,E_numeric,abs_diff\n";
  for (const auto& r : report.rows)
    os << r.nu << ',' << format_double(r.e_analytic) << ',' << format_double(r.e_numeric) << ','
       << format_double(r.abs_diff) << '\n';
  return os.str();
}

CheckResult make_check(std::string group, std::string name, double value, double tolerance, std::string detail) {
  CheckResult c;
  c.group = std::move(group);
  c.name = std::move(name);
  c.value = value;
  c.tolerance = tolerance;
  c.passed = value <= tolerance;  // false for NaN
  c.detail = std::move(detail);
  return c;
}

bool VerifySummary::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

nlohmann::json to_json(const VerifySummary& summary) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : summary.checks) {
    nlohmann::json j{{"group", c.group}, {"name", c.name}, {"tolerance", c.tolerance}, {"passed", c.passed}};
    // JSON has no NaN; a non-finite measurement is stored as null.
    if (std::isfinite(c.value)) j["value"] = c.value;
    else j["value"] = nullptr;
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  return {{"schema_version", kSchemaVersion}, {"passed", summary.passed()}, {"checks", checks}};
}

VerifySummary verify_summary_from_json(const nlohmann::json& j) {
  if (j.value("schema_version", 0) != kSchemaVersion)
    throw DomainError("verify summary: unsupported schema_version");
  VerifySummary s;
  for (const auto& c : j.at("checks")) {
    const double value = c.at("value").is_null() ? std::nan("") : c.at("value").get<double>();
    auto check = make_check(c.at("group").get<std::string>(), c.at("name").get<std::string>(), value,
                            c.at("tolerance").get<double>(), c.value("detail", std::string{}));
    s.checks.push_back(std::move(check));
  }
  return s;
}

std::string to_csv(const WavefunctionTable& table, const std::vector<double>* phi,
                   const std::vector<double>* psi10) {
  const bool factored = phi != nullptr && psi10 != nullptr;
  if (factored && (phi->size() != table.xs.size() || psi10->size() != table.xs.size()))
    throw DomainError("to_csv: factor columns do not match the table length");
  std::ostringstream os;
  os << (factored ? "x,psi,phi,psi10\n" : "x,psi\n");
  for (std::size_t i = 0; i < table.xs.size(); ++i) {
    os << format_double(table.xs[i]) << ',' << format_double(table.values[i]);
    if (factored) os << ',' << format_double((*phi)[i]) << ',' << format_double((*psi10)[i]);
    os << '\n';
  }
  return os.str();
}

}  // namespace xsusy

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "xsusy/models.hpp"
#include "xsusy/numerics.hpp"

namespace xsusy {

inline constexpr int kSchemaVersion = 1;

/// 17 significant digits, '.' decimal point regardless of locale.
std::string format_double(double v);

struct SpectrumRow {
  int nu = 0;
  double e_analytic = 0.0;
  double e_numeric = 0.0;
  double abs_diff = 0.0;
};

struct SpectrumReport {
  std::string family;
  std::string potential;
  nlohmann::json params;
  std::vector<SpectrumRow> rows;
  double domain_lo = 0.0;
  double domain_hi = 0.0;
  int n_interior = 0;
  bool refine = true;
  double tolerance = 0.0;

  bool passed() const;
};

/// Box used for the oscillator oracle: max(20/sqrt(omega), support + 4/sqrt(omega)).
double oscillator_box(const OscillatorParams& p, int nu_max);

SpectrumReport compute_spectrum(const OscillatorParams& p, PotentialKind kind, int nu_max,
                                const SpectrumOptions& opts, double tolerance);
SpectrumReport compute_spectrum(const ScarfParams& p, PotentialKind kind, int nu_max,
                                const SpectrumOptions& opts, double tolerance);

nlohmann::json to_json(const SpectrumReport& report);
std::string to_csv(const SpectrumReport& report);

/// A single verification check; passes iff value <= tolerance.
struct CheckResult {
  std::string group;
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

CheckResult make_check(std::string group, std::string name, double value, double tolerance,
                       std::string detail = {});

struct VerifySummary {
  std::vector<CheckResult> checks;
  bool passed() const;
};

nlohmann::json to_json(const VerifySummary& summary);
VerifySummary verify_summary_from_json(const nlohmann::json& j);

/// CSV with header x,psi (plus phi,psi10 when factors are supplied).
std::string to_csv(const WavefunctionTable& table, const std::vector<double>* phi = nullptr,
                   const std::vector<double>* psi10 = nullptr);

}  // namespace xsusy

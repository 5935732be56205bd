#pragma once

#include <string>
#include <vector>

#include "xsusy/models.hpp"
#include "xsusy/report.hpp"

namespace xsusy {

/// omega in {1, 2} x l in {0, 1, 2}.
std::vector<OscillatorParams> oscillator_sweep();
/// (A, B) in {(3, 1), (4, 1.5), (5, 2)}.
std::vector<ScarfParams> scarf_sweep();

/// Default oracle tolerances for the two spectra.
inline constexpr double kOscillatorSpectrumTol = 1e-4;
inline constexpr double kScarfSpectrumTol = 1e-3;

struct VerifyOptions {
  /// Groups to run; empty means all.
  std::vector<std::string> only;
  /// Test hook: scale the rational part of every extended potential fed to the
  /// numeric oracle by 1.1, which must break isospectrality.
  bool perturb_v2 = false;
};

/// xpoly, numerics, models, nodes, orthogonality, pct, susy,
/// shape-invariance, spectrum, isospectrality, partner.
const std::vector<std::string>& verification_groups();

/// Runs the selected check groups. Throws DomainError for unknown group names.
VerifySummary run_verification(const VerifyOptions& opts);

}  // namespace xsusy

#pragma once

#include "report.hpp"
#include "run_config.hpp"

namespace pdmsusy::cli {

inline constexpr double kIdentityTolerance = 1e-9;
inline constexpr double kSpectrumTolerance = 1e-3;
inline constexpr double kQuadratureTolerance = 1e-6;
inline constexpr std::size_t kReportPoints = 1024;
inline constexpr std::size_t kSolverPoints = 4000;

/// z, M, M', M'', U, V0, Veff on `points` equally spaced points (endpoints included).
CommandResult cmd_potential(const RunConfig& cfg);

/// Max-abs residuals of the ordering-selection, duality, partner-difference
/// and (with --epsilon) uniform-shift consistency identities.
CommandResult cmd_identities(const RunConfig& cfg);

/// Uniform-shift family: superpotential pieces, analytic and numeric ground
/// states, and the ZK and BDD spectra against (n + 1/2) epsilon.
CommandResult cmd_uniform_shift(const RunConfig& cfg);

/// Morse-like f0 and W by quadrature, with the closed form alongside when
/// the mass is the rational-square family and zref = 0.
CommandResult cmd_morse(const RunConfig& cfg);

/// Lowest eigenvalues of the effective Hamiltonian for the chosen ordering.
CommandResult cmd_spectrum(const RunConfig& cfg);

CommandResult run_command(const RunConfig& cfg);

}  // namespace pdmsusy::cli

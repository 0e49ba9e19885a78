#pragma once

#include <string>
#include <vector>

namespace mlqm::cli {

enum class Units { natural, si };
enum class Format { csv, json };
enum class Potential { delta, coulomb };

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNoConvergence = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Fully resolved run parameters.  hbar/mass are set from the unit system;
/// mu_list drives sweeps (falls back to {mu} when empty).
struct RunConfig {
  Units units = Units::natural;
  double hbar = 1.0;
  double mass = 1.0;
  double mu = 10.0;
  std::vector<double> mu_list;
  double kappa = 1.0;
  double z_e2 = 1.0;
  int n_max = 1;
  int grid_size = 400;
  Format format = Format::csv;
  std::string out_path; // empty: stdout
  double tol = 1e-10;
};

/// Sets hbar and mass from the unit system (natural: both 1; si: CODATA
/// hbar and electron mass).  Couplings and mu are left as provided.
RunConfig resolve_units(RunConfig config);

/// 17-significant-digit scientific notation, fixed width, locale-free.
std::string fmt17(double v);

int cmd_delta_spectrum(const RunConfig& config);
int cmd_coulomb_spectrum(const RunConfig& config);
int cmd_effective_potential(const RunConfig& config, Potential which);
int cmd_verify(const RunConfig& config);

} // namespace mlqm::cli

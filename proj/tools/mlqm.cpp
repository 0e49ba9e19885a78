// mlqm: bound states, wavefunction curves, and regularized effective
// potentials for one-dimensional quantum mechanics with a minimal length.
#include "mlqm/cli.hpp"
#include "mlqm/model.hpp"

#include <CLI11.hpp>

#include <map>
#include <string>

namespace {

using mlqm::cli::Format;
using mlqm::cli::Potential;
using mlqm::cli::RunConfig;
using mlqm::cli::Units;

struct CommonFlags {
  CLI::Option* mu = nullptr;
  CLI::Option* mu_list = nullptr;
};

CommonFlags add_common(CLI::App* sub, RunConfig& config) {
  CommonFlags flags;
  flags.mu = sub->add_option("--mu", config.mu,
                             "Deformation scale (momentum units)");
  flags.mu_list =
      sub->add_option("--mu-list", config.mu_list,
                      "Comma-separated list of deformation scales")
          ->delimiter(',');
  sub->add_option("--units", config.units, "Unit system")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Units>{{"natural", Units::natural},
                                       {"si", Units::si}},
          CLI::ignore_case));
  sub->add_option("--grid-size", config.grid_size,
                  "Discretization size for the verification suite");
  sub->add_option("--format", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"csv", Format::csv},
                                        {"json", Format::json}},
          CLI::ignore_case));
  sub->add_option("--out", config.out_path, "Output path (default: stdout)");
  sub->add_option("--tol", config.tol, "Root-finding tolerance");
  return flags;
}

// Fill μ and couplings from CODATA-scale defaults when running in SI and the
// user did not pick values; natural units default to 1 via RunConfig.
void apply_si_defaults(RunConfig& config, const CommonFlags& flags,
                       const CLI::Option* kappa, const CLI::Option* ze2) {
  if (config.units != Units::si) return;
  const double coupling = mlqm::kFineStructure * mlqm::kSiHbar *
                          mlqm::kSpeedOfLight;
  if (kappa != nullptr && kappa->count() == 0) config.kappa = coupling;
  if (ze2 != nullptr && ze2->count() == 0) config.z_e2 = coupling;
  const bool mu_given =
      flags.mu->count() > 0 || flags.mu_list->count() > 0;
  if (!mu_given) config.mu = mlqm::kSiHbar / 3.742e-11;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound states and regularized effective potentials for "
               "one-dimensional quantum mechanics with a minimal length"};
  app.require_subcommand(1);

  RunConfig delta_config;
  auto* delta_sub = app.add_subcommand(
      "delta-spectrum", "Bound state of the attractive delta potential");
  const CommonFlags delta_flags = add_common(delta_sub, delta_config);
  const CLI::Option* delta_kappa = delta_sub->add_option(
      "--kappa", delta_config.kappa, "Delta coupling strength");

  RunConfig coulomb_config;
  auto* coulomb_sub = app.add_subcommand(
      "coulomb-spectrum", "Bound-state branches of the 1D Coulomb potential");
  const CommonFlags coulomb_flags = add_common(coulomb_sub, coulomb_config);
  const CLI::Option* coulomb_ze2 = coulomb_sub->add_option(
      "--ze2", coulomb_config.z_e2, "Coulomb coupling Ze^2");
  coulomb_sub->add_option("--n-max", coulomb_config.n_max,
                          "Largest level index to export");

  RunConfig curve_config;
  Potential which = Potential::delta;
  auto* curve_sub = app.add_subcommand(
      "effective-potential",
      "Sample the regularized effective potential on a uniform grid");
  const CommonFlags curve_flags = add_common(curve_sub, curve_config);
  curve_sub
      ->add_option("--potential", which, "Which potential to sample")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Potential>{{"delta", Potential::delta},
                                           {"coulomb", Potential::coulomb}},
          CLI::ignore_case))
      ->required();
  const CLI::Option* curve_kappa = curve_sub->add_option(
      "--kappa", curve_config.kappa, "Delta coupling strength");
  const CLI::Option* curve_ze2 = curve_sub->add_option(
      "--ze2", curve_config.z_e2, "Coulomb coupling Ze^2");

  RunConfig verify_config;
  auto* verify_sub = app.add_subcommand(
      "verify", "Run the numerical cross-validation suite");
  add_common(verify_sub, verify_config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? mlqm::cli::kExitOk : mlqm::cli::kExitConfig;
  }

  if (delta_sub->parsed()) {
    RunConfig config = mlqm::cli::resolve_units(delta_config);
    apply_si_defaults(config, delta_flags, delta_kappa, nullptr);
    return mlqm::cli::cmd_delta_spectrum(config);
  }
  if (coulomb_sub->parsed()) {
    RunConfig config = mlqm::cli::resolve_units(coulomb_config);
    apply_si_defaults(config, coulomb_flags, nullptr, coulomb_ze2);
    return mlqm::cli::cmd_coulomb_spectrum(config);
  }
  if (curve_sub->parsed()) {
    RunConfig config = mlqm::cli::resolve_units(curve_config);
    apply_si_defaults(config, curve_flags, curve_kappa, curve_ze2);
    return mlqm::cli::cmd_effective_potential(config, which);
  }
  RunConfig config = mlqm::cli::resolve_units(verify_config);
  return mlqm::cli::cmd_verify(config);
}

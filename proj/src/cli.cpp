#include "mlqm/cli.hpp"

#include "mlqm/coulomb_bound.hpp"
#include "mlqm/delta_bound.hpp"
#include "mlqm/errors.hpp"
#include "mlqm/model.hpp"
#include "mlqm/verify.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

namespace mlqm::cli {

namespace {

using nlohmann::json;

// Writes to --out when set, stdout otherwise; refuses unopenable paths.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw DomainError("out: cannot open '" + path + "'");
      out_ = &file_;
    } else {
      out_ = &std::cout;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_ = nullptr;
};

std::string csv_quote(const std::string& s) {
  bool needs = false;
  for (char c : s)
    if (c == ',' || c == '"' || c == '\n') needs = true;
  if (!needs) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += "\"\"";
    else q += c;
  }
  q += "\"";
  return q;
}

std::vector<double> sweep_mus(const RunConfig& config) {
  if (!config.mu_list.empty()) return config.mu_list;
  return {config.mu};
}

void validate_common(const RunConfig& config) {
  if (!(config.hbar > 0.0)) throw DomainError("hbar: must be positive");
  if (!(config.mass > 0.0)) throw DomainError("mass: must be positive");
  for (const double mu : sweep_mus(config))
    if (!(mu > 0.0) || !std::isfinite(mu))
      throw DomainError("mu: must be positive and finite");
  if (!(config.tol > 0.0) || !(config.tol < 1.0))
    throw DomainError("tol: must be in (0, 1)");
  if (config.grid_size < 50) throw DomainError("grid-size: must be >= 50");
  if (config.n_max < 1) throw DomainError("n-max: must be >= 1");
}

// Exit-code policy shared by all commands.
int run_guarded(const std::function<void()>& body) {
  try {
    body();
    return kExitOk;
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidBracket& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const OverflowError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const NoConvergence& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const StepUnderflow& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const GridTooCoarse& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const EigenFailure& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNoConvergence;
  }
}

struct DeltaRow {
  double mu, p0_exact, e_exact, e_asymptotic, rel_gap, min_length;
};

struct CoulombRow {
  double mu = 0.0;
  int n = 0;
  double discriminant = 0.0;
  std::optional<double> p0_minus, p0_plus, e_minus, e_plus;
  std::optional<double> e_minus_expansion, e_minus_expansion_derived;
  double min_length_bound = 0.0;
  const char* status = "ok";
};

std::string opt17(const std::optional<double>& v) {
  return v ? fmt17(*v) : std::string();
}

json opt_json(const std::optional<double>& v) {
  if (v) return *v;
  return nullptr;
}

} // namespace

RunConfig resolve_units(RunConfig config) {
  if (config.units == Units::si) {
    config.hbar = kSiHbar;
    config.mass = kSiElectronMass;
  } else {
    config.hbar = 1.0;
    config.mass = 1.0;
  }
  return config;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

int cmd_delta_spectrum(const RunConfig& config) {
  return run_guarded([&] {
    validate_common(config);
    if (!(config.kappa > 0.0)) throw DomainError("kappa: must be positive");
    std::vector<DeltaRow> rows;
    for (const double mu : sweep_mus(config)) {
      const ModelParams params{config.hbar, config.mass, mu};
      const delta::Coupling coupling{config.kappa};
      const auto state =
          delta::solve_bound_state(params, coupling, config.tol);
      DeltaRow row;
      row.mu = mu;
      row.p0_exact = state.p0;
      row.e_exact = state.energy;
      row.e_asymptotic = delta::energy_asymptotic(params, coupling);
      row.rel_gap =
          std::abs(state.energy - row.e_asymptotic) / std::abs(state.energy);
      row.min_length = params.minimal_length();
      rows.push_back(row);
    }
    Sink sink(config.out_path);
    if (config.format == Format::csv) {
      sink.stream() << "mu,p0_exact,e_exact,e_asymptotic,rel_gap,min_length\n";
      for (const auto& r : rows)
        sink.stream() << fmt17(r.mu) << ',' << fmt17(r.p0_exact) << ','
                      << fmt17(r.e_exact) << ',' << fmt17(r.e_asymptotic)
                      << ',' << fmt17(r.rel_gap) << ','
                      << fmt17(r.min_length) << '\n';
    } else {
      json doc;
      doc["schema_version"] = "1";
      doc["command"] = "delta-spectrum";
      doc["rows"] = json::array();
      for (const auto& r : rows)
        doc["rows"].push_back({{"mu", r.mu},
                               {"p0_exact", r.p0_exact},
                               {"e_exact", r.e_exact},
                               {"e_asymptotic", r.e_asymptotic},
                               {"rel_gap", r.rel_gap},
                               {"min_length", r.min_length}});
      sink.stream() << doc.dump(2) << '\n';
    }
  });
}

int cmd_coulomb_spectrum(const RunConfig& config) {
  return run_guarded([&] {
    validate_common(config);
    if (!(config.z_e2 > 0.0)) throw DomainError("ze2: must be positive");
    std::vector<CoulombRow> rows;
    for (const double mu : sweep_mus(config)) {
      const ModelParams params{config.hbar, config.mass, mu};
      for (int n = 1; n <= config.n_max; ++n) {
        const coulomb::Coupling coupling{config.z_e2, n};
        const auto spec = coulomb::try_spectral_roots(params, coupling);
        CoulombRow row;
        row.mu = mu;
        row.n = n;
        row.discriminant = spec.discriminant;
        row.min_length_bound =
            coulomb::min_length_bound(n, params, coupling);
        if (spec.has_roots()) {
          const auto expansions = coulomb::energy_expansions(params, coupling);
          row.p0_minus = spec.p0_minus;
          row.p0_plus = spec.p0_plus;
          row.e_minus = spec.e_minus;
          row.e_plus = spec.e_plus;
          row.e_minus_expansion = expansions.e_minus_expansion;
          row.e_minus_expansion_derived =
              expansions.e_minus_expansion_derived;
        } else {
          row.status = "no-bound-state";
        }
        rows.push_back(row);
      }
    }
    Sink sink(config.out_path);
    if (config.format == Format::csv) {
      sink.stream()
          << "mu,n,discriminant,p0_minus,p0_plus,e_minus,e_plus,"
             "e_minus_expansion,e_minus_expansion_derived,min_length_bound,"
             "status\n";
      for (const auto& r : rows)
        sink.stream() << fmt17(r.mu) << ',' << r.n << ','
                      << fmt17(r.discriminant) << ',' << opt17(r.p0_minus)
                      << ',' << opt17(r.p0_plus) << ',' << opt17(r.e_minus)
                      << ',' << opt17(r.e_plus) << ','
                      << opt17(r.e_minus_expansion) << ','
                      << opt17(r.e_minus_expansion_derived) << ','
                      << fmt17(r.min_length_bound) << ',' << r.status << '\n';
    } else {
      json doc;
      doc["schema_version"] = "1";
      doc["command"] = "coulomb-spectrum";
      doc["rows"] = json::array();
      for (const auto& r : rows)
        doc["rows"].push_back(
            {{"mu", r.mu},
             {"n", r.n},
             {"discriminant", r.discriminant},
             {"p0_minus", opt_json(r.p0_minus)},
             {"p0_plus", opt_json(r.p0_plus)},
             {"e_minus", opt_json(r.e_minus)},
             {"e_plus", opt_json(r.e_plus)},
             {"e_minus_expansion", opt_json(r.e_minus_expansion)},
             {"e_minus_expansion_derived",
              opt_json(r.e_minus_expansion_derived)},
             {"min_length_bound", r.min_length_bound},
             {"status", r.status}});
      sink.stream() << doc.dump(2) << '\n';
    }
  });
}

int cmd_effective_potential(const RunConfig& config, Potential which) {
  return run_guarded([&] {
    validate_common(config);
    if (which == Potential::delta && !(config.kappa > 0.0))
      throw DomainError("kappa: must be positive");
    if (which == Potential::coulomb && !(config.z_e2 > 0.0))
      throw DomainError("ze2: must be positive");
    const auto mus = sweep_mus(config);
    double mu_min = mus.front();
    for (const double mu : mus) mu_min = std::min(mu_min, mu);
    // Wide enough that the delta well's truncated tail area is < 1e-10*kappa.
    const double half_range = 10.0 * config.hbar / mu_min;
    constexpr int kSamples = 501;

    struct CurveRow {
      double x, v, mu;
    };
    std::vector<CurveRow> rows;
    rows.reserve(mus.size() * kSamples);
    for (const double mu : mus) {
      const ModelParams params{config.hbar, config.mass, mu};
      for (int i = 0; i < kSamples; ++i) {
        const double x =
            -half_range + 2.0 * half_range * i / (kSamples - 1);
        double v = 0.0;
        if (which == Potential::delta) {
          const delta::Coupling coupling{config.kappa};
          v = delta::v_eff(x, params, coupling);
        } else {
          const coulomb::Coupling coupling{config.z_e2, 1};
          v = coulomb::v_eff(x, params, coupling);
        }
        rows.push_back({x, v, mu});
      }
    }
    Sink sink(config.out_path);
    if (config.format == Format::csv) {
      sink.stream() << "x,v_eff,mu\n";
      for (const auto& r : rows)
        sink.stream() << fmt17(r.x) << ',' << fmt17(r.v) << ','
                      << fmt17(r.mu) << '\n';
    } else {
      json doc;
      doc["schema_version"] = "1";
      doc["command"] = "effective-potential";
      doc["potential"] = which == Potential::delta ? "delta" : "coulomb";
      doc["rows"] = json::array();
      for (const auto& r : rows)
        doc["rows"].push_back({{"x", r.x}, {"v_eff", r.v}, {"mu", r.mu}});
      sink.stream() << doc.dump(2) << '\n';
    }
  });
}

int cmd_verify(const RunConfig& config) {
  int exit_code = kExitOk;
  const int guarded = run_guarded([&] {
    validate_common(config);
    verify::Options options;
    options.mu = config.mu;
    options.grid_size = config.grid_size;
    options.tol = config.tol;
    const verify::Report report = verify::run_all(options);

    Sink sink(config.out_path);
    if (config.format == Format::csv) {
      sink.stream() << "name,status,measured,detail\n";
      for (const auto& c : report.checks)
        sink.stream() << c.name << ',' << verify::to_string(c.status) << ','
                      << fmt17(c.measured) << ',' << csv_quote(c.detail)
                      << '\n';
    } else {
      json doc;
      doc["schema_version"] = "1";
      doc["command"] = "verify";
      doc["all_passed"] = report.all_passed();
      doc["checks"] = json::array();
      for (const auto& c : report.checks)
        doc["checks"].push_back({{"name", c.name},
                                 {"status", verify::to_string(c.status)},
                                 {"measured", c.measured},
                                 {"detail", c.detail}});
      sink.stream() << doc.dump(2) << '\n';
    }
    if (!report.all_passed()) exit_code = kExitVerifyFailed;
  });
  return guarded != kExitOk ? guarded : exit_code;
}

} // namespace mlqm::cli

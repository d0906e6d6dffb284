// Command-line front end: evaluate spectral amplitudes, run Schmidt
// decompositions, sweep shift geometries, search placements, run bundled
// reproduction presets, and validate configuration files.
//
// Exit codes: 0 success, 2 validation error, 3 numerical-convergence
// failure, 4 I/O error.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bimux/config.hpp"
#include "bimux/io.hpp"
#include "bimux/presets.hpp"
#include "bimux/shaping.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitIo = 4;

struct CommonOpts {
  std::string config_path;
  std::string out_dir = ".";
  int grid_points = 0;      // 0: keep config value
  double window = 0.0;      // 0: keep config value
  std::string evaluator;    // empty: keep config value
  int quad_nodes = 0;       // 0: keep config value
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_path, "JSON config file");
  cmd->add_option("--out", o.out_dir, "output directory");
  cmd->add_option("--grid-points", o.grid_points, "grid points per axis");
  cmd->add_option("--window", o.window, "grid half width (Gamma3 units)");
  cmd->add_option("--evaluator", o.evaluator,
                  "per-cell evaluator: closed | quad");
  cmd->add_option("--quad-nodes", o.quad_nodes, "Gauss-Hermite node count");
}

// Config file first, command-line overrides second.
bimux::RunConfig resolve(const CommonOpts& o) {
  bimux::RunConfig cfg;
  if (!o.config_path.empty()) {
    const bimux::ConfigParse parsed = bimux::validate_config(o.config_path);
    if (!parsed.ok()) {
      for (const auto& e : parsed.errors)
        std::cerr << "config error: " << e.path << ": " << e.reason << "\n";
      throw CLI::RuntimeError(kExitValidation);
    }
    cfg = *parsed.config;
  }
  if (o.grid_points > 0) cfg.grid.n_points = o.grid_points;
  if (o.window > 0.0) cfg.grid.half_width = o.window;
  if (!o.evaluator.empty()) cfg.evaluator = o.evaluator;
  if (o.quad_nodes > 0) cfg.quad_nodes = o.quad_nodes;
  if (cfg.evaluator != "closed" && cfg.evaluator != "quad") {
    std::cerr << "config error: evaluator must be closed or quad\n";
    throw CLI::RuntimeError(kExitValidation);
  }
  return cfg;
}

bimux::JointSpectralMatrix build_from_config(const bimux::RunConfig& cfg) {
  const bimux::DerivedParams dp = bimux::derive(cfg.physical);
  const bimux::ShiftSet shifts = bimux::make_shifts(cfg.geometry);
  if (cfg.evaluator == "quad") {
    return bimux::build_jsa(cfg.grid, shifts, [&](bimux::SpectralPoint p) {
      return bimux::f_doppler_quad(p,
                                   bimux::PropagationScheme::CoPropagating,
                                   dp, cfg.physical, cfg.quad_nodes);
    });
  }
  return bimux::build_jsa(cfg.grid, shifts, dp, cfg.physical);
}

std::filesystem::path out_file(const CommonOpts& o, const std::string& name) {
  std::filesystem::create_directories(o.out_dir);
  return std::filesystem::path(o.out_dir) / name;
}

int run_eval(const CommonOpts& o, double ws, double wi,
             const std::string& scheme) {
  const bimux::RunConfig cfg = resolve(o);
  const bimux::DerivedParams dp = bimux::derive(cfg.physical);
  const bimux::SpectralPoint p{ws, wi};
  const auto prop = scheme == "counter"
                        ? bimux::PropagationScheme::CounterPropagating
                        : bimux::PropagationScheme::CoPropagating;

  nlohmann::json j;
  j["config"] = cfg.resolved();
  j["point"] = {{"d_omega_s", ws}, {"d_omega_i", wi}};
  j["scheme"] = scheme;
  const auto fc = bimux::f_cold(p, cfg.physical);
  j["f_cold"] = {{"re", fc.real()}, {"im", fc.imag()}};
  if (prop == bimux::PropagationScheme::CoPropagating) {
    const auto fd = bimux::f_doppler_closed(p, dp, cfg.physical);
    j["f_doppler_closed"] = {{"re", fd.real()}, {"im", fd.imag()}};
  }
  const auto q = bimux::f_doppler_quad_checked(p, prop, dp, cfg.physical,
                                               cfg.quad_nodes);
  j["f_doppler_quad"] = {{"re", q.value.real()},
                         {"im", q.value.imag()},
                         {"rel_delta_on_doubling", q.rel_delta},
                         {"converged", q.converged}};
  std::cout << j.dump(2) << "\n";
  return q.converged ? 0 : kExitConvergence;
}

int run_schmidt(const CommonOpts& o, int modes) {
  const bimux::RunConfig cfg = resolve(o);
  const auto t0 = std::chrono::steady_clock::now();
  const bimux::JointSpectralMatrix f = build_from_config(cfg);
  const bimux::SchmidtResult r = bimux::schmidt_decompose(f, modes);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  bimux::write_schmidt_json(out_file(o, "schmidt.json").string(), r,
                            f.warnings, cfg.resolved(), elapsed);
  if (modes > 0) {
    const auto omega = cfg.grid.points();
    for (int m = 0; m < modes && m < r.modes_s.cols(); ++m) {
      bimux::write_mode_csv(
          out_file(o, "mode_psi_" + std::to_string(m + 1) + ".csv").string(),
          omega, r.modes_s, m, cfg.resolved());
      bimux::write_mode_csv(
          out_file(o, "mode_phi_" + std::to_string(m + 1) + ".csv").string(),
          omega, r.modes_i, m, cfg.resolved());
    }
  }
  std::cout << "S = " << r.entropy_S << " bits, K = " << r.schmidt_K << " ("
            << r.lambdas.size() << " retained weights)\n";
  for (const auto& w : f.warnings) std::cout << "warning: " << w << "\n";
  return 0;
}

int run_sweep_cmd(const CommonOpts& o, const std::string& family,
                  double dq_min, double dq_max, double dq_step, int n_mp) {
  const bimux::RunConfig cfg = resolve(o);
  const auto fam = bimux::family_from_name(family);
  if (!fam) {
    std::cerr << "config error: unknown geometry family '" << family << "'\n";
    return kExitValidation;
  }
  bimux::SweepSpec spec;
  spec.family = *fam;
  spec.n_mp = n_mp;
  spec.dq_values = bimux::dq_range(dq_min, dq_max, dq_step);
  const bimux::FrequencyGrid grid{cfg.grid.half_width,
                                  std::min(cfg.grid.n_points, 512)};
  const auto curves = bimux::run_sweep(spec, grid, cfg.physical);
  const auto file = out_file(o, "sweep_" + family + ".csv");
  bimux::write_curve_csv(file.string(), curves[0], cfg.resolved(), "dq");
  std::cout << "wrote " << file.string() << "\n";
  return 0;
}

int run_optimize(const CommonOpts& o, const std::string& objective,
                 const std::string& constraint, const std::string& family,
                 int n_mp, int budget, double dq_seed) {
  const bimux::RunConfig cfg = resolve(o);
  const auto fam = bimux::family_from_name(family);
  if (!fam) {
    std::cerr << "config error: unknown geometry family '" << family << "'\n";
    return kExitValidation;
  }
  bimux::ShapingProblem prob;
  prob.objective = objective == "maxK" ? bimux::ShapingObjective::MaximizeK
                                       : bimux::ShapingObjective::MinimizeS;
  prob.constraint = constraint == "free"
                        ? bimux::ShapingConstraint::FreePlacement
                        : bimux::ShapingConstraint::SymmetricFamily;
  prob.family = *fam;
  prob.n_mp = n_mp;
  prob.budget = budget;
  prob.dq_seed = dq_seed;
  const bimux::FrequencyGrid grid{cfg.grid.half_width,
                                  std::min(cfg.grid.n_points, 512)};
  const bimux::ShapingResult res =
      bimux::optimize_shifts(prob, grid, cfg.physical);
  const auto file = out_file(o, "optimize.json");
  bimux::write_optimize_json(file.string(), res, cfg.resolved());
  std::cout << "best S = " << res.S << " bits, K = " << res.K << " ("
            << res.trace.size() << " evaluations";
  if (res.budget_exhausted) std::cout << ", budget exhausted";
  std::cout << ")\nwrote " << file.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Doppler-broadened biphoton joint spectra from multiplexed thermal "
      "ensembles: evaluation, Schmidt analysis, sweeps, spectral shaping"};
  app.require_subcommand(1);

  CommonOpts eval_o, schmidt_o, sweep_o, opt_o, preset_o;

  auto* eval_cmd =
      app.add_subcommand("eval", "evaluate the spectral functions at a point");
  double ws = 0.0, wi = 0.0;
  std::string scheme = "co";
  eval_cmd->add_option("--ws", ws, "signal detuning (Gamma3 units)");
  eval_cmd->add_option("--wi", wi, "idler detuning (Gamma3 units)");
  eval_cmd->add_option("--scheme", scheme, "co | counter");
  add_common(eval_cmd, eval_o);

  auto* schmidt_cmd = app.add_subcommand(
      "schmidt", "build the joint amplitude and decompose it");
  int modes = 0;
  schmidt_cmd->add_option("--modes", modes, "dump the first N mode functions");
  add_common(schmidt_cmd, schmidt_o);

  auto* sweep_cmd =
      app.add_subcommand("sweep", "S and K versus dq for one geometry");
  std::string sweep_family = "anti_correlation";
  double dq_min = 0.0, dq_max = 200.0, dq_step = 10.0;
  int sweep_n_mp = 2;
  sweep_cmd->add_option("--geometry", sweep_family, "geometry family");
  sweep_cmd->add_option("--dq-min", dq_min, "first dq");
  sweep_cmd->add_option("--dq-max", dq_max, "last dq");
  sweep_cmd->add_option("--dq-step", dq_step, "dq increment");
  sweep_cmd->add_option("--n-mp", sweep_n_mp, "number of cells");
  add_common(sweep_cmd, sweep_o);

  auto* opt_cmd = app.add_subcommand(
      "optimize", "search shift placements for minimal S or maximal K");
  std::string objective = "minS", constraint = "family",
              opt_family = "octagon";
  int opt_n_mp = 8, budget = 200;
  double dq_seed = 30.0;
  opt_cmd->add_option("--objective", objective, "minS | maxK");
  opt_cmd->add_option("--constraint", constraint, "family | free");
  opt_cmd->add_option("--family", opt_family, "geometry family");
  opt_cmd->add_option("--n-mp", opt_n_mp, "number of cells");
  opt_cmd->add_option("--budget", budget, "max objective evaluations");
  opt_cmd->add_option("--dq-seed", dq_seed, "starting dq");
  add_common(opt_cmd, opt_o);

  auto* preset_cmd =
      app.add_subcommand("preset", "run a bundled reproduction scenario");
  std::string preset_name;
  preset_cmd
      ->add_option("name", preset_name,
                   "one of: fig2a fig2b fig2c fig3a fig3bcd fig4")
      ->required();
  add_common(preset_cmd, preset_o);

  auto* validate_cmd =
      app.add_subcommand("validate", "check a config file and echo it");
  std::string validate_path;
  validate_cmd->add_option("--config", validate_path, "JSON config file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval_cmd->parsed()) return run_eval(eval_o, ws, wi, scheme);
    if (schmidt_cmd->parsed()) return run_schmidt(schmidt_o, modes);
    if (sweep_cmd->parsed())
      return run_sweep_cmd(sweep_o, sweep_family, dq_min, dq_max, dq_step,
                           sweep_n_mp);
    if (opt_cmd->parsed())
      return run_optimize(opt_o, objective, constraint, opt_family, opt_n_mp,
                          budget, dq_seed);
    if (preset_cmd->parsed()) {
      const bimux::RunConfig cfg = resolve(preset_o);
      const auto files = bimux::run_preset(preset_name, preset_o.out_dir, cfg);
      for (const auto& f : files) std::cout << "wrote " << f << "\n";
      return 0;
    }
    if (validate_cmd->parsed()) {
      const bimux::ConfigParse parsed = bimux::validate_config(validate_path);
      if (!parsed.ok()) {
        for (const auto& e : parsed.errors)
          std::cerr << "config error: " << e.path << ": " << e.reason << "\n";
        return kExitValidation;
      }
      std::cout << parsed.config->resolved().dump(2) << "\n";
      return 0;
    }
  } catch (const CLI::RuntimeError& e) {
    return e.get_exit_code();
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::runtime_error& e) {
    const std::string what = e.what();
    std::cerr << "error: " << what << "\n";
    if (what.find("output file") != std::string::npos ||
        what.find("open") != std::string::npos)
      return kExitIo;
    return kExitConvergence;
  }
  return 0;
}

#include "entneg/scenario.hpp"

#include "entneg/fock.hpp"
#include "entneg/gaussian.hpp"
#include "entneg/model.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace entneg {

namespace {

using Row = std::vector<double>;

void check(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::vector<std::string> negativity_columns(const std::string& axis, int cutoff) {
  std::vector<std::string> columns{axis};
  for (int j = 1; j <= cutoff; ++j) columns.push_back("N_" + std::to_string(j));
  columns.push_back("n_0");
  return columns;
}

Row negativity_row(double x, const CorrelationMatrix& c, int cutoff) {
  Row row{x};
  for (double value : partial_negativities(c, cutoff)) row.push_back(value);
  row.push_back(mean_occupation(c, 0));
  return row;
}

}  // namespace

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::equilibrium_gc: return "equilibrium-gc";
    case ScenarioKind::equilibrium_canonical: return "equilibrium-canonical";
    case ScenarioKind::relaxation: return "relax";
    case ScenarioKind::junction: return "junction";
  }
  return "?";
}

std::string to_string(SweepVariable variable) {
  switch (variable) {
    case SweepVariable::gamma: return "gamma";
    case SweepVariable::mu: return "mu";
    case SweepVariable::voltage: return "V";
    case SweepVariable::asymmetry: return "a";
    case SweepVariable::mu_bar: return "mu_bar";
    case SweepVariable::time: return "time";
  }
  return "?";
}

std::vector<double> GridSpec::materialize(const std::string& what) const {
  std::vector<double> grid;
  switch (scale) {
    case Scale::list:
      grid = values;
      break;
    case Scale::linear: {
      check(count >= 1, what + ": grid count must be >= 1");
      if (count == 1) {
        grid = {min};
      } else {
        const double step = (max - min) / (count - 1);
        for (int i = 0; i < count; ++i) grid.push_back(min + i * step);
        grid.back() = max;
      }
      break;
    }
    case Scale::log: {
      check(count >= 1, what + ": grid count must be >= 1");
      check(min > 0.0 && max > 0.0, what + ": log grid needs positive bounds");
      if (count == 1) {
        grid = {min};
      } else {
        const double step = (std::log(max) - std::log(min)) / (count - 1);
        for (int i = 0; i < count; ++i)
          grid.push_back(std::exp(std::log(min) + i * step));
        grid.back() = max;
      }
      break;
    }
  }
  check(!grid.empty(), what + ": grid must be nonempty");
  for (std::size_t i = 1; i < grid.size(); ++i)
    check(grid[i] > grid[i - 1], what + ": grid must be strictly increasing");
  return grid;
}

double ScenarioConfig::resolved_bandwidth(double gamma_value) const {
  if (bandwidth) return *bandwidth;
  if (bandwidth_over_gamma) return *bandwidth_over_gamma * gamma_value;
  throw std::invalid_argument("config: set either W or W_over_gamma");
}

int ScenarioConfig::resolved_level_count() const {
  if (level_count > 0) return level_count;
  return kind == ScenarioKind::junction ? 300 : 400;
}

GridSpec ScenarioConfig::resolved_time_grid() const {
  if (time_grid) return *time_grid;
  return GridSpec{GridSpec::Scale::log, 1e-2, 2e1, 60, {}};
}

int ScenarioConfig::resolved_canonical_n() const {
  if (canonical_n) return *canonical_n;
  return static_cast<int>(std::lround((resolved_level_count() + 1) / 2.0));
}

double ScenarioConfig::resolved_epsilon0(double gamma_value) const {
  if (kind == ScenarioKind::relaxation && delta)
    return 0.5 * resolved_bandwidth(gamma_value) - *delta * gamma_value;
  return epsilon0;
}

double ScenarioConfig::resolved_mu(double gamma_value) const {
  if (mu) return *mu;
  if (kind == ScenarioKind::relaxation)
    return resolved_epsilon0(gamma_value) + 1.0 / beta;
  return 0.0;
}

void ScenarioConfig::validate() const {
  check(beta > 0.0, "[model] beta must be positive");
  check(n0 >= 0.0 && n0 <= 1.0, "[model] n0 must lie in [0, 1]");
  check(cutoff >= 1, "[output] M must be >= 1");
  check(cutoff <= kMaxFockModes - 2,
        "[output] M exceeds the Fock resource guard (M <= " +
            std::to_string(kMaxFockModes - 2) + ")");
  check(!(bandwidth && bandwidth_over_gamma),
        "config: W and W_over_gamma are mutually exclusive");
  check(bandwidth || bandwidth_over_gamma,
        "config: set either W or W_over_gamma");
  check(std::abs(asymmetry) <= 1.0, "[junction] |a| must be <= 1");

  const bool dynamic =
      kind == ScenarioKind::relaxation || kind == ScenarioKind::junction;
  if (dynamic) check(gamma > 0.0 || sweep_variable == SweepVariable::gamma,
                     "config: dynamic scenarios need gamma > 0");

  switch (kind) {
    case ScenarioKind::equilibrium_gc:
      check(sweep_variable.has_value(), "[sweep] variable is required");
      check(*sweep_variable == SweepVariable::gamma ||
                *sweep_variable == SweepVariable::mu,
            "[sweep] equilibrium-gc sweeps gamma or mu");
      sweep_grid.materialize("[sweep] grid");
      break;
    case ScenarioKind::equilibrium_canonical:
      check(sweep_variable == SweepVariable::gamma,
            "[sweep] equilibrium-canonical sweeps gamma");
      sweep_grid.materialize("[sweep] grid");
      check(resolved_level_count() <= kMaxFockModes - 1,
            "[bath] K exceeds the Fock resource guard (K <= " +
                std::to_string(kMaxFockModes - 1) + " for canonical runs)");
      {
        const int n = resolved_canonical_n();
        check(n >= 0 && n <= resolved_level_count() + 1,
              "[model] canonical_N must lie in [0, K+1]");
      }
      break;
    case ScenarioKind::relaxation:
      check(!sweep_variable || *sweep_variable == SweepVariable::time,
            "[sweep] relax runs over the time grid");
      resolved_time_grid().materialize("[time] grid");
      break;
    case ScenarioKind::junction:
      check(sweep_variable.has_value(), "[sweep] variable is required");
      if (*sweep_variable == SweepVariable::time) {
        resolved_time_grid().materialize("[time] grid");
      } else {
        check(*sweep_variable != SweepVariable::mu,
              "[sweep] junction sweeps V, a, mu_bar, gamma, or time");
        sweep_grid.materialize("[sweep] grid");
        check(eval_time > 0.0, "[time] eval must be positive");
      }
      break;
  }
}

ScenarioResult run_equilibrium_gc(const ScenarioConfig& config,
                                  const ExecPolicy& policy,
                                  const ProgressFn& progress) {
  config.validate();
  check(config.kind == ScenarioKind::equilibrium_gc,
        "run_equilibrium_gc: wrong scenario kind");
  const SweepVariable variable = *config.sweep_variable;
  const auto grid = config.sweep_grid.materialize("[sweep] grid");

  auto eval = [&](int i) -> Row {
    const double x = grid[i];
    const double gamma = variable == SweepVariable::gamma ? x : config.gamma;
    const double mu =
        variable == SweepVariable::mu ? x : config.resolved_mu(gamma);
    const BathSpec bath{config.resolved_bandwidth(gamma),
                        config.resolved_level_count(), gamma, config.beta, mu};
    const auto h = build_single_bath({config.epsilon0, 0.0}, bath);
    const auto c = gibbs_correlation_matrix(h, config.beta, mu);
    return negativity_row(x, c, config.cutoff);
  };

  ScenarioResult result;
  result.columns = negativity_columns(to_string(variable), config.cutoff);
  result.rows = run_sweep<Row>(grid, eval, policy, progress);
  result.config = config;
  return result;
}

ScenarioResult run_equilibrium_canonical(const ScenarioConfig& config,
                                         const ExecPolicy& policy,
                                         const ProgressFn& progress) {
  config.validate();
  check(config.kind == ScenarioKind::equilibrium_canonical,
        "run_equilibrium_canonical: wrong scenario kind");
  const auto grid = config.sweep_grid.materialize("[sweep] grid");
  const int particles = config.resolved_canonical_n();

  auto eval = [&](int i) -> Row {
    const double gamma = grid[i];
    const double mu = config.resolved_mu(gamma);
    const BathSpec bath{config.resolved_bandwidth(gamma),
                        config.resolved_level_count(), gamma, config.beta, mu};
    const auto h = build_single_bath({config.epsilon0, 0.0}, bath);
    const auto canonical = canonical_gibbs(h, config.beta, particles);
    Row row{gamma, negativity(canonical)};
    if (config.compare_gc) {
      const auto grand = grand_canonical_gibbs_fock(h, config.beta, mu);
      row.push_back(negativity(grand));
    }
    row.push_back(mode_occupation(canonical, 0));
    return row;
  };

  ScenarioResult result;
  result.columns = {"gamma", "N_can"};
  if (config.compare_gc) result.columns.push_back("N_gc");
  result.columns.push_back("n_0");
  result.rows = run_sweep<Row>(grid, eval, policy, progress);
  result.config = config;
  return result;
}

ScenarioResult run_relaxation(const ScenarioConfig& config,
                              const ExecPolicy& policy,
                              const ProgressFn& progress) {
  config.validate();
  check(config.kind == ScenarioKind::relaxation,
        "run_relaxation: wrong scenario kind");
  const auto grid = config.resolved_time_grid().materialize("[time] grid");

  const double gamma = config.gamma;
  const double w = config.resolved_bandwidth(gamma);
  const double eps0 = config.resolved_epsilon0(gamma);
  const double mu = config.resolved_mu(gamma);

  const BathSpec bath{w, config.resolved_level_count(), gamma, config.beta, mu};
  const ImpuritySpec impurity{eps0, config.n0};
  const auto h = build_single_bath(impurity, bath);
  const auto c0 = initial_correlation_matrix_single(impurity, bath);
  const TimeEvolution evolution(c0, spectral_decompose(h));

  auto eval = [&](int i) -> Row {
    const double t = grid[i];  // in units of 1/gamma
    const auto c = evolution.at(t / gamma);
    return negativity_row(t, c, config.cutoff);
  };

  ScenarioResult result;
  result.columns = negativity_columns("time", config.cutoff);
  result.rows = run_sweep<Row>(grid, eval, policy, progress);
  result.config = config;
  return result;
}

ScenarioResult run_junction(const ScenarioConfig& config,
                            const ExecPolicy& policy,
                            const ProgressFn& progress) {
  config.validate();
  check(config.kind == ScenarioKind::junction,
        "run_junction: wrong scenario kind");
  const SweepVariable variable = *config.sweep_variable;

  auto junction_for = [&](double x) -> JunctionSpec {
    JunctionSpec spec;
    spec.impurity = {config.epsilon0, config.n0};
    spec.mu_bar = variable == SweepVariable::mu_bar ? x : config.mu_bar;
    spec.voltage = variable == SweepVariable::voltage ? x : config.voltage;
    spec.asymmetry = variable == SweepVariable::asymmetry ? x : config.asymmetry;
    spec.gamma = variable == SweepVariable::gamma ? x : config.gamma;
    spec.bandwidth = config.resolved_bandwidth(spec.gamma);
    spec.level_count = config.resolved_level_count();
    spec.beta = config.beta;
    return spec;
  };

  ScenarioResult result;
  result.config = config;

  if (variable == SweepVariable::time) {
    const auto grid = config.resolved_time_grid().materialize("[time] grid");
    const JunctionSpec spec = junction_for(0.0);
    const auto h = build_junction(spec);
    const auto c0 = initial_correlation_matrix_junction(spec);
    const TimeEvolution evolution(c0, spectral_decompose(h));
    auto eval = [&](int i) -> Row {
      const auto c = evolution.at(grid[i] / spec.gamma);
      return negativity_row(grid[i], c, config.cutoff);
    };
    result.columns = negativity_columns("time", config.cutoff);
    result.rows = run_sweep<Row>(grid, eval, policy, progress);
    return result;
  }

  const auto grid = config.sweep_grid.materialize("[sweep] grid");

  // V and mu_bar only enter through the initial state, so one spectral
  // decomposition serves the whole sweep.
  const bool shared_h = variable == SweepVariable::voltage ||
                        variable == SweepVariable::mu_bar;
  SpectralDecomposition shared_sd;
  if (shared_h) shared_sd = spectral_decompose(build_junction(junction_for(grid[0])));

  auto eval = [&](int i) -> Row {
    const JunctionSpec spec = junction_for(grid[i]);
    const auto c0 = initial_correlation_matrix_junction(spec);
    const auto sd = shared_h ? shared_sd
                             : spectral_decompose(build_junction(spec));
    const auto c = evolve(c0, sd, config.eval_time / spec.gamma);
    return negativity_row(grid[i], c, config.cutoff);
  };
  result.columns = negativity_columns(to_string(variable), config.cutoff);
  result.rows = run_sweep<Row>(grid, eval, policy, progress);
  return result;
}

ScenarioResult run_scenario(const ScenarioConfig& config,
                            const ExecPolicy& policy,
                            const ProgressFn& progress) {
  switch (config.kind) {
    case ScenarioKind::equilibrium_gc:
      return run_equilibrium_gc(config, policy, progress);
    case ScenarioKind::equilibrium_canonical:
      return run_equilibrium_canonical(config, policy, progress);
    case ScenarioKind::relaxation:
      return run_relaxation(config, policy, progress);
    case ScenarioKind::junction:
      return run_junction(config, policy, progress);
  }
  throw std::logic_error("run_scenario: unknown scenario kind");
}

}  // namespace entneg

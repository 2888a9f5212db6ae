#pragma once

#include "entneg/sweep.hpp"

#include <optional>
#include <string>
#include <vector>

namespace entneg {

enum class ScenarioKind { equilibrium_gc, equilibrium_canonical, relaxation, junction };
enum class SweepVariable { gamma, mu, voltage, asymmetry, mu_bar, time };

std::string to_string(ScenarioKind kind);
std::string to_string(SweepVariable variable);

struct GridSpec {
  enum class Scale { linear, log, list };
  Scale scale = Scale::linear;
  double min = 0.0;
  double max = 0.0;
  int count = 0;
  std::vector<double> values;  // Scale::list only

  // Validates and expands the grid: nonempty, strictly increasing.
  std::vector<double> materialize(const std::string& what) const;
};

// Every energy is in units of k_B*T at beta = 1; times are in units of
// 1/gamma. Sweeping gamma with bandwidth_over_gamma set rescales the band
// with the coupling, matching the W = x*Gamma parameterization.
struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::equilibrium_gc;

  // [model]
  double epsilon0 = 0.0;
  double n0 = 0.0;
  double beta = 1.0;
  std::optional<int> canonical_n;    // default: round((K+1)/2)
  std::optional<double> delta;       // relaxation: eps0 = W/2 - delta*gamma

  // [bath] / [junction]
  double gamma = 0.0;
  std::optional<double> bandwidth;             // absolute W
  std::optional<double> bandwidth_over_gamma;  // W = ratio * gamma
  int level_count = 0;                         // 0: scenario default
  std::optional<double> mu;  // single bath; relax default is eps0 + kT
  double mu_bar = 0.0;
  double voltage = 0.0;
  double asymmetry = 0.0;

  // [sweep]
  std::optional<SweepVariable> sweep_variable;
  GridSpec sweep_grid;

  // [time]
  std::optional<GridSpec> time_grid;  // default: 60 log points on [0.01, 20]
  double eval_time = 10.0;            // junction sweeps, in 1/gamma

  // [output]
  int cutoff = 4;            // M
  bool compare_gc = false;   // canonical scenario: add grand-canonical column

  void validate() const;
  double resolved_bandwidth(double gamma_value) const;
  int resolved_level_count() const;
  GridSpec resolved_time_grid() const;
  int resolved_canonical_n() const;
  double resolved_epsilon0(double gamma_value) const;
  double resolved_mu(double gamma_value) const;
};

struct ScenarioResult {
  std::vector<std::string> columns;        // first entry is the row axis
  std::vector<std::vector<double>> rows;   // grid order
  ScenarioConfig config;                   // resolved provenance echo
};

ScenarioResult run_equilibrium_gc(const ScenarioConfig& config,
                                  const ExecPolicy& policy = {},
                                  const ProgressFn& progress = {});
ScenarioResult run_equilibrium_canonical(const ScenarioConfig& config,
                                         const ExecPolicy& policy = {},
                                         const ProgressFn& progress = {});
ScenarioResult run_relaxation(const ScenarioConfig& config,
                              const ExecPolicy& policy = {},
                              const ProgressFn& progress = {});
ScenarioResult run_junction(const ScenarioConfig& config,
                            const ExecPolicy& policy = {},
                            const ProgressFn& progress = {});

ScenarioResult run_scenario(const ScenarioConfig& config,
                            const ExecPolicy& policy = {},
                            const ProgressFn& progress = {});

}  // namespace entneg

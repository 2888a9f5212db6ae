// Timing comparison between the serial reference sweep and the OpenMP one,
// on a desk-scale equilibrium sweep and a relaxation time grid. The two
// paths must produce identical rows; the benchmark asserts that too.

#include "entneg/scenario.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

namespace {

using entneg::Exec;
using entneg::ExecPolicy;
using entneg::ScenarioConfig;
using entneg::ScenarioResult;

double time_run(const ScenarioConfig& config, Exec mode, ScenarioResult& out) {
  const auto start = std::chrono::steady_clock::now();
  out = run_scenario(config, ExecPolicy{mode, 0});
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  return elapsed.count();
}

bool identical(const ScenarioResult& a, const ScenarioResult& b) {
  if (a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    for (std::size_t j = 0; j < a.rows[i].size(); ++j)
      if (a.rows[i][j] != b.rows[i][j]) return false;
  return true;
}

int compare(const char* name, const ScenarioConfig& config) {
  ScenarioResult serial_result, parallel_result;
  const double t_serial = time_run(config, Exec::serial, serial_result);
  const double t_parallel = time_run(config, Exec::parallel, parallel_result);
  const bool match = identical(serial_result, parallel_result);
  std::printf("%-24s serial %7.2f s   parallel %7.2f s   speedup %5.2fx   %s\n",
              name, t_serial, t_parallel, t_serial / t_parallel,
              match ? "rows identical" : "ROWS DIFFER");
  return match ? 0 : 1;
}

}  // namespace

int main() {
  int failures = 0;

  ScenarioConfig equilibrium;
  equilibrium.kind = entneg::ScenarioKind::equilibrium_gc;
  equilibrium.bandwidth_over_gamma = 50.0;
  equilibrium.level_count = 300;
  equilibrium.sweep_variable = entneg::SweepVariable::gamma;
  equilibrium.sweep_grid = {entneg::GridSpec::Scale::log, 0.1, 20.0, 24, {}};
  failures += compare("equilibrium-gc sweep", equilibrium);

  ScenarioConfig relaxation;
  relaxation.kind = entneg::ScenarioKind::relaxation;
  relaxation.gamma = 0.01;
  relaxation.bandwidth_over_gamma = 50.0;
  relaxation.level_count = 300;
  relaxation.n0 = 0.1;
  relaxation.delta = 0.5;
  relaxation.time_grid = entneg::GridSpec{entneg::GridSpec::Scale::log, 1e-2,
                                          2e1, 24, {}};
  failures += compare("relaxation time grid", relaxation);

  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}

#pragma once

#include <cstdlib>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace entneg {

// Grid points are evaluated independently; the serial path is the reference
// the parallel path must match bitwise.
enum class Exec { serial, parallel };

struct ExecPolicy {
  Exec mode = Exec::parallel;
  int workers = 0;  // 0: ENTNEG_WORKERS env var, else machine parallelism
};

inline int resolve_worker_count(const ExecPolicy& policy) {
  if (policy.mode == Exec::serial) return 1;
  if (policy.workers > 0) return policy.workers;
  if (const char* env = std::getenv("ENTNEG_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

struct SweepPointError : std::runtime_error {
  SweepPointError(int index_, double x_, const std::string& message)
      : std::runtime_error("sweep point " + std::to_string(index_) +
                           " (value " + std::to_string(x_) + "): " + message),
        index(index_),
        x(x_) {}
  int index;
  double x;
};

using ProgressFn = std::function<void(int index, int total, double x)>;

// Evaluates eval(i) for every grid point and returns the rows in grid order
// regardless of completion order. The first failing point (lowest index)
// aborts the sweep.
template <typename Row, typename Eval>
std::vector<Row> run_sweep(const std::vector<double>& grid, Eval&& eval,
                           const ExecPolicy& policy,
                           const ProgressFn& progress = {}) {
  const int total = static_cast<int>(grid.size());
  std::vector<Row> rows(total);
  std::vector<std::exception_ptr> errors(total);
  const int workers = resolve_worker_count(policy);

  if (policy.mode == Exec::serial || workers <= 1) {
    for (int i = 0; i < total; ++i) {
      try {
        rows[i] = eval(i);
      } catch (...) {
        errors[i] = std::current_exception();
        break;
      }
      if (progress) progress(i, total, grid[i]);
    }
  } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (int i = 0; i < total; ++i) {
      try {
        rows[i] = eval(i);
        if (progress) {
#pragma omp critical(entneg_sweep_progress)
          progress(i, total, grid[i]);
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
#else
    for (int i = 0; i < total; ++i) {
      try {
        rows[i] = eval(i);
      } catch (...) {
        errors[i] = std::current_exception();
        break;
      }
      if (progress) progress(i, total, grid[i]);
    }
#endif
  }

  for (int i = 0; i < total; ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const std::exception& e) {
      throw SweepPointError(i, grid[i], e.what());
    } catch (...) {
      throw SweepPointError(i, grid[i], "unknown error");
    }
  }
  return rows;
}

}  // namespace entneg

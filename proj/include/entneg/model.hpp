#pragma once

#include "entneg/types.hpp"

#include <vector>

namespace entneg {

// Discretized boxcar bath: level_count levels spread uniformly over
// [-W/2, W/2] (endpoints included, spacing W/(K-1)) and a flat coupling
// t_k chosen so that 2*pi*t_k^2*(K-1)/W = gamma.
struct BathSpec {
  double bandwidth = 1.0;  // W
  int level_count = 2;     // K
  double gamma = 0.0;      // spectral density height
  double beta = 1.0;       // inverse temperature
  double mu = 0.0;         // chemical potential

  void validate() const;
  std::vector<double> level_energies() const;
  double coupling() const;  // t_k, identical for every level
};

struct ImpuritySpec {
  double epsilon0 = 0.0;
  double n0_initial = 0.0;  // initial impurity occupation, in [0, 1]

  void validate() const;
};

// Impurity between two baths sharing one level grid. Chemical potentials
// mu_L/R = mu_bar +/- V/2 and couplings Gamma_L/R = (1 +/- a) * gamma.
struct JunctionSpec {
  ImpuritySpec impurity;
  double mu_bar = 0.0;
  double voltage = 0.0;
  double asymmetry = 0.0;  // a, |a| <= 1
  double gamma = 0.0;
  double bandwidth = 1.0;
  int level_count = 2;  // per bath
  double beta = 1.0;

  void validate() const;
  double gamma_left() const { return (1.0 + asymmetry) * gamma; }
  double gamma_right() const { return (1.0 - asymmetry) * gamma; }
  double mu_left() const { return mu_bar + 0.5 * voltage; }
  double mu_right() const { return mu_bar - 0.5 * voltage; }
};

SingleParticleHamiltonian build_single_bath(const ImpuritySpec& impurity,
                                            const BathSpec& bath);
SingleParticleHamiltonian build_junction(const JunctionSpec& spec);

// Product initial state: diag[n0, f(eps_1), ..., f(eps_K)].
CorrelationMatrix initial_correlation_matrix_single(const ImpuritySpec& impurity,
                                                    const BathSpec& bath);
// diag[n0, f_L(eps_1..K), f_R(eps_1..K)] with per-bath Fermi functions.
CorrelationMatrix initial_correlation_matrix_junction(const JunctionSpec& spec);

// 1/(1 + exp(beta*(eps - mu))), branch-split so it never overflows.
double fermi_occupation(double eps, double beta, double mu);

}  // namespace entneg

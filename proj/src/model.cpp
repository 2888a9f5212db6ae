#include "entneg/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace entneg {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::vector<std::string> star_labels(const std::string& prefix, int count) {
  std::vector<std::string> labels;
  labels.reserve(count + 1);
  labels.emplace_back("S");
  for (int k = 1; k <= count; ++k) labels.push_back(prefix + std::to_string(k));
  return labels;
}

std::vector<std::string> junction_labels(int per_bath) {
  std::vector<std::string> labels;
  labels.reserve(1 + 2 * per_bath);
  labels.emplace_back("S");
  for (int i = 1; i <= per_bath; ++i) labels.push_back("L" + std::to_string(i));
  for (int i = 1; i <= per_bath; ++i) labels.push_back("R" + std::to_string(i));
  return labels;
}

}  // namespace

void BathSpec::validate() const {
  require(bandwidth > 0.0, "BathSpec: bandwidth W must be positive");
  require(level_count >= 2, "BathSpec: level_count K must be >= 2, got " +
                                std::to_string(level_count));
  require(gamma >= 0.0, "BathSpec: gamma must be nonnegative");
  require(beta > 0.0, "BathSpec: beta must be positive");
}

std::vector<double> BathSpec::level_energies() const {
  validate();
  const double spacing = bandwidth / (level_count - 1);
  std::vector<double> eps(level_count);
  for (int k = 0; k < level_count; ++k) eps[k] = -0.5 * bandwidth + k * spacing;
  return eps;
}

double BathSpec::coupling() const {
  validate();
  return std::sqrt(gamma * bandwidth /
                   (2.0 * std::numbers::pi * (level_count - 1)));
}

void ImpuritySpec::validate() const {
  require(n0_initial >= 0.0 && n0_initial <= 1.0,
          "ImpuritySpec: n0_initial must lie in [0, 1]");
}

void JunctionSpec::validate() const {
  impurity.validate();
  require(std::abs(asymmetry) <= 1.0,
          "JunctionSpec: asymmetry a must satisfy |a| <= 1, got " +
              std::to_string(asymmetry));
  require(bandwidth > 0.0, "JunctionSpec: bandwidth W must be positive");
  require(level_count >= 2, "JunctionSpec: level_count K must be >= 2");
  require(gamma >= 0.0, "JunctionSpec: gamma must be nonnegative");
  require(beta > 0.0, "JunctionSpec: beta must be positive");
}

SingleParticleHamiltonian build_single_bath(const ImpuritySpec& impurity,
                                            const BathSpec& bath) {
  impurity.validate();
  const auto eps = bath.level_energies();
  const double t = bath.coupling();
  const int k = bath.level_count;

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(1 + k, 1 + k);
  h(0, 0) = impurity.epsilon0;
  for (int i = 0; i < k; ++i) {
    h(1 + i, 1 + i) = eps[i];
    h(0, 1 + i) = t;
    h(1 + i, 0) = t;
  }
  return {std::move(h), star_labels("B", k)};
}

SingleParticleHamiltonian build_junction(const JunctionSpec& spec) {
  spec.validate();
  BathSpec grid{spec.bandwidth, spec.level_count, spec.gamma, spec.beta, 0.0};
  const auto eps = grid.level_energies();
  const int k = spec.level_count;
  const double t_l =
      BathSpec{spec.bandwidth, k, spec.gamma_left(), spec.beta, 0.0}.coupling();
  const double t_r =
      BathSpec{spec.bandwidth, k, spec.gamma_right(), spec.beta, 0.0}.coupling();

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(1 + 2 * k, 1 + 2 * k);
  h(0, 0) = spec.impurity.epsilon0;
  for (int i = 0; i < k; ++i) {
    h(1 + i, 1 + i) = eps[i];
    h(0, 1 + i) = t_l;
    h(1 + i, 0) = t_l;
    h(1 + k + i, 1 + k + i) = eps[i];
    h(0, 1 + k + i) = t_r;
    h(1 + k + i, 0) = t_r;
  }

  return {std::move(h), junction_labels(k)};
}

CorrelationMatrix initial_correlation_matrix_single(const ImpuritySpec& impurity,
                                                    const BathSpec& bath) {
  impurity.validate();
  const auto eps = bath.level_energies();
  const int k = bath.level_count;

  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(1 + k, 1 + k);
  c(0, 0) = impurity.n0_initial;
  for (int i = 0; i < k; ++i)
    c(1 + i, 1 + i) = fermi_occupation(eps[i], bath.beta, bath.mu);
  return {std::move(c), star_labels("B", k)};
}

CorrelationMatrix initial_correlation_matrix_junction(const JunctionSpec& spec) {
  spec.validate();
  BathSpec grid{spec.bandwidth, spec.level_count, spec.gamma, spec.beta, 0.0};
  const auto eps = grid.level_energies();
  const int k = spec.level_count;

  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(1 + 2 * k, 1 + 2 * k);
  c(0, 0) = spec.impurity.n0_initial;
  for (int i = 0; i < k; ++i) {
    c(1 + i, 1 + i) = fermi_occupation(eps[i], spec.beta, spec.mu_left());
    c(1 + k + i, 1 + k + i) = fermi_occupation(eps[i], spec.beta, spec.mu_right());
  }
  return {std::move(c), junction_labels(k)};
}

double fermi_occupation(double eps, double beta, double mu) {
  const double x = beta * (eps - mu);
  if (x > 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

}  // namespace entneg

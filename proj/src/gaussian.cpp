#include "entneg/gaussian.hpp"

#include "entneg/model.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

namespace entneg {

using Complex = std::complex<double>;

SpectralDecomposition spectral_decompose(const SingleParticleHamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("spectral_decompose: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

CorrelationMatrix gibbs_correlation_matrix(const SingleParticleHamiltonian& h,
                                           double beta, double mu) {
  if (beta < 0.0)
    throw std::invalid_argument("gibbs_correlation_matrix: beta must be >= 0");
  const auto sd = spectral_decompose(h);
  Eigen::VectorXd occ(sd.eigenvalues.size());
  for (Eigen::Index i = 0; i < occ.size(); ++i)
    occ[i] = fermi_occupation(sd.eigenvalues[i], beta, mu);
  Eigen::MatrixXd c =
      sd.eigenvectors * occ.asDiagonal() * sd.eigenvectors.transpose();
  return {c.cast<Complex>(), h.mode_labels};
}

CorrelationMatrix evolve(const CorrelationMatrix& c0,
                         const SpectralDecomposition& sd, double t) {
  return TimeEvolution(c0, sd).at(t);
}

CorrelationMatrix evolve(const CorrelationMatrix& c0,
                         const SingleParticleHamiltonian& h, double t) {
  return evolve(c0, spectral_decompose(h), t);
}

TimeEvolution::TimeEvolution(const CorrelationMatrix& c0,
                             SpectralDecomposition sd)
    : eigenvalues_(std::move(sd.eigenvalues)),
      basis_(std::move(sd.eigenvectors)),
      c0_(c0) {
  if (c0.dim() != eigenvalues_.size())
    throw std::invalid_argument(
        "evolve: correlation matrix and Hamiltonian dimensions differ (" +
        std::to_string(c0.dim()) + " vs " +
        std::to_string(eigenvalues_.size()) + ")");
  // The basis is real, so the frame change splits into real products.
  const Eigen::MatrixXd real_part =
      basis_.transpose() * c0.matrix.real() * basis_;
  if (c0.matrix.imag().cwiseAbs().maxCoeff() == 0.0) {
    c0_eigen_ = real_part.cast<Complex>();
  } else {
    const Eigen::MatrixXd imag_part =
        basis_.transpose() * c0.matrix.imag() * basis_;
    c0_eigen_ = real_part.cast<Complex>() +
                Complex(0.0, 1.0) * imag_part.cast<Complex>();
  }
}

CorrelationMatrix TimeEvolution::at(double t) const {
  if (t == 0.0) return c0_;
  Eigen::VectorXcd phase(eigenvalues_.size());
  for (Eigen::Index i = 0; i < phase.size(); ++i)
    phase[i] = std::polar(1.0, eigenvalues_[i] * t);
  const Eigen::MatrixXcd rotated =
      phase.asDiagonal() * c0_eigen_ * phase.conjugate().asDiagonal();
  const Eigen::MatrixXd out_real =
      basis_ * rotated.real() * basis_.transpose();
  const Eigen::MatrixXd out_imag =
      basis_ * rotated.imag() * basis_.transpose();
  Eigen::MatrixXcd out = out_real.cast<Complex>() +
                         Complex(0.0, 1.0) * out_imag.cast<Complex>();
  return {std::move(out), c0_.mode_labels};
}

CorrelationMatrix reduce_modes(const CorrelationMatrix& c,
                               const std::vector<int>& indices) {
  if (indices.empty())
    throw std::invalid_argument("reduce_modes: index set must be nonempty");
  std::unordered_set<int> seen;
  for (int i : indices) {
    if (i < 0 || i >= c.dim())
      throw std::invalid_argument("reduce_modes: index " + std::to_string(i) +
                                  " out of range for dimension " +
                                  std::to_string(c.dim()));
    if (!seen.insert(i).second)
      throw std::invalid_argument("reduce_modes: duplicate index " +
                                  std::to_string(i));
  }

  const int n = static_cast<int>(indices.size());
  Eigen::MatrixXcd sub(n, n);
  std::vector<std::string> labels(n);
  for (int r = 0; r < n; ++r) {
    labels[r] = c.mode_labels.empty() ? std::string{} : c.mode_labels[indices[r]];
    for (int s = 0; s < n; ++s) sub(r, s) = c.matrix(indices[r], indices[s]);
  }
  return {std::move(sub), std::move(labels)};
}

double mean_occupation(const CorrelationMatrix& c, int i) {
  if (i < 0 || i >= c.dim())
    throw std::invalid_argument("mean_occupation: mode index out of range");
  return std::clamp(c.matrix(i, i).real(), 0.0, 1.0);
}

}  // namespace entneg

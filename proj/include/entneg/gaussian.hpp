#pragma once

#include "entneg/types.hpp"

#include <vector>

namespace entneg {

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns
};

SpectralDecomposition spectral_decompose(const SingleParticleHamiltonian& h);

// Correlation matrix of exp(-beta*(H - mu*N))/Z: P diag[f(h_i)] P^T in the
// eigenbasis of H. beta = 0 gives the infinite-temperature state C = 1/2.
CorrelationMatrix gibbs_correlation_matrix(const SingleParticleHamiltonian& h,
                                           double beta, double mu);

// C(t) = exp(iHt) C(0) exp(-iHt), exact for any t.
CorrelationMatrix evolve(const CorrelationMatrix& c0,
                         const SpectralDecomposition& sd, double t);
CorrelationMatrix evolve(const CorrelationMatrix& c0,
                         const SingleParticleHamiltonian& h, double t);

// Caches C(0) in the H eigenbasis so each time point costs four real
// dense products. at() is const and safe to call from several threads.
class TimeEvolution {
 public:
  TimeEvolution(const CorrelationMatrix& c0, SpectralDecomposition sd);

  CorrelationMatrix at(double t) const;

 private:
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd basis_;       // eigenvectors of H
  Eigen::MatrixXcd c0_eigen_;   // P^T C(0) P
  CorrelationMatrix c0_;
};

// Principal submatrix on the given (distinct, in-range) modes.
CorrelationMatrix reduce_modes(const CorrelationMatrix& c,
                               const std::vector<int>& indices);

// real(C_ii) clamped into [0, 1] for reporting.
double mean_occupation(const CorrelationMatrix& c, int i);

}  // namespace entneg

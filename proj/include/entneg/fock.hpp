#pragma once

#include "entneg/types.hpp"

#include <vector>

namespace entneg {

// Dense Fock-space work is capped at this many modes (dimension 2^14).
inline constexpr int kMaxFockModes = 14;
// Partial-transpose eigenvalues above -kNegativityThreshold count as noise.
inline constexpr double kNegativityThreshold = 1e-12;
// Correlation eigenvalues are clamped into [eps, 1-eps] before the logarithm.
inline constexpr double kOccupationClamp = 1e-12;
// Accepted excursion of correlation eigenvalues outside [0, 1].
inline constexpr double kOccupationBand = 1e-10;

// Many-body state on the 2^m occupation basis. Mode 0 is the leftmost
// tensor factor: basis index n has mode i occupied iff bit (m-1-i) is set.
struct FockDensityMatrix {
  Eigen::MatrixXcd rho;
  int mode_count = 0;
  std::vector<std::string> mode_ordering;

  Eigen::Index dim() const { return rho.rows(); }
};

// Slater-determinant eigenstates of a quadratic Hamiltonian: column n of
// `states` fills the single-particle orbitals flagged by the bits of n.
struct ManyBodySpectrum {
  Eigen::VectorXd energies;
  Eigen::VectorXi particle_numbers;
  Eigen::MatrixXd states;
};

// Jordan-Wigner realizations on the 2^m basis.
Eigen::MatrixXcd creation_operator(int mode, int mode_count);
Eigen::MatrixXcd annihilation_operator(int mode, int mode_count);
// sum_ij coeff(i,j) c_i^dag c_j as a dense Fock-space matrix.
Eigen::MatrixXcd quadratic_form_operator(const Eigen::MatrixXcd& coeff);

ManyBodySpectrum slater_spectrum(const SingleParticleHamiltonian& h);

// Gaussian state with Tr(rho c_i^dag c_j) = C_ij, built by exponentiating
// the quadratic form of B = ln[(1-C)C^{-1}] in the Fock representation.
FockDensityMatrix density_matrix_from_correlations(const CorrelationMatrix& c);

// Fixed-particle-number thermal mixture of the Slater eigenstates.
FockDensityMatrix canonical_gibbs(const SingleParticleHamiltonian& h,
                                  double beta, int particle_number);
FockDensityMatrix grand_canonical_gibbs_fock(const SingleParticleHamiltonian& h,
                                             double beta, double mu);

// Transpose of the bath blocks (system = mode 0, bath = everything else).
Eigen::MatrixXcd partial_transpose(const FockDensityMatrix& state);
// Same with the system being the leading block of dimension system_dim.
Eigen::MatrixXcd partial_transpose_blocks(const Eigen::MatrixXcd& rho,
                                          Eigen::Index system_dim);

// Sum of |lambda| over eigenvalues of the partial transpose below the
// noise threshold; zero for separable states.
double negativity(const FockDensityMatrix& state);
double negativity_of(const Eigen::MatrixXcd& partial_transposed);

double mode_occupation(const FockDensityMatrix& state, int mode);

// N_M pipeline: tridiagonalize keeping mode 0 fixed, keep modes 0..M,
// rebuild the density matrix, partial-transpose over modes 1..M.
double partial_negativity(const CorrelationMatrix& c, int cutoff);
// N_1..N_M sharing one tridiagonal reduction.
std::vector<double> partial_negativities(const CorrelationMatrix& c,
                                         int max_cutoff);

}  // namespace entneg

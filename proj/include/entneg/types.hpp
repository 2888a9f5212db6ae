#pragma once

#include <eigen3/Eigen/Dense>

#include <string>
#include <vector>

namespace entneg {

// Star-geometry single-particle Hamiltonian. Mode 0 is the impurity; bath
// modes couple to it and not to each other. Always real symmetric here
// (couplings are positive real), which a Hermitian matrix includes.
struct SingleParticleHamiltonian {
  Eigen::MatrixXd matrix;
  std::vector<std::string> mode_labels;

  int dim() const { return static_cast<int>(matrix.rows()); }
};

// Two-point function matrix C_ij = Tr(rho c_i^dag c_j). Hermitian with
// eigenvalues in [0, 1]; complex in general once the state has evolved.
struct CorrelationMatrix {
  Eigen::MatrixXcd matrix;
  std::vector<std::string> mode_labels;

  int dim() const { return static_cast<int>(matrix.rows()); }
};

}  // namespace entneg

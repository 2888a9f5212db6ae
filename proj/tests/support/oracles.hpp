#pragma once

// Brute-force Fock-space reference built from explicit Kronecker products,
// independent of the library's bit-twiddling operator construction. Mode 0
// is the leftmost tensor factor, matching the library's basis convention.

#include <eigen3/Eigen/Dense>

#include <complex>
#include <random>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Jordan-Wigner string: Z x ... x Z x a x 1 x ... x 1; basis order per
// factor is (|0>, |1>).
inline Matrix annihilation(int mode, int mode_count) {
  Matrix z(2, 2), lower(2, 2), one(2, 2);
  z << 1, 0, 0, -1;
  lower << 0, 1, 0, 0;
  one.setIdentity();
  Matrix op = Matrix::Identity(1, 1);
  for (int i = 0; i < mode_count; ++i)
    op = kron(op, i < mode ? z : (i == mode ? lower : one));
  return op;
}

inline Matrix creation(int mode, int mode_count) {
  return annihilation(mode, mode_count).adjoint();
}

inline Matrix many_body_operator(const Matrix& coeff) {
  const int mode_count = static_cast<int>(coeff.rows());
  const int dim = 1 << mode_count;
  Matrix out = Matrix::Zero(dim, dim);
  for (int i = 0; i < mode_count; ++i)
    for (int j = 0; j < mode_count; ++j)
      if (coeff(i, j) != Complex(0.0, 0.0))
        out += coeff(i, j) * creation(i, mode_count) * annihilation(j, mode_count);
  return out;
}

inline Matrix number_operator(int mode_count) {
  return many_body_operator(
      Matrix::Identity(mode_count, mode_count));
}

// exp(-beta*(H - mu*N))/Z by direct diagonalization.
inline Matrix gibbs(const Matrix& many_body_h, double beta, double mu,
                    int mode_count) {
  const Matrix exponent = many_body_h - mu * number_operator(mode_count);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(exponent);
  Eigen::VectorXd energies = solver.eigenvalues();
  Eigen::VectorXd weights =
      (-beta * (energies.array() - energies.minCoeff())).exp();
  weights /= weights.sum();
  return solver.eigenvectors() * weights.cast<Complex>().asDiagonal() *
         solver.eigenvectors().adjoint();
}

// C_ij = Tr(rho c_i^dag c_j)
inline Matrix correlation_of(const Matrix& rho, int mode_count) {
  Matrix c(mode_count, mode_count);
  for (int i = 0; i < mode_count; ++i)
    for (int j = 0; j < mode_count; ++j)
      c(i, j) = (rho * creation(i, mode_count) * annihilation(j, mode_count))
                    .trace();
  return c;
}

inline Matrix random_unitary(int dim, std::mt19937& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix gauss(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      gauss(i, j) = Complex(normal(rng), normal(rng));
  const Eigen::HouseholderQR<Matrix> qr(gauss);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Complex d = r(i, i);
    q.col(i) *= (std::abs(d) > 0.0) ? d / std::abs(d) : Complex(1.0, 0.0);
  }
  return q;
}

// Hermitian with eigenvalues drawn from [lo, hi].
inline Matrix random_hermitian_with_spectrum(int dim, double lo, double hi,
                                             std::mt19937& rng) {
  std::uniform_real_distribution<double> uniform(lo, hi);
  const Matrix u = random_unitary(dim, rng);
  Eigen::VectorXd spectrum(dim);
  for (int i = 0; i < dim; ++i) spectrum[i] = uniform(rng);
  return u * spectrum.cast<Complex>().asDiagonal() * u.adjoint();
}

inline Matrix random_correlation(int mode_count, std::mt19937& rng) {
  return random_hermitian_with_spectrum(mode_count, 0.0, 1.0, rng);
}

inline Matrix random_density(int dim, std::mt19937& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const Matrix u = random_unitary(dim, rng);
  Eigen::VectorXd weights(dim);
  for (int i = 0; i < dim; ++i) weights[i] = uniform(rng);
  weights /= weights.sum();
  return u * weights.cast<Complex>().asDiagonal() * u.adjoint();
}

}  // namespace oracle

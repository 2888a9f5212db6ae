#include "entneg/tridiag.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace entneg {

using Complex = std::complex<double>;

namespace {

constexpr double kHermitianTolerance = 1e-8;
constexpr double kDegenerateReflector = 1e-14;

// One elementary step at pivot column `j`: reflect the column below the
// pivot onto (||b||, 0, ..., 0). The reflector Q = 1 - alpha v v^dag is
// applied to the trailing block as Q A Q^dag, so the border column becomes
// Q b = s. `accumulator` (optional) collects the product of the step
// unitaries acting from the left.
void reflect_column(Eigen::MatrixXcd& a, int j, Eigen::MatrixXcd* accumulator) {
  const int m = static_cast<int>(a.rows());
  const int sub = m - 1 - j;
  if (sub <= 1) return;

  const Eigen::VectorXcd b = a.block(j + 1, j, sub, 1);
  const double norm_b = b.norm();
  const double scale = std::max(norm_b, 1.0);

  if (norm_b < kDegenerateReflector) {
    // Decoupled block: the chain terminates here.
    a.block(j + 1, j, sub, 1).setZero();
    a.block(j, j + 1, 1, sub).setZero();
    return;
  }

  const double tail = b.tail(sub - 1).norm();
  if (tail < kDegenerateReflector * scale &&
      std::abs(b[0].imag()) < kDegenerateReflector * scale && b[0].real() > 0.0) {
    return;  // column already in target form; leave it bitwise untouched
  }

  Eigen::VectorXcd v = b;
  v[0] -= norm_b;  // b - s with s = (||b||, 0, ..., 0)
  const double norm_v = v.norm();
  if (norm_v < kDegenerateReflector * scale) return;
  v /= norm_v;

  // alpha = 2*alpha_r*(alpha_r + i*alpha_i)/(alpha_r^2 + alpha_i^2) with
  // alpha_r = ||b||^2 - Re(s^dag b), alpha_i = Im(s^dag b). Equal to the
  // usual factor 2 when b is real.
  const Complex z = norm_b * b[0];  // s^dag b
  const double alpha_r = norm_b * norm_b - z.real();
  const double alpha_i = z.imag();
  const double denom = alpha_r * alpha_r + alpha_i * alpha_i;
  const Complex alpha = 2.0 * alpha_r * Complex(alpha_r, alpha_i) / denom;

  // Trailing block: Q T Q^dag = T - alpha v u^dag - conj(alpha) u v^dag
  //                               + |alpha|^2 (v^dag u) v v^dag, u = T v.
  auto block = a.block(j + 1, j + 1, sub, sub);
  const Eigen::VectorXcd u = block * v;
  const Complex vtu = v.dot(u);  // v^dag u
  block.noalias() -= alpha * v * u.adjoint();
  block.noalias() -= std::conj(alpha) * u * v.adjoint();
  block.noalias() += std::norm(alpha) * vtu * v * v.adjoint();
  const Eigen::MatrixXcd sym = block;
  block = 0.5 * (sym + sym.adjoint());

  // Border becomes s exactly.
  a.block(j + 1, j, sub, 1).setZero();
  a.block(j, j + 1, 1, sub).setZero();
  a(j + 1, j) = norm_b;
  a(j, j + 1) = norm_b;

  if (accumulator) {
    auto rows = accumulator->block(j + 1, 0, sub, accumulator->cols());
    const Eigen::RowVectorXcd vt_rows = v.adjoint() * rows;
    rows.noalias() -= alpha * v * vt_rows;
  }
}

// Diagonal phase gauge making every subdiagonal entry real nonnegative.
// Returns the phases so they can be folded into the accumulated unitary.
Eigen::VectorXcd phase_gauge(Eigen::MatrixXcd& a) {
  const int m = static_cast<int>(a.rows());
  Eigen::VectorXcd d = Eigen::VectorXcd::Ones(m);
  for (int i = 1; i < m; ++i) {
    const Complex t = a(i, i - 1) * d[i - 1];
    const double mag = std::abs(t);
    d[i] = (mag > 0.0) ? t / mag : d[i - 1];
  }
  bool trivial = true;
  for (int i = 0; i < m; ++i) trivial = trivial && d[i] == Complex(1.0, 0.0);
  if (trivial) return d;
  a = d.conjugate().asDiagonal() * a * d.asDiagonal();
  // The rotation makes the band real by construction; pin the entries so
  // separately rounded phase components cannot leave an ulp of imaginary
  // part. Element (0, 0) is never touched (d[0] = 1).
  for (int i = 1; i < m; ++i) {
    const double mag = std::abs(a(i, i - 1));
    a(i, i - 1) = mag;
    a(i - 1, i) = mag;
    a(i, i) = a(i, i).real();
  }
  return d;
}

}  // namespace

Eigen::MatrixXcd TridiagonalizationResult::full_unitary() const {
  const int m = static_cast<int>(bath_unitary.rows()) + 1;
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(m, m);
  full(0, 0) = 1.0;
  full.block(1, 1, m - 1, m - 1) = bath_unitary;
  return full;
}

TridiagonalizationResult householder_tridiagonalize(const CorrelationMatrix& c) {
  const int m = c.dim();
  if (m < 2)
    throw std::invalid_argument(
        "householder_tridiagonalize: dimension must be >= 2");
  const double residual = (c.matrix - c.matrix.adjoint()).cwiseAbs().maxCoeff();
  if (residual > kHermitianTolerance)
    throw std::invalid_argument(
        "householder_tridiagonalize: input not Hermitian (residual " +
        std::to_string(residual) + ")");

  Eigen::MatrixXcd a = c.matrix;
  // Product of the applied step unitaries; the congruence performed is
  // a_final = acc * a_initial * acc^dag, so the reported (1 (+) U) = acc^dag.
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(m, m);
  for (int j = 0; j <= m - 3; ++j) reflect_column(a, j, &acc);
  const Eigen::VectorXcd d = phase_gauge(a);
  acc = d.conjugate().asDiagonal() * acc;

  std::vector<std::string> labels(m);
  labels[0] = c.mode_labels.empty() ? std::string("S") : c.mode_labels[0];
  for (int i = 1; i < m; ++i) labels[i] = "T" + std::to_string(i);

  TridiagonalizationResult result;
  result.tridiagonal = {std::move(a), std::move(labels)};
  result.bath_unitary = acc.block(1, 1, m - 1, m - 1).adjoint();
  return result;
}

Eigen::MatrixXcd leading_tridiagonal_block(const Eigen::MatrixXcd& c, int cutoff) {
  const int m = static_cast<int>(c.rows());
  if (cutoff < 1 || cutoff >= m)
    throw std::invalid_argument(
        "leading_tridiagonal_block: cutoff must lie in [1, dim-1], got " +
        std::to_string(cutoff));

  Eigen::MatrixXcd a = c;
  const int steps = std::min(cutoff, m - 2);
  for (int j = 0; j < steps; ++j) reflect_column(a, j, nullptr);
  Eigen::MatrixXcd block = a.topLeftCorner(cutoff + 1, cutoff + 1);
  phase_gauge(block);
  return block;
}

}  // namespace entneg

#include "entneg/fock.hpp"

#include "entneg/gaussian.hpp"
#include "entneg/tridiag.hpp"

#include <bit>
#include <cassert>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace entneg {

using Complex = std::complex<double>;

namespace {

// Mode i lives at bit (m-1-i): mode 0 is the most significant bit, so the
// system is the leftmost tensor factor and the bath blocks of the partial
// transposition are contiguous.
inline int bit_position(int mode, int mode_count) { return mode_count - 1 - mode; }

inline bool occupied(unsigned state, int mode, int mode_count) {
  return (state >> bit_position(mode, mode_count)) & 1u;
}

// (-1)^(number of occupied modes before `mode` in the ordering)
inline double jw_sign(unsigned state, int mode, int mode_count) {
  const unsigned above = state >> (bit_position(mode, mode_count) + 1);
  return (std::popcount(above) & 1) ? -1.0 : 1.0;
}

void check_mode_guard(int mode_count, const char* where) {
  if (mode_count < 1 || mode_count > kMaxFockModes)
    throw std::invalid_argument(std::string(where) +
                                ": mode count must lie in [1, " +
                                std::to_string(kMaxFockModes) + "], got " +
                                std::to_string(mode_count));
}

// Applies sum_j orbital[j] c_j^dag to a dense Fock vector.
Eigen::VectorXd apply_creation(const Eigen::VectorXd& in,
                               const Eigen::VectorXd& orbital, int mode_count) {
  const unsigned dim = 1u << mode_count;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim);
  for (int mode = 0; mode < mode_count; ++mode) {
    const double amp = orbital[mode];
    if (amp == 0.0) continue;
    const unsigned bit = 1u << bit_position(mode, mode_count);
    for (unsigned s = 0; s < dim; ++s) {
      if (s & bit) continue;
      const double v = in[s];
      if (v == 0.0) continue;
      out[s | bit] += jw_sign(s, mode, mode_count) * amp * v;
    }
  }
  return out;
}

// Slater-determinant vectors for the requested occupation patterns; bit a of
// a pattern fills orbital a (column a of `orbitals`).
Eigen::MatrixXd slater_states_for(const std::vector<unsigned>& patterns,
                                  const Eigen::MatrixXd& orbitals) {
  const int mode_count = static_cast<int>(orbitals.rows());
  const unsigned dim = 1u << mode_count;
  Eigen::MatrixXd states(dim, patterns.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::ptrdiff_t col = 0; col < static_cast<std::ptrdiff_t>(patterns.size());
       ++col) {
    Eigen::VectorXd vec = Eigen::VectorXd::Zero(dim);
    vec[0] = 1.0;  // vacuum
    for (int orb = mode_count - 1; orb >= 0; --orb)
      if ((patterns[col] >> orb) & 1u)
        vec = apply_creation(vec, orbitals.col(orb), mode_count);
    states.col(col) = vec;
  }
  return states;
}

std::vector<unsigned> all_patterns(int mode_count) {
  std::vector<unsigned> patterns(1u << mode_count);
  for (unsigned n = 0; n < patterns.size(); ++n) patterns[n] = n;
  return patterns;
}

FockDensityMatrix thermal_mixture(const SingleParticleHamiltonian& h,
                                  const SpectralDecomposition& sd,
                                  const std::vector<unsigned>& patterns,
                                  const Eigen::VectorXd& weights_log) {
  // weights_log holds -beta*(E_n - mu*N_n) up to a constant; shift so the
  // largest weight is 1 before exponentiating.
  const double shift = weights_log.maxCoeff();
  Eigen::VectorXd w = (weights_log.array() - shift).exp();
  w /= w.sum();

  const Eigen::MatrixXd states = slater_states_for(patterns, sd.eigenvectors);
  const Eigen::MatrixXd scaled = states * w.cwiseSqrt().asDiagonal();
  Eigen::MatrixXd rho = scaled * scaled.transpose();
  return {rho.cast<Complex>(), h.dim(), h.mode_labels};
}

}  // namespace

Eigen::MatrixXcd creation_operator(int mode, int mode_count) {
  check_mode_guard(mode_count, "creation_operator");
  if (mode < 0 || mode >= mode_count)
    throw std::invalid_argument("creation_operator: mode index out of range");
  const unsigned dim = 1u << mode_count;
  const unsigned bit = 1u << bit_position(mode, mode_count);
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
  for (unsigned s = 0; s < dim; ++s)
    if (!(s & bit)) op(s | bit, s) = jw_sign(s, mode, mode_count);
  return op;
}

Eigen::MatrixXcd annihilation_operator(int mode, int mode_count) {
  return creation_operator(mode, mode_count).adjoint();
}

Eigen::MatrixXcd quadratic_form_operator(const Eigen::MatrixXcd& coeff) {
  const int mode_count = static_cast<int>(coeff.rows());
  check_mode_guard(mode_count, "quadratic_form_operator");
  const unsigned dim = 1u << mode_count;
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
  for (unsigned s = 0; s < dim; ++s) {
    for (int j = 0; j < mode_count; ++j) {
      if (!occupied(s, j, mode_count)) continue;
      const double sign_j = jw_sign(s, j, mode_count);
      const unsigned lowered = s & ~(1u << bit_position(j, mode_count));
      for (int i = 0; i < mode_count; ++i) {
        if (occupied(lowered, i, mode_count)) continue;
        const Complex amp = coeff(i, j);
        if (amp == Complex(0.0, 0.0)) continue;
        const unsigned target = lowered | (1u << bit_position(i, mode_count));
        op(target, s) += amp * sign_j * jw_sign(lowered, i, mode_count);
      }
    }
  }
  return op;
}

ManyBodySpectrum slater_spectrum(const SingleParticleHamiltonian& h) {
  check_mode_guard(h.dim(), "slater_spectrum");
  const auto sd = spectral_decompose(h);
  const int mode_count = h.dim();
  const unsigned dim = 1u << mode_count;

  ManyBodySpectrum spectrum;
  spectrum.energies.resize(dim);
  spectrum.particle_numbers.resize(dim);
  for (unsigned n = 0; n < dim; ++n) {
    double energy = 0.0;
    for (int orb = 0; orb < mode_count; ++orb)
      if ((n >> orb) & 1u) energy += sd.eigenvalues[orb];
    spectrum.energies[n] = energy;
    spectrum.particle_numbers[n] = std::popcount(n);
  }
  spectrum.states = slater_states_for(all_patterns(mode_count), sd.eigenvectors);
  return spectrum;
}

FockDensityMatrix density_matrix_from_correlations(const CorrelationMatrix& c) {
  const int mode_count = c.dim();
  check_mode_guard(mode_count, "density_matrix_from_correlations");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(c.matrix);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error(
        "density_matrix_from_correlations: eigensolver failed");

  Eigen::VectorXd occ = solver.eigenvalues();
  for (Eigen::Index i = 0; i < occ.size(); ++i) {
    if (occ[i] < -kOccupationBand || occ[i] > 1.0 + kOccupationBand)
      throw std::invalid_argument(
          "density_matrix_from_correlations: correlation eigenvalue " +
          std::to_string(occ[i]) + " outside the [0, 1] tolerance band");
    occ[i] = std::clamp(occ[i], kOccupationClamp, 1.0 - kOccupationClamp);
  }

  Eigen::VectorXd log_ratio(occ.size());
  for (Eigen::Index i = 0; i < occ.size(); ++i)
    log_ratio[i] = std::log((1.0 - occ[i]) / occ[i]);

  // With C_ij = <c_i^dag c_j>, the eigenmodes entering the exponent carry the
  // conjugate eigenvectors of C; equivalently B = conj(U ln[(1-D)/D] U^dag).
  const Eigen::MatrixXcd basis = solver.eigenvectors();
  const Eigen::MatrixXcd quad =
      (basis * log_ratio.asDiagonal() * basis.adjoint()).conjugate();

  const Eigen::MatrixXcd exponent = quadratic_form_operator(quad);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> fock_solver(exponent);
  if (fock_solver.info() != Eigen::Success)
    throw std::runtime_error(
        "density_matrix_from_correlations: Fock-space eigensolver failed");

  const Eigen::VectorXd energies = fock_solver.eigenvalues();
  Eigen::VectorXd weights = (-(energies.array() - energies.minCoeff())).exp();
  weights /= weights.sum();

  const Eigen::MatrixXcd scaled =
      fock_solver.eigenvectors() *
      weights.cwiseSqrt().cast<Complex>().asDiagonal();
  return {scaled * scaled.adjoint(), mode_count, c.mode_labels};
}

FockDensityMatrix canonical_gibbs(const SingleParticleHamiltonian& h,
                                  double beta, int particle_number) {
  check_mode_guard(h.dim(), "canonical_gibbs");
  if (beta < 0.0)
    throw std::invalid_argument("canonical_gibbs: beta must be >= 0");
  const int mode_count = h.dim();
  if (particle_number < 0 || particle_number > mode_count)
    throw std::invalid_argument(
        "canonical_gibbs: particle_number must lie in [0, mode_count], got " +
        std::to_string(particle_number));

  const auto sd = spectral_decompose(h);
  std::vector<unsigned> sector;
  std::vector<double> weight_log;
  for (unsigned n = 0; n < (1u << mode_count); ++n) {
    if (std::popcount(n) != particle_number) continue;
    double energy = 0.0;
    for (int orb = 0; orb < mode_count; ++orb)
      if ((n >> orb) & 1u) energy += sd.eigenvalues[orb];
    sector.push_back(n);
    weight_log.push_back(-beta * energy);
  }
  assert(!sector.empty());

  return thermal_mixture(
      h, sd, sector,
      Eigen::Map<const Eigen::VectorXd>(weight_log.data(), weight_log.size()));
}

FockDensityMatrix grand_canonical_gibbs_fock(const SingleParticleHamiltonian& h,
                                             double beta, double mu) {
  check_mode_guard(h.dim(), "grand_canonical_gibbs_fock");
  if (beta < 0.0)
    throw std::invalid_argument("grand_canonical_gibbs_fock: beta must be >= 0");
  const int mode_count = h.dim();
  const auto sd = spectral_decompose(h);

  const auto patterns = all_patterns(mode_count);
  Eigen::VectorXd weight_log(patterns.size());
  for (unsigned n = 0; n < patterns.size(); ++n) {
    double value = 0.0;
    for (int orb = 0; orb < mode_count; ++orb)
      if ((n >> orb) & 1u) value += sd.eigenvalues[orb] - mu;
    weight_log[n] = -beta * value;
  }
  return thermal_mixture(h, sd, patterns, weight_log);
}

Eigen::MatrixXcd partial_transpose_blocks(const Eigen::MatrixXcd& rho,
                                          Eigen::Index system_dim) {
  if (system_dim < 1 || rho.rows() % system_dim != 0)
    throw std::invalid_argument(
        "partial_transpose_blocks: system dimension does not divide the state");
  const Eigen::Index bath_dim = rho.rows() / system_dim;
  Eigen::MatrixXcd out(rho.rows(), rho.cols());
  for (Eigen::Index a = 0; a < system_dim; ++a)
    for (Eigen::Index b = 0; b < system_dim; ++b)
      out.block(a * bath_dim, b * bath_dim, bath_dim, bath_dim) =
          rho.block(a * bath_dim, b * bath_dim, bath_dim, bath_dim).transpose();
  return out;
}

Eigen::MatrixXcd partial_transpose(const FockDensityMatrix& state) {
  if (state.mode_count < 2)
    throw std::invalid_argument(
        "partial_transpose: need at least one bath mode");
  return partial_transpose_blocks(state.rho, 2);
}

double negativity_of(const Eigen::MatrixXcd& partial_transposed) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      partial_transposed, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("negativity_of: eigensolver failed");
  double total = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()[i];
    if (lambda < -kNegativityThreshold) total += -lambda;
  }
  return total;
}

double negativity(const FockDensityMatrix& state) {
  return negativity_of(partial_transpose(state));
}

double mode_occupation(const FockDensityMatrix& state, int mode) {
  if (mode < 0 || mode >= state.mode_count)
    throw std::invalid_argument("mode_occupation: mode index out of range");
  double total = 0.0;
  for (Eigen::Index s = 0; s < state.dim(); ++s)
    if (occupied(static_cast<unsigned>(s), mode, state.mode_count))
      total += state.rho(s, s).real();
  return total;
}

namespace {

double negativity_of_tridiagonal_block(const Eigen::MatrixXcd& block,
                                       const std::vector<std::string>& labels) {
  CorrelationMatrix reduced{block, labels};
  const FockDensityMatrix rho = density_matrix_from_correlations(reduced);
  return negativity_of(partial_transpose(rho));
}

std::vector<std::string> chain_labels(int cutoff) {
  std::vector<std::string> labels(cutoff + 1);
  labels[0] = "S";
  for (int i = 1; i <= cutoff; ++i) labels[i] = "T" + std::to_string(i);
  return labels;
}

void check_cutoff(const CorrelationMatrix& c, int cutoff) {
  if (cutoff < 1)
    throw std::invalid_argument("partial_negativity: cutoff M must be >= 1");
  if (cutoff > kMaxFockModes - 2)
    throw std::invalid_argument(
        "partial_negativity: cutoff M exceeds the resource guard (M <= " +
        std::to_string(kMaxFockModes - 2) + ")");
  if (c.dim() < cutoff + 1)
    throw std::invalid_argument(
        "partial_negativity: correlation matrix of dimension " +
        std::to_string(c.dim()) + " is too small for cutoff " +
        std::to_string(cutoff));
}

}  // namespace

double partial_negativity(const CorrelationMatrix& c, int cutoff) {
  check_cutoff(c, cutoff);
  const Eigen::MatrixXcd block = leading_tridiagonal_block(c.matrix, cutoff);
  return negativity_of_tridiagonal_block(block, chain_labels(cutoff));
}

std::vector<double> partial_negativities(const CorrelationMatrix& c,
                                         int max_cutoff) {
  check_cutoff(c, max_cutoff);
  const Eigen::MatrixXcd block = leading_tridiagonal_block(c.matrix, max_cutoff);
  std::vector<double> values(max_cutoff);
  for (int j = 1; j <= max_cutoff; ++j)
    values[j - 1] = negativity_of_tridiagonal_block(
        block.topLeftCorner(j + 1, j + 1), chain_labels(j));
  return values;
}

}  // namespace entneg

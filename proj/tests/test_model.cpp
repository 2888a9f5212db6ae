#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entneg/gaussian.hpp"
#include "entneg/model.hpp"

#include <cmath>
#include <numbers>

using namespace entneg;

TEST_CASE("boxcar couplings reproduce the spectral-density normalization") {
  const BathSpec bath{50.0, 400, 1.0, 1.0, 0.0};
  const auto h = build_single_bath({0.0, 0.0}, bath);

  REQUIRE(h.dim() == 401);
  const double t = h.matrix(0, 1);
  // sqrt(Gamma*W / (2*pi*(K-1))) evaluated directly
  CHECK(t == doctest::Approx(std::sqrt(50.0 / (2.0 * std::numbers::pi * 399.0)))
                 .epsilon(1e-12));
  CHECK(t == doctest::Approx(0.1412241).epsilon(1e-5));

  for (int k = 1; k <= 400; ++k) {
    const double tk = h.matrix(0, k);
    CHECK(2.0 * std::numbers::pi * tk * tk * 399.0 / 50.0 ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("level grid covers the band inclusively") {
  const BathSpec bath{2.0, 2, 0.5, 1.0, 0.0};
  const auto eps = bath.level_energies();
  CHECK(eps.front() == -1.0);
  CHECK(eps.back() == 1.0);

  const BathSpec fine{50.0, 400, 1.0, 1.0, 0.0};
  const auto grid = fine.level_energies();
  CHECK(grid.front() == doctest::Approx(-25.0));
  CHECK(grid.back() == doctest::Approx(25.0));
  const double spacing = 50.0 / 399.0;
  for (std::size_t i = 1; i < grid.size(); ++i)
    CHECK(grid[i] - grid[i - 1] == doctest::Approx(spacing).epsilon(1e-12));
}

TEST_CASE("zero coupling produces a diagonal Hamiltonian") {
  const BathSpec bath{10.0, 5, 0.0, 1.0, 0.0};
  const auto h = build_single_bath({0.3, 0.0}, bath);
  for (int k = 1; k <= 5; ++k) {
    CHECK(h.matrix(0, k) == 0.0);
    CHECK(h.matrix(k, 0) == 0.0);
  }
}

TEST_CASE("star structure and hermiticity") {
  const BathSpec bath{7.0, 9, 0.4, 2.0, 0.1};
  const auto h = build_single_bath({-0.2, 0.0}, bath);
  const double scale = h.matrix.cwiseAbs().maxCoeff();
  CHECK((h.matrix - h.matrix.transpose()).cwiseAbs().maxCoeff() <
        1e-14 * scale);
  for (int i = 1; i < h.dim(); ++i)
    for (int j = 1; j < h.dim(); ++j)
      if (i != j) CHECK(h.matrix(i, j) == 0.0);
}

TEST_CASE("invalid specs are rejected with the parameter named") {
  CHECK_THROWS_WITH_AS((BathSpec{10.0, 4, -0.1, 1.0, 0.0}.level_energies()),
                       doctest::Contains("gamma"), std::invalid_argument);
  CHECK_THROWS_WITH_AS((BathSpec{10.0, 1, 0.1, 1.0, 0.0}.level_energies()),
                       doctest::Contains("K"), std::invalid_argument);
  CHECK_THROWS_WITH_AS((BathSpec{-1.0, 4, 0.1, 1.0, 0.0}.level_energies()),
                       doctest::Contains("W"), std::invalid_argument);
  CHECK_THROWS_WITH_AS((BathSpec{10.0, 4, 0.1, -1.0, 0.0}.level_energies()),
                       doctest::Contains("beta"), std::invalid_argument);
  CHECK_THROWS_AS((void)build_single_bath({0.0, 1.5},
                                          BathSpec{10.0, 4, 0.1, 1.0, 0.0}),
                  std::invalid_argument);

  JunctionSpec lopsided;
  lopsided.asymmetry = 1.5;
  lopsided.gamma = 0.1;
  lopsided.bandwidth = 10.0;
  lopsided.level_count = 4;
  CHECK_THROWS_WITH_AS((void)build_junction(lopsided), doctest::Contains("a"),
                       std::invalid_argument);
}

TEST_CASE("junction parameterization") {
  JunctionSpec spec;
  spec.impurity = {0.0, 0.5};
  spec.gamma = 0.3;
  spec.bandwidth = 10.0;
  spec.level_count = 6;
  spec.voltage = 2.0;
  spec.beta = 1.0;

  SUBCASE("symmetric coupling at a = 0") {
    const auto h = build_junction(spec);
    for (int k = 1; k <= 6; ++k)
      CHECK(h.matrix(0, k) == doctest::Approx(h.matrix(0, 6 + k)));
  }

  SUBCASE("a = 1 decouples the right bath") {
    spec.asymmetry = 1.0;
    const auto h = build_junction(spec);
    for (int k = 1; k <= 6; ++k) CHECK(h.matrix(0, 6 + k) == 0.0);
    CHECK(h.matrix(0, 1) > 0.0);
  }

  SUBCASE("chemical potentials split symmetrically around mu_bar") {
    CHECK(spec.mu_left() == doctest::Approx(1.0));
    CHECK(spec.mu_right() == doctest::Approx(-1.0));
    spec.mu_bar = 0.25;
    CHECK(spec.mu_left() == doctest::Approx(1.25));
    CHECK(spec.mu_right() == doctest::Approx(-0.75));
  }
}

TEST_CASE("initial single-bath correlation matrix") {
  SUBCASE("infinite-temperature proxy fills every level to 1/2") {
    const BathSpec bath{10.0, 5, 0.1, 1e-9, 0.0};
    const auto c = initial_correlation_matrix_single({0.0, 0.0}, bath);
    for (int k = 1; k <= 5; ++k)
      CHECK(c.matrix(k, k).real() == doctest::Approx(0.5).epsilon(1e-6));
  }

  SUBCASE("huge chemical potential fills the band") {
    const BathSpec bath{10.0, 5, 0.1, 1.0, 1e6};
    const auto c = initial_correlation_matrix_single({0.0, 0.0}, bath);
    for (int k = 1; k <= 5; ++k)
      CHECK(c.matrix(k, k).real() == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("impurity occupation is carried through") {
    const BathSpec bath{0.5, 400, 0.01, 1.0, 0.25 - 0.015 + 1.0};
    const auto c = initial_correlation_matrix_single({0.235, 0.1}, bath);
    CHECK(c.matrix(0, 0).real() == 0.1);
  }

  SUBCASE("diagonal with entries in [0, 1]") {
    const BathSpec bath{4.0, 7, 0.2, 2.0, -0.3};
    const auto c = initial_correlation_matrix_single({0.1, 0.7}, bath);
    for (int i = 0; i < c.dim(); ++i) {
      for (int j = 0; j < c.dim(); ++j)
        if (i != j) CHECK(c.matrix(i, j) == std::complex<double>(0.0, 0.0));
      CHECK(c.matrix(i, i).real() >= 0.0);
      CHECK(c.matrix(i, i).real() <= 1.0);
    }
  }
}

TEST_CASE("initial junction correlation matrix") {
  JunctionSpec spec;
  spec.impurity = {0.0, 0.5};
  spec.gamma = 0.3;
  spec.bandwidth = 10.0;
  spec.level_count = 5;
  spec.beta = 1.0;

  SUBCASE("zero bias makes both bath blocks identical") {
    const auto c = initial_correlation_matrix_junction(spec);
    for (int k = 1; k <= 5; ++k)
      CHECK(c.matrix(k, k) == c.matrix(5 + k, 5 + k));
  }

  SUBCASE("Fermi value at resonance under bias") {
    spec.voltage = 2.0;
    // left bath at mu = +1: f(0) = 1/(1+e^{-1})
    CHECK(fermi_occupation(0.0, 1.0, spec.mu_left()) ==
          doctest::Approx(0.7310585786300049).epsilon(1e-12));
    const auto c = initial_correlation_matrix_junction(spec);
    CHECK(c.matrix(0, 0).real() == 0.5);
  }
}

TEST_CASE("symmetric junction matches a single bath with doubled coupling") {
  // a = 0, V = 0: the even combination of the two baths carries coupling
  // 2*Gamma and the odd one decouples, so n_0(t) must agree with the
  // single-bath model at 2*Gamma on the same grid.
  const int k = 60;
  const double gamma = 0.2;
  const double w = 8.0;

  JunctionSpec junction;
  junction.impurity = {0.1, 0.8};
  junction.gamma = gamma;
  junction.bandwidth = w;
  junction.level_count = k;
  junction.beta = 1.0;

  const BathSpec doubled{w, k, 2.0 * gamma, 1.0, 0.0};

  const auto h2 = build_junction(junction);
  const auto c2 = initial_correlation_matrix_junction(junction);
  const auto ev2 = TimeEvolution(c2, spectral_decompose(h2));

  const auto h1 = build_single_bath(junction.impurity, doubled);
  const auto c1 = initial_correlation_matrix_single(junction.impurity, doubled);
  const auto ev1 = TimeEvolution(c1, spectral_decompose(h1));

  for (double t : {0.5, 2.0, 7.0, 15.0}) {
    const double n_junction = mean_occupation(ev2.at(t), 0);
    const double n_single = mean_occupation(ev1.at(t), 0);
    CHECK(n_junction == doctest::Approx(n_single).epsilon(1e-6));
  }
}

#include <doctest.h>

#include <cmath>
#include <vector>

#include "hritz/errors.hpp"
#include "hritz/variational.hpp"

using namespace hritz;
using doctest::Approx;

namespace {

const PotentialSpec kHarmonic = PotentialSpec::harmonic(1.0);
const PotentialSpec kQuartic = PotentialSpec::quartic(1.0);

std::vector<double> geometric_grid(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = lo * std::pow(hi / lo, i / (n - 1.0));
  return g;
}

}  // namespace

TEST_CASE("exact_diagonal_alpha") {
  CHECK(exact_diagonal_alpha({1.0, 1.0}, 1.0) == 1.0);
  CHECK(exact_diagonal_alpha({1.0, 2.0}, 3.0) == 6.0);
  CHECK(exact_diagonal_alpha({0.5, 2.0}, 3.0) == 12.0);
  CHECK_THROWS_AS(exact_diagonal_alpha({1.0, 1.0}, 0.0), ValidationError);
  CHECK_THROWS_AS(exact_diagonal_alpha({0.0, 1.0}, 1.0), ValidationError);

  const PhysicalConstants c{0.7, 1.9};
  const double w = 2.3;
  const double alpha = exact_diagonal_alpha(c, w);
  const auto h = hamiltonian_matrix(BasisSpec(alpha, c), PotentialSpec::harmonic(w), 20);
  double worst = 0.0;
  for (std::size_t r = 0; r + 2 < 20; ++r) worst = std::max(worst, std::abs(h.at(r, r + 2)));
  CHECK(worst == 0.0);
  const auto spectrum = solve_hamiltonian(PotentialSpec::harmonic(w), c, alpha, 20);
  for (std::size_t r = 0; r < 20; ++r)
    CHECK(spectrum.eigenvalues[r] == Approx(c.hbar * w * (r + 0.5)).epsilon(1e-14));
}

TEST_CASE("scan_alpha") {
  const std::vector<double> grid{0.5, 1.0, 2.0};
  const auto scan = scan_alpha(kHarmonic, {}, 1, grid);
  REQUIRE(scan.energies.size() == 3);
  CHECK(scan.energies[0][0] == Approx(0.625).epsilon(1e-15));
  CHECK(scan.energies[1][0] == Approx(0.5).epsilon(1e-15));
  CHECK(scan.energies[2][0] == Approx(0.625).epsilon(1e-15));
  CHECK(scan.argmin_alpha == 1.0);
  CHECK(scan.dim == 1);
  CHECK(scan.alphas == grid);

  SUBCASE("closed form at dim 1") {
    const auto g = geometric_grid(0.1, 10.0, 41);
    const auto h = scan_alpha(kHarmonic, {}, 1, g);
    const auto q = scan_alpha(kQuartic, {}, 1, g);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double a = g[i];
      CHECK(h.energies[i][0] == Approx(a / 4 + 1 / (4 * a)).epsilon(1e-14));
      CHECK(q.energies[i][0] == Approx(a / 4 + 3 / (4 * a * a)).epsilon(1e-14));
    }
  }

  SUBCASE("harmonic lower envelope") {
    for (std::size_t dim : {1u, 2u, 7u, 20u}) {
      const auto g = geometric_grid(0.2, 5.0, 25);  // contains 1.0 as the middle point
      const auto s = scan_alpha(kHarmonic, {}, dim, g);
      for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(s.energies[i].size() == dim);
        CHECK(s.energies[i][0] >= 0.5 - 1e-12);
        // Small bases stay strictly above the exact level away from alpha = 1;
        // larger ones converge to it to rounding over a wide range.
        if (dim <= 2 && std::abs(g[i] - 1.0) > 1e-3) CHECK(s.energies[i][0] > 0.5);
      }
      if (dim <= 2) CHECK(s.argmin_alpha == Approx(1.0).epsilon(1e-12));
      const auto at_best = solve_hamiltonian(kHarmonic, {}, s.argmin_alpha, dim).eigenvalues[0];
      CHECK(std::abs(at_best - 0.5) <= 1e-12);
      CHECK(s.energies[12][0] == Approx(0.5).epsilon(1e-15));
    }
  }

  SUBCASE("result order matches the grid regardless of threading") {
    const auto g = geometric_grid(0.3, 8.0, 64);
    const auto s = scan_alpha(kQuartic, {}, 12, g);
    for (std::size_t i = 0; i < g.size(); i += 7) {
      const auto ref = solve_hamiltonian(kQuartic, {}, g[i], 12).eigenvalues;
      CHECK(s.energies[i] == ref);
    }
  }

  SUBCASE("argmin invariance under rescaled constants") {
    const auto g = geometric_grid(0.25, 4.0, 17);
    const auto base = scan_alpha(kHarmonic, {1.0, 1.0}, 10, g);
    // m omega / hbar stays 1 while hbar, m and omega change.
    const auto scaled = scan_alpha(PotentialSpec::harmonic(3.0), {3.0, 1.0}, 10, g);
    const auto other = scan_alpha(PotentialSpec::harmonic(0.5), {2.0, 4.0}, 10, g);
    CHECK(scaled.argmin_alpha == base.argmin_alpha);
    CHECK(other.argmin_alpha == base.argmin_alpha);
  }

  const std::vector<double> bad_order{1.0, 0.5};
  const std::vector<double> bad_value{-1.0, 0.5};
  const std::vector<double> dup{1.0, 1.0};
  CHECK_THROWS_AS(scan_alpha(kHarmonic, {}, 3, bad_order), ValidationError);
  CHECK_THROWS_AS(scan_alpha(kHarmonic, {}, 3, bad_value), ValidationError);
  CHECK_THROWS_AS(scan_alpha(kHarmonic, {}, 3, dup), ValidationError);
  CHECK_THROWS_AS(scan_alpha(kHarmonic, {}, 3, std::vector<double>{}), ValidationError);
  CHECK_THROWS_AS(scan_alpha(kHarmonic, {}, 0, grid), ValidationError);
}

TEST_CASE("minimize_alpha") {
  SUBCASE("harmonic") {
    for (std::size_t dim : {1u, 30u}) {
      const auto m = minimize_alpha(kHarmonic, {}, dim, 0.1, 10.0);
      CAPTURE(dim);
      CHECK(std::abs(m.alpha_star - 1.0) <= 1e-6);
      CHECK(std::abs(m.energy - 0.5) <= 1e-10);
      CHECK_FALSE(m.boundary);
      CHECK(m.evaluations > 10);
    }
  }
  SUBCASE("quartic dim 1 closed-form minimizer") {
    const auto m = minimize_alpha(kQuartic, {}, 1, 0.5, 5.0);
    const double exact = std::cbrt(6.0);
    CHECK(std::abs(m.alpha_star - exact) <= 1e-6);
    CHECK(m.energy == Approx(exact / 4 + 3 / (4 * exact * exact)).epsilon(1e-12));
    CHECK(m.energy == Approx(0.68142).epsilon(1e-5));
    CHECK_FALSE(m.boundary);
  }
  SUBCASE("monotone objective on the bracket is flagged") {
    const auto left = minimize_alpha(kHarmonic, {}, 1, 2.0, 5.0);
    CHECK(left.boundary);
    CHECK(left.alpha_star == Approx(2.0).epsilon(1e-8));
    const auto right = minimize_alpha(kHarmonic, {}, 1, 0.1, 0.5);
    CHECK(right.boundary);
    CHECK(right.alpha_star == Approx(0.5).epsilon(1e-8));
  }
  SUBCASE("sum-of-levels objective") {
    const auto m = minimize_alpha(kHarmonic, {}, 4, 0.2, 5.0, {AlphaObjective::Kind::lowest_sum, 3});
    CHECK(m.alpha_star == Approx(1.0).epsilon(1e-6));
    CHECK(m.objective == Approx(0.5 + 1.5 + 2.5).epsilon(1e-12));
  }
  SUBCASE("larger bases cannot undercut the exact ground level") {
    const auto m = minimize_alpha(kQuartic, {}, 40, 0.5, 10.0);
    const auto m1 = minimize_alpha(kQuartic, {}, 1, 0.5, 10.0);
    CHECK(m.energy < m1.energy);
    CHECK(m.energy == Approx(0.667986259).epsilon(1e-8));
  }
  CHECK_THROWS_AS(minimize_alpha(kHarmonic, {}, 3, 2.0, 1.0), ValidationError);
  CHECK_THROWS_AS(minimize_alpha(kHarmonic, {}, 3, 0.0, 1.0), ValidationError);
  CHECK_THROWS_AS(minimize_alpha(kHarmonic, {}, 0, 0.5, 1.0), ValidationError);
}

TEST_CASE("convergence_table") {
  const std::vector<std::size_t> dims{2, 4, 8};
  const auto t = convergence_table(kHarmonic, {}, 1.0, dims);
  CHECK(t.dims == dims);
  CHECK(t.alpha == 1.0);
  for (std::size_t k = 0; k < dims.size(); ++k)
    for (std::size_t i = 0; i < dims[k]; ++i) CHECK(t.spectra[k][i] == Approx(i + 0.5).epsilon(1e-15));

  const std::vector<std::size_t> qdims{10, 20, 40};
  const auto q = convergence_table(kQuartic, {}, 2.0, qdims);
  CHECK(q.spectra[1][0] <= q.spectra[0][0]);
  CHECK(q.spectra[2][0] <= q.spectra[1][0]);
  const double gap1 = q.spectra[0][0] - q.spectra[1][0];
  const double gap2 = q.spectra[1][0] - q.spectra[2][0];
  CHECK(gap2 <= gap1);
  CHECK(check_mhu(q).pass());

  const std::vector<std::size_t> one{6};
  const auto single = convergence_table(kQuartic, {}, 1.0, one);
  CHECK(single.spectra.size() == 1);
  CHECK(check_mhu(single).pass());

  const std::vector<std::size_t> bad{4, 4};
  CHECK_THROWS_AS(convergence_table(kHarmonic, {}, 1.0, bad), ValidationError);
  CHECK_THROWS_AS(convergence_table(kHarmonic, {}, 1.0, std::vector<std::size_t>{}), ValidationError);
}

TEST_CASE("ground level is nonincreasing in dimension") {
  for (double alpha : {0.5, 1.0, 2.0})
    for (const auto& pot : {kHarmonic, kQuartic}) {
      double prev = INFINITY;
      for (std::size_t dim = 1; dim <= 40; ++dim) {
        const double e0 = solve_hamiltonian(pot, {}, alpha, dim).eigenvalues[0];
        CHECK(e0 <= prev + mhu_tolerance(e0));
        prev = e0;
      }
    }
}

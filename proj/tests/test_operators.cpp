#include <doctest.h>

#include <cmath>
#include <random>

#include "hritz/errors.hpp"
#include "hritz/matrix.hpp"
#include "hritz/operators.hpp"
#include "oracles.hpp"

using namespace hritz;
using doctest::Approx;

namespace {

const PotentialSpec kHarmonic = PotentialSpec::harmonic(1.0);
const PotentialSpec kQuartic = PotentialSpec::quartic(1.0);

}  // namespace

TEST_CASE("PotentialSpec validation") {
  CHECK_THROWS_AS(PotentialSpec::harmonic(0.0), ValidationError);
  CHECK_THROWS_AS(PotentialSpec::harmonic(-1.0), ValidationError);
  CHECK_THROWS_AS(PotentialSpec::quartic(0.0), ValidationError);
  CHECK_THROWS_AS(PotentialSpec::even_polynomial({}), ValidationError);
  CHECK_THROWS_AS(PotentialSpec::even_polynomial({0.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(PotentialSpec::even_polynomial({1.0}), ValidationError);         // constant
  CHECK_THROWS_AS(PotentialSpec::even_polynomial({0.0, 1.0, -0.1}), ValidationError);  // x^4 < 0
  CHECK_THROWS_AS(PotentialSpec::even_polynomial({0.0, NAN}), ValidationError);

  const auto p = PotentialSpec::even_polynomial({0.0, -1.0, 0.5, 0.0, 0.0});
  CHECK(p.coeffs().size() == 3);
  CHECK(p.degree() == 4);
  CHECK(kHarmonic.degree() == 2);
  CHECK(kQuartic.degree() == 4);
  CHECK(p.value(2.0, 1.0) == Approx(-4.0 + 8.0));
  CHECK(kHarmonic.value(3.0, 2.0) == Approx(9.0));
}

TEST_CASE("outer turning point") {
  CHECK(kHarmonic.outer_turning_point(0.5, 1.0) == Approx(1.0).epsilon(1e-12));
  CHECK(kQuartic.outer_turning_point(16.0, 1.0) == Approx(2.0).epsilon(1e-12));
  // Double well: V = x^4 - 2x^2 has V = 0 at x = sqrt(2).
  const auto dw = PotentialSpec::even_polynomial({0.0, -2.0, 1.0});
  CHECK(dw.outer_turning_point(0.0, 1.0) == Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("BandedSymMatrix storage") {
  BandedSymMatrix one(1, 3);
  CHECK(one.bandwidth() == 0);
  one.set(0, 0, 2.5);
  const auto d1 = one.to_dense();
  CHECK(d1.size() == 1);
  CHECK(d1(0, 0) == 2.5);

  auto m = BandedSymMatrix::from_bands({{1.0, 1.0, 1.0}, {0.0, 0.0}, {0.5}});
  const auto d = m.to_dense();
  const double expected[3][3] = {{1, 0, 0.5}, {0, 1, 0}, {0.5, 0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(d(i, j) == expected[i][j]);
  CHECK(m.at(2, 0) == 0.5);

  CHECK_THROWS_AS(BandedSymMatrix::from_bands({{1.0, 1.0}, {1.0, 2.0}}), ValidationError);
  CHECK_THROWS_AS(BandedSymMatrix::from_bands({{1.0, INFINITY}}), ValidationError);

  SUBCASE("round trip through dense form is exact") {
    std::mt19937_64 rng(5);
    const auto h = hamiltonian_matrix(BasisSpec(1.7), kQuartic, 12);
    const auto back = extract_bands(h.to_dense(), h.bandwidth());
    for (std::size_t k = 0; k <= h.bandwidth(); ++k)
      for (std::size_t i = 0; i + k < h.dim(); ++i) CHECK(back.at(i, i + k) == h.at(i, i + k));
    const auto dense = h.to_dense();
    CHECK((dense - dense.transposed()).max_abs() == 0.0);
  }
}

TEST_CASE("kinetic matrix") {
  const BasisSpec unit(1.0);
  const auto t1 = kinetic_matrix(unit, 1);
  CHECK(t1.dim() == 1);
  CHECK(t1.at(0, 0) == 0.25);

  const auto t3 = kinetic_matrix(unit, 3);
  CHECK(t3.at(0, 2) == Approx(-0.25 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(t3.at(0, 2) == Approx(-0.353553).epsilon(1e-6));
  CHECK(t3.at(0, 1) == 0.0);

  const BasisSpec spec(2.0, 1.5, 0.7);
  const double c = 2.0 * 1.5 * 1.5 / (4 * 0.7);
  const auto t = kinetic_matrix(spec, 10);
  CHECK(t.bandwidth() == 2);
  for (std::size_t r = 0; r < 10; ++r) {
    CHECK(t.at(r, r) == Approx(c * (2 * r + 1)).epsilon(1e-15));
    if (r + 2 < 10)
      CHECK(t.at(r, r + 2) == Approx(-c * std::sqrt((r + 1.0) * (r + 2.0))).epsilon(1e-15));
    if (r + 1 < 10) CHECK(t.at(r, r + 1) == 0.0);
  }
  CHECK_THROWS_AS(kinetic_matrix(unit, 0), ValidationError);
}

TEST_CASE("potential matrix") {
  const BasisSpec unit(1.0);
  CHECK(potential_matrix(unit, kHarmonic, 1).at(0, 0) == 0.25);
  CHECK(potential_matrix(unit, kQuartic, 1).at(0, 0) == 0.75);

  const auto q = potential_matrix(unit, kQuartic, 8);
  CHECK(q.bandwidth() == 4);
  CHECK(q.at(0, 4) == Approx(0.25 * std::sqrt(24.0)).epsilon(1e-15));
  CHECK(q.at(0, 4) == Approx(1.224745).epsilon(1e-6));

  SUBCASE("quartic closed forms") {
    const double alpha = 1.3, lambda = 0.8;
    const BasisSpec spec(alpha);
    const auto v = potential_matrix(spec, PotentialSpec::quartic(lambda), 15);
    const double a2 = alpha * alpha;
    for (std::size_t r = 0; r < 15; ++r) {
      const double rr = static_cast<double>(r);
      CHECK(v.at(r, r) == Approx(3 * lambda / (4 * a2) * (2 * rr * rr + 2 * rr + 1)).epsilon(1e-14));
      if (r + 2 < 15)
        CHECK(v.at(r, r + 2) == Approx((2 * rr + 3) * lambda / (2 * a2) *
                                       std::sqrt((rr + 1) * (rr + 2))).epsilon(1e-14));
      if (r + 4 < 15)
        CHECK(v.at(r, r + 4) == Approx(lambda / (4 * a2) *
                                       std::sqrt((rr + 1) * (rr + 2) * (rr + 3) * (rr + 4)))
                                    .epsilon(1e-14));
    }
  }

  SUBCASE("printed fourth-band form") {
    const auto p = potential_matrix(unit, kQuartic, 8, QuarticBand4::printed);
    CHECK(p.at(0, 4) == Approx(std::sqrt(40.0) / 4.0).epsilon(1e-15));
    CHECK(std::abs(p.at(0, 4) - q.at(0, 4)) > 0.3);
    // Bands 0 and 2 are unaffected.
    for (std::size_t r = 0; r < 8; ++r) {
      CHECK(p.at(r, r) == q.at(r, r));
      if (r + 2 < 8) CHECK(p.at(r, r + 2) == q.at(r, r + 2));
    }
  }

  SUBCASE("even polynomial composition") {
    const double alpha = 0.7, m = 1.0;
    const BasisSpec spec(alpha, 1.0, m);
    const auto h = potential_matrix(spec, kHarmonic, 20);
    const auto h_poly = potential_matrix(spec, PotentialSpec::even_polynomial({0.0, 0.5}), 20);
    const auto q_poly = potential_matrix(spec, PotentialSpec::even_polynomial({0.0, 0.0, 1.0}), 20);
    const auto q_ref = potential_matrix(spec, kQuartic, 20);
    CHECK(h_poly.bandwidth() == 2);
    CHECK(q_poly.bandwidth() == 4);
    for (std::size_t i = 0; i < 20; ++i)
      for (std::size_t j = i; j < 20; ++j) {
        CHECK(std::abs(h_poly.at(i, j) - h.at(i, j)) <= 1e-12 * (1 + std::abs(h.at(i, j))));
        CHECK(std::abs(q_poly.at(i, j) - q_ref.at(i, j)) <= 1e-12 * (1 + std::abs(q_ref.at(i, j))));
      }
    // The constant term lands on the diagonal only.
    const auto shifted = potential_matrix(spec, PotentialSpec::even_polynomial({3.0, 0.0, 1.0}), 20);
    for (std::size_t i = 0; i < 20; ++i)
      for (std::size_t j = i; j < 20; ++j)
        CHECK(shifted.at(i, j) == Approx(q_ref.at(i, j) + (i == j ? 3.0 : 0.0)).epsilon(1e-12));
    const auto sextic = potential_matrix(spec, PotentialSpec::even_polynomial({0.0, 0.0, 0.0, 1.0}), 20);
    CHECK(sextic.bandwidth() == 6);
  }

  CHECK_THROWS_AS(potential_matrix(unit, kHarmonic, 0), ValidationError);
}

TEST_CASE("hamiltonian matrix") {
  const BasisSpec unit(1.0);
  const auto h5 = hamiltonian_matrix(unit, kHarmonic, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i; j < 5; ++j) {
      if (i == j)
        CHECK(h5.at(i, i) == 0.5 + static_cast<double>(i));
      else
        CHECK(h5.at(i, j) == 0.0);
    }

  const auto h2 = hamiltonian_matrix(BasisSpec(2.0), kHarmonic, 3);
  CHECK(h2.at(0, 2) == Approx(-0.375 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(h2.at(0, 2) == Approx(-0.530330).epsilon(1e-6));

  CHECK(hamiltonian_matrix(unit, kQuartic, 1).at(0, 0) == 1.0);

  SUBCASE("harmonic closed form") {
    const double alpha = 1.6, hbar = 0.9, m = 1.2, w = 1.4;
    const BasisSpec spec(alpha, hbar, m);
    const auto h = hamiltonian_matrix(spec, PotentialSpec::harmonic(w), 12);
    const double kt = alpha * hbar * hbar / (4 * m), kv = m * w * w / (4 * alpha);
    for (std::size_t r = 0; r < 12; ++r) {
      CHECK(h.at(r, r) == Approx((kt + kv) * (2 * r + 1)).epsilon(1e-14));
      if (r + 2 < 12)
        CHECK(h.at(r, r + 2) == Approx((kv - kt) * std::sqrt((r + 1.0) * (r + 2.0))).epsilon(1e-13));
    }
  }

  SUBCASE("additivity is exact") {
    for (double alpha : {0.5, 1.0, 2.0, 3.3})
      for (const auto& pot : {kHarmonic, kQuartic, PotentialSpec::even_polynomial({1.0, -2.0, 0.5})}) {
        const BasisSpec spec(alpha);
        const auto h = hamiltonian_matrix(spec, pot, 16);
        const auto t = kinetic_matrix(spec, 16);
        const auto v = potential_matrix(spec, pot, 16);
        for (std::size_t i = 0; i < 16; ++i)
          for (std::size_t j = i; j < 16; ++j) CHECK(h.at(i, j) == t.at(i, j) + v.at(i, j));
      }
  }

  SUBCASE("parity selection") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ua(0.2, 5.0);
    for (int trial = 0; trial < 20; ++trial) {
      const BasisSpec spec(ua(rng));
      for (const auto& pot : {kHarmonic, kQuartic, PotentialSpec::even_polynomial({0.0, -1.0, 0.0, 0.3})}) {
        const auto dense = hamiltonian_matrix(spec, pot, 25).to_dense();
        for (std::size_t i = 0; i < 25; ++i)
          for (std::size_t j = 0; j < 25; ++j)
            if ((i + j) % 2 == 1) CHECK(dense(i, j) == 0.0);
      }
    }
  }

  SUBCASE("off-diagonal entries vanish exactly at alpha = m omega / hbar") {
    const double hbar = 1.0, m = 2.0, w = 3.0;
    const auto h = hamiltonian_matrix(BasisSpec(m * w / hbar, hbar, m), PotentialSpec::harmonic(w), 20);
    CHECK(h.max_abs_off_diagonal() == 0.0);
    const auto off = hamiltonian_matrix(BasisSpec(5.9, hbar, m), PotentialSpec::harmonic(w), 20);
    CHECK(off.max_abs_off_diagonal() > 0.0);
  }
}

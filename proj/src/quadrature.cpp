#include "hritz/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "hritz/eigensolver.hpp"
#include "hritz/errors.hpp"

namespace hritz {

QuadratureRule gauss_hermite_rule(std::size_t order) {
  if (order < 1 || order > kMaxRuleOrder)
    throw RangeError("gauss_hermite_rule: order " + std::to_string(order) +
                     " outside [1, " + std::to_string(kMaxRuleOrder) + "]");

  std::vector<double> diag(order, 0.0);
  std::vector<double> off(order - 1);
  for (std::size_t k = 1; k < order; ++k) off[k - 1] = std::sqrt(0.5 * static_cast<double>(k));
  const auto eig = eigh_tridiagonal(diag, off);

  QuadratureRule rule;
  rule.order = order;
  rule.nodes = eig.eigenvalues;
  rule.weights.resize(order);
  rule.scaled_weights.resize(order);

  // Polish each node with Newton steps on the normalized Hermite function
  // phi_K and take weights from w exp(y^2) = 1 / (K phi_{K-1}(y)^2). The
  // squared eigenvector components carry only absolute accuracy, which is
  // not enough for the tiny outer weights.
  const BasisSpec unit(1.0);
  const double k = static_cast<double>(order);
  for (std::size_t i = 0; i < order; ++i) {
    double y = rule.nodes[i];
    for (int it = 0; it < 3; ++it) {
      const auto phi = basis_values(unit, order + 1, y);
      if (phi[order - 1] == 0.0) break;
      const double step = phi[order] / (std::sqrt(2.0 * k) * phi[order - 1]);
      y -= step;
      if (std::abs(step) <= 1e-16 * (1.0 + std::abs(y))) break;
    }
    const auto phi = basis_values(unit, order, y);
    rule.nodes[i] = y;
    rule.scaled_weights[i] = 1.0 / (k * phi[order - 1] * phi[order - 1]);
  }

  // Enforce the exact mirror symmetry of the rule.
  for (std::size_t i = 0, j = order - 1; i < j; ++i, --j) {
    const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    const double w = 0.5 * (rule.scaled_weights[i] + rule.scaled_weights[j]);
    rule.nodes[i] = -x;
    rule.nodes[j] = x;
    rule.scaled_weights[i] = rule.scaled_weights[j] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;

  for (std::size_t i = 0; i < order; ++i) {
    const double y = rule.nodes[i];
    rule.weights[i] = rule.scaled_weights[i] * std::exp(-y * y);
  }
  return rule;
}

double inner_product(const BasisSpec& spec, const RealFunction& f, const RealFunction& g,
                     const QuadratureRule& rule) {
  const double root = std::sqrt(spec.alpha());
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.order; ++i) {
    if (rule.scaled_weights[i] == 0.0) continue;
    const double x = rule.nodes[i] / root;
    const double fg = f(x) * g(x);
    if (!std::isfinite(fg)) {
      std::ostringstream os;
      os.precision(17);
      os << "inner_product: non-finite integrand at node " << i << " (x = " << x << ")";
      throw NumericalError(os.str());
    }
    sum += rule.scaled_weights[i] * fg;
  }
  return sum / root;
}

std::size_t minimum_oracle_order(std::size_t r, std::size_t s, std::size_t degree) {
  return (r + s + degree) / 2 + 2;
}

std::size_t default_oracle_order(std::size_t r, std::size_t s, std::size_t degree) {
  return r + s + degree + 4;
}

ElementPair element_oracle(const BasisSpec& spec, const PotentialSpec& pot, std::size_t r,
                           std::size_t s) {
  const auto order = std::min(default_oracle_order(r, s, pot.degree()), kMaxRuleOrder);
  return element_oracle(spec, pot, r, s, gauss_hermite_rule(order));
}

ElementPair element_oracle(const BasisSpec& spec, const PotentialSpec& pot, std::size_t r,
                           std::size_t s, const QuadratureRule& rule) {
  check_basis_index(r);
  check_basis_index(s);
  const auto needed = minimum_oracle_order(r, s, pot.degree());
  if (rule.order < needed)
    throw ValidationError("element_oracle: rule order " + std::to_string(rule.order) +
                          " cannot integrate element (" + std::to_string(r) + ", " +
                          std::to_string(s) + ") exactly; need >= " + std::to_string(needed));

  const double mass = spec.mass();
  const auto dr = [&](double x) { return basis_derivative(spec, r, x); };
  const auto ds = [&](double x) { return basis_derivative(spec, s, x); };
  const auto pr = [&](double x) { return basis_value(spec, r, x); };
  const auto vs = [&](double x) { return pot.value(x, mass) * basis_value(spec, s, x); };

  ElementPair out{};
  out.kinetic = spec.hbar() * spec.hbar() / (2.0 * mass) * inner_product(spec, dr, ds, rule);
  out.potential = inner_product(spec, pr, vs, rule);
  return out;
}

double kinetic_second_derivative_form(const BasisSpec& spec, std::size_t r, std::size_t s,
                                      const QuadratureRule& rule) {
  check_basis_index(r);
  check_basis_index(s);
  if (rule.order < minimum_oracle_order(r, s, 2))
    throw ValidationError("kinetic_second_derivative_form: rule order too low");
  const double a = spec.alpha();
  const auto pr = [&](double x) { return basis_value(spec, r, x); };
  const auto second = [&](double x) {
    return (a * a * x * x - a * (2.0 * s + 1.0)) * basis_value(spec, s, x);
  };
  return -spec.hbar() * spec.hbar() / (2.0 * spec.mass()) * inner_product(spec, pr, second, rule);
}

OracleComparison compare_with_oracle(const BasisSpec& spec, const PotentialSpec& pot,
                                     std::size_t dim, QuarticBand4 band4) {
  const auto t = kinetic_matrix(spec, dim);
  const auto v = potential_matrix(spec, pot, dim, band4);
  const auto h = t + v;

  const auto order =
      std::min(default_oracle_order(dim - 1, dim - 1, pot.degree()), kMaxRuleOrder);
  const auto rule = gauss_hermite_rule(order);

  OracleComparison cmp;
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t s = r; s < dim; ++s) {
      const auto e = element_oracle(spec, pot, r, s, rule);
      const double dt = std::abs(t.at(r, s) - e.kinetic);
      const double dv = std::abs(v.at(r, s) - e.potential);
      const double dh = std::abs(h.at(r, s) - (e.kinetic + e.potential));
      const double worst = std::max({dt, dv, dh});
      if (worst > cmp.max_discrepancy) {
        cmp.max_discrepancy = worst;
        cmp.worst_r = r;
        cmp.worst_s = s;
        cmp.analytic_value = h.at(r, s);
        cmp.oracle_value = e.kinetic + e.potential;
      }
    }
  }
  return cmp;
}

}  // namespace hritz

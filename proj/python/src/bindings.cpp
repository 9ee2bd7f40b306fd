#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

#include "hritz/basis.hpp"
#include "hritz/eigensolver.hpp"
#include "hritz/errors.hpp"
#include "hritz/numerov.hpp"
#include "hritz/operators.hpp"
#include "hritz/quadrature.hpp"
#include "hritz/spectral.hpp"
#include "hritz/variational.hpp"

namespace py = pybind11;
using namespace hritz;

namespace {

using Rows = std::vector<std::vector<double>>;

Rows to_rows(const DenseMatrix& m) {
  Rows out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i].assign(m.row(i).begin(), m.row(i).end());
  return out;
}

DenseMatrix from_rows(const Rows& rows) {
  DenseMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw ValidationError("matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

// Eigenvectors come back as columns of the result matrix; hand them out as a
// list of vectors so vectors[j] pairs with values[j].
py::dict spectrum_dict(const SymmetricEigenResult& r) {
  Rows vectors;
  for (std::size_t j = 0; j < r.size(); ++j) vectors.push_back(r.eigenvector(j));
  py::dict d;
  d["eigenvalues"] = r.eigenvalues;
  d["eigenvectors"] = vectors;
  d["residual_norm"] = r.residual_norm;
  return d;
}

QuarticBand4 band4_from(const std::string& s) {
  if (s == "corrected") return QuarticBand4::corrected;
  if (s == "printed") return QuarticBand4::printed;
  throw ValidationError("quartic_band4 must be 'corrected' or 'printed'");
}

ChannelParity parity_from(const std::string& s) {
  if (s == "even") return ChannelParity::even;
  if (s == "odd") return ChannelParity::odd;
  throw ValidationError("parity must be 'even' or 'odd'");
}

PhysicalConstants constants_of(double hbar, double mass) { return {hbar, mass}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hermite-function Ritz solver for 1D Schrodinger operators";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<RangeError>(m, "RangeError", PyExc_IndexError);
  py::register_exception<DegenerateInputError>(m, "DegenerateInputError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<BracketingError>(m, "BracketingError", PyExc_RuntimeError);

  py::class_<PotentialSpec>(m, "Potential")
      .def_static("harmonic", &PotentialSpec::harmonic, py::arg("omega"))
      .def_static("quartic", &PotentialSpec::quartic, py::arg("lam"))
      .def_static("even_polynomial", &PotentialSpec::even_polynomial, py::arg("coeffs"))
      .def_property_readonly("name", &PotentialSpec::name)
      .def("value", &PotentialSpec::value, py::arg("x"), py::arg("mass") = 1.0)
      .def("__repr__", [](const PotentialSpec& p) { return "<Potential " + p.name() + ">"; });

  m.def("hermite_eval", &hermite_eval, py::arg("s"), py::arg("y"));
  m.def(
      "basis_value",
      [](std::size_t r, double x, double alpha, double hbar, double mass) {
        return basis_value(BasisSpec(alpha, hbar, mass), r, x);
      },
      py::arg("r"), py::arg("x"), py::arg("alpha"), py::arg("hbar") = 1.0, py::arg("mass") = 1.0);
  m.def(
      "basis_derivative",
      [](std::size_t r, double x, double alpha, double hbar, double mass) {
        return basis_derivative(BasisSpec(alpha, hbar, mass), r, x);
      },
      py::arg("r"), py::arg("x"), py::arg("alpha"), py::arg("hbar") = 1.0, py::arg("mass") = 1.0);

  m.def(
      "hamiltonian_matrix",
      [](const PotentialSpec& pot, std::size_t dim, double alpha, double hbar, double mass,
         const std::string& band4) {
        return to_rows(
            hamiltonian_matrix(BasisSpec(alpha, hbar, mass), pot, dim, band4_from(band4))
                .to_dense());
      },
      py::arg("potential"), py::arg("dim"), py::arg("alpha"), py::arg("hbar") = 1.0,
      py::arg("mass") = 1.0, py::arg("quartic_band4") = "corrected");
  m.def(
      "kinetic_matrix",
      [](std::size_t dim, double alpha, double hbar, double mass) {
        return to_rows(kinetic_matrix(BasisSpec(alpha, hbar, mass), dim).to_dense());
      },
      py::arg("dim"), py::arg("alpha"), py::arg("hbar") = 1.0, py::arg("mass") = 1.0);
  m.def(
      "potential_matrix",
      [](const PotentialSpec& pot, std::size_t dim, double alpha, double hbar, double mass) {
        return to_rows(potential_matrix(BasisSpec(alpha, hbar, mass), pot, dim).to_dense());
      },
      py::arg("potential"), py::arg("dim"), py::arg("alpha"), py::arg("hbar") = 1.0,
      py::arg("mass") = 1.0);

  m.def(
      "eigh", [](const Rows& a) { return spectrum_dict(eigh(from_rows(a))); }, py::arg("matrix"));

  m.def(
      "gauss_hermite_rule",
      [](std::size_t order) {
        const auto rule = gauss_hermite_rule(order);
        return py::make_tuple(rule.nodes, rule.weights);
      },
      py::arg("order"));
  m.def(
      "element_oracle",
      [](const PotentialSpec& pot, std::size_t r, std::size_t s, double alpha, double hbar,
         double mass) {
        const auto e = element_oracle(BasisSpec(alpha, hbar, mass), pot, r, s);
        return py::make_tuple(e.kinetic, e.potential);
      },
      py::arg("potential"), py::arg("r"), py::arg("s"), py::arg("alpha"), py::arg("hbar") = 1.0,
      py::arg("mass") = 1.0);
  m.def(
      "compare_with_oracle",
      [](const PotentialSpec& pot, std::size_t dim, double alpha, double hbar, double mass,
         const std::string& band4) {
        const auto c =
            compare_with_oracle(BasisSpec(alpha, hbar, mass), pot, dim, band4_from(band4));
        py::dict d;
        d["max_discrepancy"] = c.max_discrepancy;
        d["worst"] = py::make_tuple(c.worst_r, c.worst_s);
        d["analytic_value"] = c.analytic_value;
        d["oracle_value"] = c.oracle_value;
        return d;
      },
      py::arg("potential"), py::arg("dim"), py::arg("alpha"), py::arg("hbar") = 1.0,
      py::arg("mass") = 1.0, py::arg("quartic_band4") = "corrected");

  m.def(
      "solve_hamiltonian",
      [](const PotentialSpec& pot, std::size_t dim, double alpha, double hbar, double mass) {
        return spectrum_dict(solve_hamiltonian(pot, constants_of(hbar, mass), alpha, dim));
      },
      py::arg("potential"), py::arg("dim"), py::arg("alpha"), py::arg("hbar") = 1.0,
      py::arg("mass") = 1.0);

  m.def(
      "scan_alpha",
      [](const PotentialSpec& pot, std::size_t dim, const std::vector<double>& alphas,
         double hbar, double mass) {
        const auto r = scan_alpha(pot, constants_of(hbar, mass), dim, alphas);
        py::dict d;
        d["alphas"] = r.alphas;
        d["energies"] = r.energies;
        d["argmin_alpha"] = r.argmin_alpha;
        return d;
      },
      py::arg("potential"), py::arg("dim"), py::arg("alphas"), py::arg("hbar") = 1.0,
      py::arg("mass") = 1.0);
  m.def(
      "minimize_alpha",
      [](const PotentialSpec& pot, std::size_t dim, double lo, double hi, double hbar,
         double mass, std::size_t lowest_sum) {
        AlphaObjective obj;
        if (lowest_sum > 0) {
          obj.kind = AlphaObjective::Kind::lowest_sum;
          obj.levels = lowest_sum;
        }
        const auto r = minimize_alpha(pot, constants_of(hbar, mass), dim, lo, hi, obj);
        py::dict d;
        d["alpha_star"] = r.alpha_star;
        d["energy"] = r.energy;
        d["objective"] = r.objective;
        d["boundary"] = r.boundary;
        d["evaluations"] = r.evaluations;
        return d;
      },
      py::arg("potential"), py::arg("dim"), py::arg("lo"), py::arg("hi"), py::arg("hbar") = 1.0,
      py::arg("mass") = 1.0, py::arg("lowest_sum") = 0,
      "Golden-section search for the basis scale. lowest_sum=k > 0 minimizes the sum of the k "
      "lowest levels instead of the ground level.");

  m.def(
      "check_mhu",
      [](const PotentialSpec& pot, double alpha, const std::vector<std::size_t>& dims,
         std::optional<std::vector<double>> exact, double hbar, double mass) {
        const auto table = convergence_table(pot, constants_of(hbar, mass), alpha, dims);
        std::optional<std::span<const double>> ex;
        if (exact) ex = std::span<const double>(*exact);
        const auto r = check_mhu(table, ex);
        py::list violations;
        for (const auto& v : r.violations) {
          py::dict e;
          e["check"] = to_string(v.check);
          e["level"] = v.level;
          e["dim"] = v.dim;
          e["reference"] = v.reference;
          e["slack"] = v.slack;
          violations.append(e);
        }
        py::dict d;
        d["pass"] = r.pass();
        d["monotonicity"] = r.monotonicity;
        d["interlacing"] = r.interlacing;
        d["upper_bound"] = r.upper_bound ? py::cast(*r.upper_bound) : py::none();
        d["comparisons"] = r.comparisons;
        d["violations"] = violations;
        d["spectra"] = table.spectra;
        return d;
      },
      py::arg("potential"), py::arg("alpha"), py::arg("dims"), py::arg("exact") = py::none(),
      py::arg("hbar") = 1.0, py::arg("mass") = 1.0);

  m.def(
      "count_nodes",
      [](const std::vector<double>& values, double floor) { return count_nodes(values, floor); },
      py::arg("values"), py::arg("amplitude_floor") = kDefaultAmplitudeFloor);

  m.def(
      "numerov_eigenvalue",
      [](const PotentialSpec& pot, double energy_lo, double energy_hi, const std::string& parity,
         std::size_t steps, double hbar, double mass) {
        const auto c = constants_of(hbar, mass);
        auto cfg = default_shooting_config(pot, c, energy_lo, energy_hi, parity_from(parity));
        cfg.steps = steps;
        const auto r = richardson_eigenvalue(pot, c, cfg);
        py::dict d;
        d["eigenvalue"] = r.extrapolated_finer;
        d["coarse"] = r.coarse;
        d["fine"] = r.fine;
        d["finer"] = r.finer;
        d["change"] = r.change();
        return d;
      },
      py::arg("potential"), py::arg("energy_lo"), py::arg("energy_hi"),
      py::arg("parity") = "even", py::arg("steps") = 20000, py::arg("hbar") = 1.0,
      py::arg("mass") = 1.0,
      "Shooting eigenvalue in [energy_lo, energy_hi] with Richardson extrapolation over "
      "steps, 2 steps and 4 steps.");
  m.def(
      "numerov_spectrum_below",
      [](const PotentialSpec& pot, double e_cap, std::size_t steps, double hbar, double mass) {
        ShootingConfig tmpl;
        tmpl.steps = steps;
        return spectrum_below(pot, constants_of(hbar, mass), tmpl, e_cap);
      },
      py::arg("potential"), py::arg("e_cap"), py::arg("steps") = 20000, py::arg("hbar") = 1.0,
      py::arg("mass") = 1.0);
}

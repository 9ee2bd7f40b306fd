#include "hritz/variational.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "hritz/errors.hpp"

namespace hritz {

double exact_diagonal_alpha(PhysicalConstants constants, double omega) {
  if (!(constants.hbar > 0.0) || !(constants.mass > 0.0) || !(omega > 0.0))
    throw ValidationError("exact_diagonal_alpha: hbar, mass and omega must be positive");
  return constants.mass * omega / constants.hbar;
}

Spectrum solve_hamiltonian(const PotentialSpec& pot, PhysicalConstants constants, double alpha,
                           std::size_t dim) {
  const BasisSpec spec(alpha, constants);
  return eigh(hamiltonian_matrix(spec, pot, dim));
}

namespace {

std::string alpha_label(double alpha) {
  std::ostringstream os;
  os.precision(17);
  os << alpha;
  return os.str();
}

std::vector<double> energies_at(const PotentialSpec& pot, PhysicalConstants constants,
                                double alpha, std::size_t dim) {
  try {
    return solve_hamiltonian(pot, constants, alpha, dim).eigenvalues;
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(std::string(e.what()) + " at alpha=" + alpha_label(alpha), e.dim());
  } catch (const NumericalError& e) {
    throw ConvergenceError(std::string(e.what()) + " at alpha=" + alpha_label(alpha), dim);
  }
}

double objective_value(const std::vector<double>& eps, const AlphaObjective& obj) {
  if (obj.kind == AlphaObjective::Kind::ground_state) return eps.front();
  const std::size_t k = std::min(std::max<std::size_t>(obj.levels, 1), eps.size());
  double s = 0.0;
  for (std::size_t i = 0; i < k; ++i) s += eps[i];
  return s;
}

// Three-way comparison: objective first, then eigenvalues in ascending order,
// each with a tolerance at the eigensolver's rounding level.
int compare_spectra(const std::vector<double>& a, const std::vector<double>& b,
                    const AlphaObjective& obj) {
  double scale = 1.0;
  for (double v : a) scale = std::max(scale, std::abs(v));
  for (double v : b) scale = std::max(scale, std::abs(v));
  const double tol = 64.0 * std::numeric_limits<double>::epsilon() * scale;

  auto three_way = [tol](double x, double y) { return x < y - tol ? -1 : (x > y + tol ? 1 : 0); };
  if (int c = three_way(objective_value(a, obj), objective_value(b, obj))) return c;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (int c = three_way(a[i], b[i])) return c;
  // Tied throughout: the raw objective is all that is left, noise included.
  const double oa = objective_value(a, obj), ob = objective_value(b, obj);
  return oa < ob ? -1 : (oa > ob ? 1 : 0);
}

}  // namespace

AlphaScanResult scan_alpha(const PotentialSpec& pot, PhysicalConstants constants, std::size_t dim,
                           std::span<const double> alphas) {
  if (alphas.empty()) throw ValidationError("scan_alpha: empty alpha grid");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] > 0.0) || !std::isfinite(alphas[i]))
      throw ValidationError("scan_alpha: alphas must be positive and finite");
    if (i > 0 && !(alphas[i] > alphas[i - 1]))
      throw ValidationError("scan_alpha: alphas must be strictly ascending");
  }
  // Validate the remaining inputs once, before spawning workers.
  (void)BasisSpec(alphas.front(), constants);
  if (dim == 0) throw ValidationError("scan_alpha: dim must be positive");

  AlphaScanResult out;
  out.alphas.assign(alphas.begin(), alphas.end());
  out.energies.resize(alphas.size());
  out.dim = dim;

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::size_t failed_at = alphas.size();
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < alphas.size(); i = next++) {
      try {
        out.energies[i] = energies_at(pot, constants, alphas[i], dim);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        // Report the first failing alpha in grid order.
        if (i < failed_at) {
          failed_at = i;
          failure = std::current_exception();
        }
      }
    }
  };
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, alphas.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  std::size_t best = 0;
  for (std::size_t i = 1; i < alphas.size(); ++i)
    if (out.energies[i].front() < out.energies[best].front()) best = i;
  out.argmin_alpha = out.alphas[best];
  return out;
}

AlphaMinimum minimize_alpha(const PotentialSpec& pot, PhysicalConstants constants,
                            std::size_t dim, double lo, double hi, AlphaObjective objective) {
  if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi))
    throw ValidationError("minimize_alpha: bracket must satisfy 0 < lo < hi");
  if (dim == 0) throw ValidationError("minimize_alpha: dim must be positive");

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  AlphaMinimum result;
  auto eval = [&](double alpha) {
    ++result.evaluations;
    return energies_at(pot, constants, alpha, dim);
  };

  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  auto fc = eval(c);
  auto fd = eval(d);
  for (int iter = 0; iter < 500; ++iter) {
    if (b - a <= 1e-10 * 0.5 * (a + b)) break;
    if (compare_spectra(fc, fd, objective) <= 0) {
      b = d;
      d = c;
      fd = std::move(fc);
      c = b - inv_phi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = std::move(fd);
      d = a + inv_phi * (b - a);
      fd = eval(d);
    }
  }

  result.alpha_star = 0.5 * (a + b);
  const auto eps = eval(result.alpha_star);
  result.energy = eps.front();
  result.objective = objective_value(eps, objective);
  result.boundary = a == lo || b == hi;
  return result;
}

ConvergenceTable convergence_table(const PotentialSpec& pot, PhysicalConstants constants,
                                   double alpha, std::span<const std::size_t> dims) {
  ConvergenceTable table{{}, {}, alpha, constants, pot};
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (dims[k] == 0 || (k > 0 && dims[k] <= dims[k - 1]))
      throw ValidationError("convergence_table: dims must be positive and strictly ascending");
  }
  if (dims.empty()) throw ValidationError("convergence_table: no dimensions given");
  for (std::size_t n : dims) {
    table.dims.push_back(n);
    table.spectra.push_back(energies_at(pot, constants, alpha, n));
  }
  return table;
}

}  // namespace hritz

#include "quadbez/roots.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "quadbez/errors.hpp"

namespace quadbez {

namespace {

std::vector<Complex> companion_eigenvalues(const Polynomial<Complex>& p) {
  const int n = p.degree();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  const Complex lead = p.leading();
  for (int k = 0; k < n - 1; ++k) m(k + 1, k) = 1.0;
  for (int k = 0; k < n; ++k) m(k, n - 1) = -p.coeff(k) / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("poly_roots: companion eigensolver did not converge");
  std::vector<Complex> roots(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) roots[static_cast<std::size_t>(k)] = solver.eigenvalues()(k);
  return roots;
}

// A couple of Newton steps sharpen the eigenvalue estimates; skipped near
// critical points where the correction is untrustworthy.
void polish(const Polynomial<Complex>& p, std::vector<Complex>* roots) {
  const Polynomial<Complex> dp = p.derivative();
  for (auto& r : *roots) {
    for (int it = 0; it < 3; ++it) {
      Complex dv = dp(r);
      if (std::abs(dv) < 1e-12) break;
      Complex step = p(r) / dv;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      if (std::abs(step) > 0.1 * (1.0 + std::abs(r))) break;
      r -= step;
    }
  }
}

}  // namespace

std::vector<Root> poly_roots(const Polynomial<Complex>& p,
                             const RootOptions& opt) {
  if (p.is_zero()) throw InvalidInput("poly_roots: zero polynomial");
  if (p.degree() == 0) return {};

  // Scale-invariant: normalize to unit max coefficient first.
  Polynomial<Complex> q = Complex(1.0 / p.max_coeff_abs(), 0.0) * p;

  std::vector<Complex> vals;
  if (q.degree() == 1) {
    vals = {-q.coeff(0) / q.coeff(1)};
  } else if (q.degree() == 2) {
    const Complex a = q.coeff(2), b = q.coeff(1), c = q.coeff(0);
    const Complex disc = std::sqrt(b * b - 4.0 * a * c);
    // Pick the sign that avoids cancellation in -b -+ disc.
    const Complex u = (std::real(std::conj(b) * disc) >= 0.0) ? -b - disc
                                                              : -b + disc;
    if (std::abs(u) == 0.0) {
      vals = {Complex(0, 0), Complex(0, 0)};
    } else {
      vals = {u / (2.0 * a), (2.0 * c) / u};
    }
  } else {
    vals = companion_eigenvalues(q);
    polish(q, &vals);
  }

  double max_mod = 0.0;
  for (const auto& v : vals) max_mod = std::max(max_mod, std::abs(v));
  const double radius = opt.cluster_tol * (1.0 + max_mod);

  std::sort(vals.begin(), vals.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  std::vector<Root> out;
  std::vector<bool> used(vals.size(), false);
  for (std::size_t k = 0; k < vals.size(); ++k) {
    if (used[k]) continue;
    Complex sum = vals[k];
    int count = 1;
    used[k] = true;
    for (std::size_t j = k + 1; j < vals.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(vals[j] - sum / static_cast<double>(count)) <= radius) {
        sum += vals[j];
        ++count;
        used[j] = true;
      }
    }
    out.push_back({sum / static_cast<double>(count), count});
  }

  // A multiplicity-m root is only located to eps^(1/m) by the eigenvalues,
  // but it is a simple root of the (m-1)-th derivative, where Newton
  // recovers it to full precision.
  for (auto& root : out) {
    if (root.multiplicity < 2) continue;
    Polynomial<Complex> d = q;
    for (int k = 1; k < root.multiplicity; ++k) d = d.derivative();
    const Polynomial<Complex> dd = d.derivative();
    for (int it = 0; it < 4; ++it) {
      Complex dv = dd(root.value);
      if (std::abs(dv) < 1e-14) break;
      Complex step = d(root.value) / dv;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      if (std::abs(step) > 2.0 * radius) break;
      root.value -= step;
    }
  }
  return out;
}

std::vector<Root> poly_roots(const Polynomial<GaussianRational>& p,
                             const RootOptions& opt) {
  std::vector<Complex> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(v.to_complex());
  return poly_roots(Polynomial<Complex>(std::move(c)), opt);
}

}  // namespace quadbez

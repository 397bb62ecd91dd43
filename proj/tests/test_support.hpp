#ifndef QUADBEZ_TEST_SUPPORT_HPP
#define QUADBEZ_TEST_SUPPORT_HPP

#include <complex>
#include <random>
#include <vector>

#include "quadbez/bezoutian.hpp"
#include "quadbez/polynomial.hpp"
#include "quadbez/ratfun.hpp"

namespace quadbez::testing {

inline Polynomial<Complex> poly_d(std::vector<Complex> c) {
  return Polynomial<Complex>(std::move(c));
}

inline Polynomial<GaussianRational> poly_x(std::vector<GaussianRational> c) {
  return Polynomial<GaussianRational>(std::move(c));
}

inline const Complex kI{0.0, 1.0};

// z^4 + 5z^3 - 2z^2 + 3z - 4, the running example polynomial.
inline Polynomial<Complex> example_quartic() {
  return poly_d({-4.0, 3.0, -2.0, 5.0, 1.0});
}

// Random real polynomial with integer coefficients in [-bound, bound] and
// exact degree `deg` (nonzero leading coefficient).
inline Polynomial<Complex> random_int_poly(std::mt19937_64& rng, int deg,
                                           int bound) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  std::vector<Complex> c(static_cast<std::size_t>(deg) + 1);
  for (int k = 0; k < deg; ++k) c[static_cast<std::size_t>(k)] = coeff(rng);
  int lead = 0;
  while (lead == 0) lead = coeff(rng);
  c.back() = lead;
  return Polynomial<Complex>(std::move(c));
}

// Random polynomial with Gaussian-integer coefficients.
inline Polynomial<Complex> random_gaussian_int_poly(std::mt19937_64& rng,
                                                    int deg, int bound) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  std::vector<Complex> c(static_cast<std::size_t>(deg) + 1);
  for (int k = 0; k <= deg; ++k)
    c[static_cast<std::size_t>(k)] = Complex(coeff(rng), coeff(rng));
  while (c.back() == Complex(0.0, 0.0))
    c.back() = Complex(coeff(rng), coeff(rng));
  return Polynomial<Complex>(std::move(c));
}

// Frobenius distance between matrices.
template <class T>
double mat_dist(const Matrix<T>& a, const Matrix<T>& b) {
  return (a - b).frobenius_norm();
}

inline bool poly_close(const Polynomial<Complex>& a, const Polynomial<Complex>& b,
                       double tol = 1e-9) {
  double scale = 1.0 + std::max(a.max_coeff_abs(), b.max_coeff_abs());
  int deg = std::max(a.degree(), b.degree());
  for (int k = 0; k <= deg; ++k)
    if (std::abs(a.coeff(k) - b.coeff(k)) > tol * scale) return false;
  return true;
}

// Evaluates the double sum of the Bezoutian defining property at (t, s).
inline Complex bezout_expansion(const SurfaceBezoutian<Complex>& sb,
                                const Complex& t, const Complex& s) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < sb.basis.size(); ++i)
    for (std::size_t j = 0; j < sb.basis.size(); ++j)
      acc += sb.b(i, j) * sb.basis.eval(i, t) * sb.basis.eval(j, s);
  return acc;
}

// Sample point away from every pole of the divisor.
inline Complex sample_point_away(std::mt19937_64& rng,
                                 const PoleDivisor<Complex>& d) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (;;) {
    Complex z(u(rng), u(rng));
    bool ok = true;
    for (const auto& e : d.entries())
      if (std::abs(z - e.pole) < 0.3) ok = false;
    if (ok) return z;
  }
}

}  // namespace quadbez::testing

#endif

#ifndef QUADBEZ_POLYNOMIAL_HPP
#define QUADBEZ_POLYNOMIAL_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quadbez/errors.hpp"
#include "quadbez/matrix.hpp"
#include "quadbez/scalar.hpp"

namespace quadbez {

// Dense univariate polynomial, coefficients stored low power to high.
// The zero polynomial has degree -1 and an empty coefficient vector.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(T v) { return Polynomial(std::vector<T>{std::move(v)}); }
  static Polynomial monomial(int power, T coeff = scalar_from_int<T>(1)) {
    std::vector<T> c(static_cast<std::size_t>(power) + 1, T{});
    c.back() = std::move(coeff);
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }

  T coeff(int k) const {
    if (k < 0 || k > degree()) return T{};
    return c_[static_cast<std::size_t>(k)];
  }
  const T& leading() const { return c_.back(); }

  T operator()(const T& z) const {
    T acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  // p^tau(z) = conj(p(conj z)): conjugate the coefficients.
  Polynomial tau() const {
    std::vector<T> c(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) c[k] = conj_of(c_[k]);
    return Polynomial(std::move(c));
  }

  Polynomial derivative() const {
    if (degree() < 1) return {};
    std::vector<T> c(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
      c[k - 1] = scalar_from_int<T>(static_cast<long>(k)) * c_[k];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T{});
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T{});
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
    return Polynomial(std::move(c));
  }

  Polynomial operator-() const {
    std::vector<T> c(c_);
    for (auto& v : c) v = -v;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T{});
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (exactly_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const T& s, const Polynomial& a) {
    std::vector<T> c(a.c_);
    for (auto& v : c) v = s * v;
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

  Polynomial monic() const {
    if (is_zero()) return {};
    T inv = scalar_from_int<T>(1) / leading();
    return inv * *this;
  }

  // Largest coefficient magnitude; 0 for the zero polynomial.
  double max_coeff_abs() const {
    double m = 0.0;
    for (const auto& v : c_) m = std::max(m, abs_of(v));
    return m;
  }

  // Drop trailing coefficients below rel_tol * max|coeff| (double-mode
  // degree detection after inexact arithmetic).
  Polynomial trimmed(double rel_tol) const {
    double thr = rel_tol * std::max(1e-300, max_coeff_abs());
    std::vector<T> c(c_);
    while (!c.empty() && abs_of(c.back()) <= thr) c.pop_back();
    return Polynomial(std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && exactly_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

// Quotient and remainder with lhs = q * rhs + r, deg r < deg rhs.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& lhs,
                                               const Polynomial<T>& rhs) {
  if (rhs.is_zero())
    throw std::domain_error("polynomial division by zero polynomial");
  if (lhs.degree() < rhs.degree()) return {{}, lhs};
  std::vector<T> rem(lhs.coeffs());
  std::vector<T> quot(static_cast<std::size_t>(lhs.degree() - rhs.degree()) + 1,
                      T{});
  const T inv_lead = scalar_from_int<T>(1) / rhs.leading();
  for (int k = lhs.degree() - rhs.degree(); k >= 0; --k) {
    T factor = rem[static_cast<std::size_t>(k + rhs.degree())] * inv_lead;
    quot[static_cast<std::size_t>(k)] = factor;
    if (exactly_zero(factor)) continue;
    for (int j = 0; j <= rhs.degree(); ++j)
      rem[static_cast<std::size_t>(k + j)] -= factor * rhs.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(std::max(rhs.degree(), 0)));
  return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

// Coefficients of P(a + w) in powers of w (Taylor shift by repeated
// synthetic division; exact in exact mode).
template <class T>
std::vector<T> taylor_shift(const Polynomial<T>& p, const T& a) {
  std::vector<T> work(p.coeffs());
  std::size_t n = work.size();
  std::vector<T> out(n, T{});
  for (std::size_t k = 0; k < n; ++k) {
    // One synthetic division of `work` by (t - a): remainder -> out[k].
    for (std::size_t j = n - 1; j-- > k;) work[j] += a * work[j + 1];
    out[k] = work[k];
  }
  return out;
}

// Classical Bezout matrix: the unique N x N matrix C with
//   (P1(t) P2(s) - P1(s) P2(t)) / (t - s) = sum C[i][j] t^i s^j.
// Requires deg P1 <= N and deg P2 <= N. Uses the two-index recurrence
//   C[u-1][v] = d[u][v] + C[u][v-1],  d[u][v] = a_u b_v - a_v b_u.
template <class T>
Matrix<T> classical_bezout(const Polynomial<T>& p1, const Polynomial<T>& p2,
                           int n) {
  if (n < 0 || p1.degree() > n || p2.degree() > n)
    throw InvalidInput("classical_bezout: order smaller than a degree");
  const std::size_t un = static_cast<std::size_t>(n);
  Matrix<T> c(un, un);
  if (n == 0) return c;
  for (int v = 0; v < n; ++v)
    for (int u = n; u >= 1; --u) {
      T d = p1.coeff(u) * p2.coeff(v) - p1.coeff(v) * p2.coeff(u);
      if (v > 0 && u < n) d += c(static_cast<std::size_t>(u),
                                 static_cast<std::size_t>(v - 1));
      c(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v)) = d;
    }
  return c;
}

// Exact Euclidean GCD, monic result. Exact mode only.
inline Polynomial<GaussianRational> gcd_exact(Polynomial<GaussianRational> a,
                                              Polynomial<GaussianRational> b) {
  if (a.is_zero() && b.is_zero())
    throw InvalidInput("gcd of two zero polynomials");
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    (void)q;
    a = std::move(b);
    b = r.is_zero() ? Polynomial<GaussianRational>{} : r.monic();
  }
  return a.monic();
}

// Approximate GCD via a normalized Euclidean remainder sequence. Operands
// are kept at unit max coefficient; a remainder whose coefficients all fall
// below rel_tol at that scale is declared zero, so planted common factors
// survive rounding without noise being amplified back to full scale.
inline Polynomial<Complex> gcd_approx(Polynomial<Complex> a,
                                      Polynomial<Complex> b, double rel_tol) {
  if (a.is_zero() && b.is_zero())
    throw InvalidInput("gcd of two zero polynomials");
  auto normalize = [&](const Polynomial<Complex>& p) -> Polynomial<Complex> {
    if (p.is_zero()) return {};
    double m = p.max_coeff_abs();
    return (Complex(1.0 / m, 0.0) * p).trimmed(rel_tol);
  };
  a = normalize(a);
  b = normalize(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    (void)q;
    a = std::move(b);
    // At unit operand scale, a remainder this small is a true zero.
    b = (r.max_coeff_abs() <= rel_tol) ? Polynomial<Complex>{} : normalize(r);
  }
  return a.monic();
}

template <class T>
struct ExtendedGcd {
  Polynomial<T> gcd;
  int common_degree = 0;  // deg gcd + shared zeros at infinity
};

// GCD of P1 and P2 regarded as numerators of degree-N functions: shared
// zeros at infinity (simultaneous degree deficiency relative to N) count
// toward the common degree.
template <class T>
ExtendedGcd<T> poly_gcd_extended(const Polynomial<T>& p1,
                                 const Polynomial<T>& p2, int n,
                                 double tol = 1e-8) {
  if (p1.is_zero() && p2.is_zero())
    throw InvalidInput("poly_gcd_extended: both inputs zero");
  if (n < std::max(p1.degree(), p2.degree()))
    throw InvalidInput("poly_gcd_extended: N below a degree");
  Polynomial<T> g;
  if (p1.is_zero() || p2.is_zero()) {
    g = (p1.is_zero() ? p2 : p1).monic();
  } else if constexpr (scalar_traits<T>::exact) {
    g = gcd_exact(p1, p2);
    (void)tol;
  } else {
    g = gcd_approx(p1, p2, tol);
  }
  int at_infinity = std::min(n - p1.degree(), n - p2.degree());
  if (p1.is_zero() || p2.is_zero())
    at_infinity = n - std::max(p1.degree(), p2.degree());
  return {g, g.degree() + at_infinity};
}

}  // namespace quadbez

#endif

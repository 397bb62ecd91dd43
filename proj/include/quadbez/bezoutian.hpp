#ifndef QUADBEZ_BEZOUTIAN_HPP
#define QUADBEZ_BEZOUTIAN_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadbez/pole_basis.hpp"

namespace quadbez {

struct Inertia {
  int n_plus = 0;
  int n_minus = 0;
  int n_zero = 0;
  int signature() const { return n_plus - n_minus; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Inertia of a Hermitian matrix of exact scalars by congruence
// diagonalization (Sylvester's law of inertia). Diagonal pivots contribute
// their sign; when the trailing diagonal is entirely zero, a 2x2
// anti-diagonal pivot [[0,e],[conj e,0]] contributes one plus and one minus.
Inertia matrix_inertia(Matrix<GaussianRational> h);

struct InertiaResult {
  Inertia inertia;
  bool ambiguous = false;              // eigenvalues too close to the cut
  std::vector<double> offending;       // |lambda| within a decade of it
  std::vector<double> eigenvalues;
};

// Double mode: Hermitian eigenvalues with |lambda| <= rank_tol * max(1, ||H||_F)
// counted as zero, computed after an inertia-preserving diagonal balancing.
// Eigenvalues inside the guard band around the cut are refined recursively
// at their own scale; what bottoms out near the double-precision noise
// floor without resolving is flagged ambiguous (`strict` turns the flag
// into a NumericalFailure). `eigenvalues` holds the balanced top-level
// spectrum.
InertiaResult matrix_inertia(const Matrix<Complex>& h, double rank_tol,
                             bool strict = true);

// Raw Hermitian eigenvalues (no balancing), ascending.
std::vector<double> hermitian_eigenvalues(const Matrix<Complex>& h);

// ---------------------------------------------------------------------------

template <class T>
struct SurfaceBezoutian {
  Matrix<T> b;
  OrderedPoleBasis<T> basis;
};

// The genus-0 surface Bezoutian of f and g over the real divisor D:
// the matrix B, indexed by the ordered pole basis, with
//   (f(t)g(s) - f(s)g(t)) / (t - s)
//     = sum B[(a,k),(a',k')] (t-a)^-(k+1) (s-a')^-(k'+1).
// Computed as M^T C M where C is the classical Bezout matrix of the
// numerators over the common denominator of D and M the partial-fraction
// change of basis.
template <class T>
SurfaceBezoutian<T> surface_bezoutian(const RationalFunction<T>& f,
                                      const RationalFunction<T>& g,
                                      const PoleDivisor<T>& d,
                                      double tol = 1e-8) {
  auto basis = OrderedPoleBasis<T>::build(d);
  const int n = d.degree();

  auto cd = to_common_denominator(f, g, tol);
  Polynomial<T> p1 = std::move(cd.p1);
  Polynomial<T> p2 = std::move(cd.p2);
  Polynomial<T> qd = d.to_polynomial();

  if (!(cd.q == qd)) {
    // D may be larger than the joint pole divisor; pad with the missing
    // factor (the Bezoutian then simply carries zero rows and columns).
    auto [extra, rem] = divmod(qd, cd.q);
    double scale = std::max(1.0, qd.max_coeff_abs());
    if (rem.max_coeff_abs() > 1e-6 * scale)
      throw InvalidInput("surface bezoutian: divisor below the pole divisor");
    p1 = p1 * extra;
    p2 = p2 * extra;
  }
  if (p1.degree() > n || p2.degree() > n)
    throw InvalidInput("surface bezoutian: numerator degree overflow");

  Matrix<T> c = classical_bezout(p1, p2, n);
  Matrix<T> m = partial_fraction_matrix(qd, basis);
  Matrix<T> b = m.transpose() * c * m;
  return {std::move(b), std::move(basis)};
}

// ---------------------------------------------------------------------------

struct FormOptions {
  double rank_tol = 1e-9;
  // Reject H when ||H - H*||_F exceeds this times (1 + ||H||_F); catches
  // convention and conditioning bugs early. Exact mode requires equality.
  double hermitian_tol = 1e-8;
  bool strict_rank = true;
};

template <class T>
struct HermitianForm {
  Matrix<T> h;
  OrderedPoleBasis<T> basis;
  Inertia inertia;
  double rank_tol = 1e-9;
  bool ambiguous = false;
  std::vector<double> offending_eigenvalues;
  double hermitian_residual = 0.0;

  std::string mode() const { return scalar_traits<T>::mode_name(); }
};

namespace detail {

inline void finish_inertia(HermitianForm<Complex>* form, const FormOptions& opt) {
  auto res = matrix_inertia(form->h, opt.rank_tol, opt.strict_rank);
  form->inertia = res.inertia;
  form->ambiguous = res.ambiguous;
  form->offending_eigenvalues = std::move(res.offending);
}

inline void finish_inertia(HermitianForm<GaussianRational>* form,
                           const FormOptions&) {
  form->inertia = matrix_inertia(form->h);
}

}  // namespace detail

// The Hermitian form H = (1/2i) J B carrying the zero counts for f = p(phi).
//
// The tau-pairing orders the Bezoutian as B(f^tau, f): with the fully
// bilinear B above this equals 2i B(f_r, f_i), so H = J B(f_r, f_i) is the
// matrix whose negative eigenvalues count zeros. (The opposite order flips
// every sign and with it the counts.)
template <class T>
HermitianForm<T> hermitian_form(
    const Polynomial<T>& p, const RationalFunction<T>& phi,
    const std::vector<std::pair<T, int>>* phi_poles = nullptr,
    const FormOptions& opt = {}) {
  if (p.is_zero() || p.degree() < 1)
    throw InvalidInput("hermitian form: polynomial must have degree >= 1");
  const int n = p.degree();

  RationalFunction<T> f = compose_poly_ratfun(p, phi);
  RationalFunction<T> ftau = f.tau();

  // Divisor n * (D_phi + D_phi^tau). Poles of phi must be strictly below
  // the real axis, so the pairing is between the two factors.
  DivisorOptions dopt;
  dopt.require_closed = false;
  PoleDivisor<T> dphi = pole_divisor(phi.den(), dopt, phi_poles);
  for (const auto& e : dphi.entries())
    if (e.cls != PoleClass::pair_lower)
      throw InvalidInput("hermitian form: map poles must lie strictly in the "
                         "lower half-plane");
  PoleDivisor<T> d = dphi.closure().scaled(n);

  auto sb = surface_bezoutian(ftau, f, d);
  Matrix<T> h = half_over_i<T>() * sb.basis.j_apply(sb.b);

  HermitianForm<T> form;
  form.rank_tol = opt.rank_tol;
  form.hermitian_residual = (h - h.conj_transpose()).frobenius_norm();
  double bound = opt.hermitian_tol * (1.0 + h.frobenius_norm());
  if constexpr (scalar_traits<T>::exact) {
    if (form.hermitian_residual != 0.0)
      throw NumericalFailure("hermitian form: H != H* in exact mode");
  } else if (form.hermitian_residual > bound) {
    throw NumericalFailure("hermitian form: Hermitian residual " +
                           std::to_string(form.hermitian_residual) +
                           " exceeds bound");
  }
  form.h = std::move(h);
  form.basis = std::move(sb.basis);
  detail::finish_inertia(&form, opt);
  return form;
}

}  // namespace quadbez

#endif

#ifndef QUADBEZ_COUNTING_HPP
#define QUADBEZ_COUNTING_HPP

#include <optional>
#include <string>

#include "quadbez/bezoutian.hpp"

namespace quadbez {

// Per-polynomial result of the Bezoutian zero count.
struct ZeroCountReport {
  int common_zero_degree = 0;        // n_0: zeros shared by p(phi) and its tau
  int interior_additional = 0;       // n_minus - n * deg(phi)
  std::optional<int> interior_total_if_no_boundary;  // -signature/2 when n_0 = 0
  bool boundary_suspected = false;
  bool ambiguous_rank = false;
  int n = 0;                         // deg p
  int map_degree = 0;                // deg phi
  Inertia inertia;
  std::string mode = "double";
  double rank_tol = 1e-9;
  std::string provenance;            // gallery name or "user map"
  std::string rule = "quadrature-domain";
};

// Zero count of p on the quadrature domain given by phi (poles strictly in
// the lower half-plane): the inertia of the Hermitian form read through the
// counting rule interior = n_minus - n * deg(phi).
template <class T>
ZeroCountReport count_zeros_in_domain(
    const Polynomial<T>& p, const RationalFunction<T>& phi,
    const std::vector<std::pair<T, int>>* phi_poles = nullptr,
    const FormOptions& opt_in = {}) {
  ZeroCountReport rep;
  rep.mode = scalar_traits<T>::mode_name();
  rep.rank_tol = opt_in.rank_tol;
  rep.map_degree = phi.map_degree();
  if (p.is_zero()) throw InvalidInput("count: zero polynomial");
  rep.n = p.degree();
  if (rep.n == 0) return rep;  // constant: nothing to count

  FormOptions opt = opt_in;
  opt.strict_rank = false;  // ambiguity is reported, not thrown
  auto form = hermitian_form(p, phi, phi_poles, opt);

  rep.inertia = form.inertia;
  rep.ambiguous_rank = form.ambiguous;
  rep.common_zero_degree = form.inertia.n_zero;
  rep.interior_additional = form.inertia.n_minus - rep.n * rep.map_degree;
  if (rep.common_zero_degree == 0 && !rep.ambiguous_rank)
    rep.interior_total_if_no_boundary = -form.inertia.signature() / 2;
  rep.boundary_suspected = rep.common_zero_degree > 0 || rep.ambiguous_rank;
  if (rep.interior_additional < 0 && !rep.ambiguous_rank)
    throw NumericalFailure("count: negative interior count, inertia (" +
                           std::to_string(rep.inertia.n_plus) + "," +
                           std::to_string(rep.inertia.n_minus) + "," +
                           std::to_string(rep.inertia.n_zero) + ")");
  return rep;
}

struct HalfPlaneCount {
  int upper = 0;
  int lower = 0;
  int common = 0;  // roots shared by p and p^tau
};

// Classical half-plane root count: inertia of -i B(p, p^tau) with the
// classical Bezout matrix of order deg p.
template <class T>
HalfPlaneCount hermite_half_plane_count(const Polynomial<T>& p,
                                        double rank_tol = 1e-9) {
  if (p.degree() < 1)
    throw InvalidInput("hermite count: polynomial must have degree >= 1");
  const int n = p.degree();
  Matrix<T> b = classical_bezout(p, p.tau(), n);
  Matrix<T> h = (-scalar_i<T>()) * b;
  Inertia in;
  if constexpr (scalar_traits<T>::exact) {
    in = matrix_inertia(h);
  } else {
    in = matrix_inertia(h, rank_tol).inertia;
  }
  return {in.n_plus, in.n_minus, in.n_zero};
}

// Pole configurations the half-plane corollaries cover.
enum class CorollaryRule { real_poles, lower_poles };

struct CorollaryReport {
  CorollaryRule rule = CorollaryRule::lower_poles;
  Inertia inertia;                   // of J B(f_r, f_i)
  int deg_f = 0;
  int upper_unpaired = 0;            // a_+ + b_+
  std::optional<int> upper_total;    // present when f has no real zeros
  bool real_zeros_flagged = false;
};

// Dispatches to the half-plane counting rule matching the pole
// configuration of f: all poles real, or no poles in the closed upper
// half-plane. Mixed configurations are rejected.
template <class T>
CorollaryReport count_by_corollary(const RationalFunction<T>& f,
                                   double tol = 1e-9,
                                   const std::vector<std::pair<T, int>>* poles = nullptr) {
  if (f.num().degree() < 1 && f.den().degree() < 1)
    throw InvalidInput("corollary count: constant function");
  if (f.num().degree() > f.den().degree())
    throw InvalidInput(
        "pole at infinity: apply a real Moebius change of variable first");

  DivisorOptions dopt;
  dopt.class_tol = tol;
  dopt.require_closed = false;
  PoleDivisor<T> dpoles = pole_divisor(f.den(), dopt, poles);

  bool all_real = true, all_lower = true;
  for (const auto& e : dpoles.entries()) {
    if (e.cls != PoleClass::real) all_real = false;
    if (e.cls != PoleClass::pair_lower) all_lower = false;
  }
  if (!all_real && !all_lower)
    throw InvalidInput("corollary count: mixed pole configuration");

  CorollaryReport rep;
  rep.rule = all_real ? CorollaryRule::real_poles : CorollaryRule::lower_poles;
  rep.deg_f = f.map_degree();

  // f_r and f_i over the explicit common denominator of f and f^tau; any
  // cancellation just pads the Bezoutian with zero rows.
  RationalFunction<T> ftau = f.tau();
  auto cd = to_common_denominator(f, ftau);
  const T half = scalar_from_int<T>(1) / scalar_from_int<T>(2);
  RationalFunction<T> fr(half * (cd.p1 + cd.p2), cd.q, /*reduce_pair=*/false);
  RationalFunction<T> fi((half / scalar_i<T>()) * (cd.p1 - cd.p2), cd.q,
                         /*reduce_pair=*/false);
  PoleDivisor<T> df = dpoles.closure();

  auto sb = surface_bezoutian(fr, fi, df);
  Matrix<T> jb = sb.basis.j_apply(sb.b);
  if constexpr (scalar_traits<T>::exact) {
    rep.inertia = matrix_inertia(jb);
  } else {
    rep.inertia = matrix_inertia(jb, tol).inertia;
  }

  // Real zeros (including a zero at infinity) withhold the refined total.
  bool real_zero = f.num().degree() < f.den().degree();
  for (const auto& r : poly_roots(f.num()))
    if (std::abs(r.value.imag()) <= 1e-7 * (1.0 + std::abs(r.value)))
      real_zero = true;
  rep.real_zeros_flagged = real_zero;

  const int nu = rep.inertia.n_minus;
  if (rep.rule == CorollaryRule::real_poles) {
    rep.upper_unpaired = nu;
    if (!real_zero) rep.upper_total = nu + rep.inertia.n_zero / 2;
  } else {
    rep.upper_unpaired = nu - rep.deg_f;
    if (!real_zero) rep.upper_total = -rep.inertia.signature() / 2;
  }
  return rep;
}

}  // namespace quadbez

#endif

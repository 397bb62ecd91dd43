#include "quadbez/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "quadbez/errors.hpp"

namespace quadbez {

namespace {

double imag_tol(double tol, const Complex& z) {
  return tol * (1.0 + std::abs(z));
}

// Real-coefficient copy of a polynomial that must be real; rejects inputs
// with a genuinely complex coefficient.
Polynomial<Complex> require_real(const Polynomial<Complex>& p,
                                 const char* what) {
  double scale = std::max(1.0, p.max_coeff_abs());
  std::vector<Complex> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) {
    if (std::abs(v.imag()) > 1e-8 * scale)
      throw InvalidInput(std::string(what) + ": function is not real");
    c.emplace_back(v.real(), 0.0);
  }
  return Polynomial<Complex>(std::move(c));
}

}  // namespace

int cauchy_index(const RationalFunction<Complex>& h, const CauchyOptions& opt) {
  Polynomial<Complex> num = require_real(h.num(), "cauchy index");
  Polynomial<Complex> den = require_real(h.den(), "cauchy index");
  if (num.is_zero()) return 0;

  // W = num' den - num den' carries both ramification data and sign(h').
  Polynomial<Complex> w = num.derivative() * den - num * den.derivative();

  // Sampling range: one unit beyond the largest finite real critical value.
  double radius = 1.0;
  if (!w.is_zero() && w.degree() >= 1) {
    for (const auto& r : poly_roots(w)) {
      if (std::abs(r.value.imag()) > imag_tol(1e-7, r.value)) continue;
      Complex x(r.value.real(), 0.0);
      Complex dv = den(x);
      if (std::abs(dv) < 1e-12) continue;
      double cv = std::abs((num(x) / dv).real());
      if (std::isfinite(cv)) radius = std::max(radius, 1.0 + cv);
    }
  }
  if (num.degree() == den.degree())
    radius = std::max(radius,
                      1.0 + std::abs((num.leading() / den.leading()).real()));

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> dist(-radius, radius);

  const int map_deg = h.map_degree();
  std::map<int, int> votes;
  int successes = 0;
  for (int attempt = 0; attempt < 40 * opt.trials && successes < opt.trials;
       ++attempt) {
    double lambda = dist(rng);
    Polynomial<Complex> g = num - Complex(lambda, 0.0) * den;
    if (g.is_zero() || g.degree() < map_deg) continue;  // mass at infinity
    bool degenerate = false;
    int index = 0;
    for (const auto& r : poly_roots(g)) {
      if (std::abs(r.value.imag()) > imag_tol(1e-7, r.value)) continue;
      Complex x(r.value.real(), 0.0);
      if (r.multiplicity > 1 || std::abs(den(x)) < 1e-10) {
        degenerate = true;
        break;
      }
      double slope = w(x).real();
      if (std::abs(slope) < 1e-10 * (1.0 + std::abs(w(x)))) {
        degenerate = true;
        break;
      }
      index += slope > 0.0 ? 1 : -1;
    }
    if (degenerate) continue;
    ++votes[index];
    ++successes;
  }
  if (successes == 0)
    throw NumericalFailure("cauchy index: all sampled values were degenerate");
  return std::max_element(votes.begin(), votes.end(),
                          [](const auto& a, const auto& b) {
                            return a.second < b.second;
                          })
      ->first;
}

FiberReport fiber_imbalance(const RationalFunction<Complex>& h, Complex lambda,
                            double tol) {
  if (lambda.imag() <= 0.0)
    throw InvalidInput("fiber imbalance: lambda must be in the upper half-plane");
  if (h.map_degree() < 1)
    throw InvalidInput("fiber imbalance: constant function");

  Polynomial<Complex> g = h.num() - lambda * h.den();
  const int map_deg = h.map_degree();
  if (g.is_zero() || g.degree() < map_deg)
    throw NumericalFailure(
        "fiber imbalance: fiber mass at infinity (lambda not generic)");

  FiberReport rep;
  rep.lambda = lambda;
  for (const auto& r : poly_roots(g)) {
    FiberPoint pt{r.value, r.multiplicity, HalfPlane::real};
    if (std::abs(r.value.imag()) <= imag_tol(tol, r.value))
      throw NumericalFailure(
          "fiber imbalance: fiber point on the real axis (lambda not "
          "generic)");
    pt.location = r.value.imag() > 0.0 ? HalfPlane::upper : HalfPlane::lower;
    rep.imbalance += pt.location == HalfPlane::upper ? r.multiplicity
                                                     : -r.multiplicity;
    rep.preimages.push_back(pt);
  }
  return rep;
}

std::vector<RootLocation> classify_roots(const Polynomial<Complex>& p,
                                         const RationalFunction<Complex>& phi,
                                         double boundary_tol) {
  if (p.is_zero()) throw InvalidInput("membership: zero polynomial");
  if (phi.map_degree() < 1) throw InvalidInput("membership: constant map");

  std::vector<RootLocation> out;
  for (const auto& root : poly_roots(p)) {
    const Complex w = root.value;
    Polynomial<Complex> g = phi.num() - w * phi.den();
    RootLocation loc{w, root.multiplicity, HalfPlane::lower};
    if (g.is_zero() || g.degree() < phi.map_degree()) {
      // Part of the fiber escaped to infinity, a real point of the sphere:
      // w is the boundary value phi(infinity).
      loc.cls = HalfPlane::real;
      out.push_back(loc);
      continue;
    }
    bool has_upper = false;
    double min_abs_im = std::numeric_limits<double>::infinity();
    for (const auto& pre : poly_roots(g)) {
      if (pre.value.imag() > imag_tol(boundary_tol, pre.value)) has_upper = true;
      min_abs_im = std::min(
          min_abs_im, std::abs(pre.value.imag()) / (1.0 + std::abs(pre.value)));
    }
    if (has_upper)
      loc.cls = HalfPlane::upper;
    else if (min_abs_im <= boundary_tol)
      loc.cls = HalfPlane::real;
    else
      loc.cls = HalfPlane::lower;
    out.push_back(loc);
  }
  return out;
}

MembershipCount membership_count(const Polynomial<Complex>& p,
                                 const RationalFunction<Complex>& phi,
                                 double boundary_tol) {
  MembershipCount mc;
  for (const auto& loc : classify_roots(p, phi, boundary_tol)) {
    switch (loc.cls) {
      case HalfPlane::upper: mc.inside += loc.multiplicity; break;
      case HalfPlane::real: mc.boundary += loc.multiplicity; break;
      case HalfPlane::lower: mc.outside += loc.multiplicity; break;
    }
  }
  return mc;
}

DividingReport dividing_check(const RationalFunction<Complex>& f,
                              const RationalFunction<Complex>& g,
                              double tol) {
  require_real(f.num(), "dividing check");
  require_real(f.den(), "dividing check");
  require_real(g.num(), "dividing check");
  require_real(g.den(), "dividing check");

  auto cd = to_common_denominator(f, g);
  DivisorOptions dopt;
  dopt.require_closed = true;
  PoleDivisor<Complex> d = pole_divisor(cd.q, dopt).closure();

  auto sb = surface_bezoutian(f, g, d);
  Matrix<Complex> jb = sb.basis.j_apply(sb.b);

  DividingReport rep;
  rep.inertia = matrix_inertia(jb, tol, /*strict=*/false).inertia;
  rep.rank = rep.inertia.n_plus + rep.inertia.n_minus;
  if (rep.rank == 0)
    rep.classification = DefiniteClass::zero;
  else if (rep.inertia.n_minus == 0)
    rep.classification = DefiniteClass::positive_semidefinite;
  else if (rep.inertia.n_plus == 0)
    rep.classification = DefiniteClass::negative_semidefinite;
  else
    rep.classification = DefiniteClass::indefinite;
  return rep;
}

}  // namespace quadbez

#ifndef QUADBEZ_ORACLES_HPP
#define QUADBEZ_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "quadbez/bezoutian.hpp"
#include "quadbez/ratfun.hpp"
#include "quadbez/roots.hpp"

namespace quadbez {

enum class HalfPlane { upper, lower, real };

inline const char* half_plane_name(HalfPlane h) {
  switch (h) {
    case HalfPlane::upper: return "upper";
    case HalfPlane::lower: return "lower";
    case HalfPlane::real: return "real";
  }
  return "?";
}

struct FiberPoint {
  Complex point;
  int multiplicity = 1;
  HalfPlane location = HalfPlane::real;
};

struct FiberReport {
  Complex lambda;
  std::vector<FiberPoint> preimages;
  int imbalance = 0;  // upper mass minus lower mass
};

struct CauchyOptions {
  int trials = 7;
  double tol = 1e-9;
  std::uint64_t seed = 0x5eed;
};

// Total winding number of the real rational function h over the completed
// real line, computed as a regular-value crossing count: solve the real
// fiber over a random regular lambda and sum the signs of h' there.
// Degenerate draws (ramified fiber, fiber mass at infinity, preimage at a
// pole) are redrawn; the majority over `trials` successful draws wins.
int cauchy_index(const RationalFunction<Complex>& h,
                 const CauchyOptions& opt = {});

// Fiber of h over lambda in the open upper half-plane, classified by half
// plane, with the argument-principle imbalance. Errors when a fiber point
// falls on the real axis within tolerance (lambda not generic) or when
// fiber mass escapes to infinity.
FiberReport fiber_imbalance(const RationalFunction<Complex>& h, Complex lambda,
                            double tol = 1e-9);

struct MembershipCount {
  int inside = 0;
  int boundary = 0;
  int outside = 0;
};

struct RootLocation {
  Complex root;
  int multiplicity = 1;
  HalfPlane cls = HalfPlane::real;  // upper = inside U, real = boundary
};

// Ground-truth membership: for every root w of p, solve phi(t) = w and
// classify w by the preimage half-planes. `boundary_tol` is deliberately
// looser than the rank tolerance so the two boundary detectors can be
// compared.
std::vector<RootLocation> classify_roots(const Polynomial<Complex>& p,
                                         const RationalFunction<Complex>& phi,
                                         double boundary_tol = 1e-7);

MembershipCount membership_count(const Polynomial<Complex>& p,
                                 const RationalFunction<Complex>& phi,
                                 double boundary_tol = 1e-7);

enum class DefiniteClass {
  positive_semidefinite,
  negative_semidefinite,
  indefinite,
  zero,  // degenerate: the zero matrix
};

inline const char* definite_class_name(DefiniteClass c) {
  switch (c) {
    case DefiniteClass::positive_semidefinite: return "positive-semidefinite";
    case DefiniteClass::negative_semidefinite: return "negative-semidefinite";
    case DefiniteClass::indefinite: return "indefinite";
    case DefiniteClass::zero: return "zero";
  }
  return "?";
}

struct DividingReport {
  DefiniteClass classification = DefiniteClass::indefinite;
  Inertia inertia;
  int rank = 0;
};

// Semidefiniteness of J B(f,g) over the join of the pole divisors;
// semidefinite of rank deg(f/g) is equivalent to f/g being a dividing
// function.
DividingReport dividing_check(const RationalFunction<Complex>& f,
                              const RationalFunction<Complex>& g,
                              double tol = 1e-9);

}  // namespace quadbez

#endif

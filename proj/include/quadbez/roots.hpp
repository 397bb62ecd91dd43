#ifndef QUADBEZ_ROOTS_HPP
#define QUADBEZ_ROOTS_HPP

#include <vector>

#include "quadbez/polynomial.hpp"
#include "quadbez/scalar.hpp"

namespace quadbez {

struct Root {
  Complex value;
  int multiplicity = 1;
};

struct RootOptions {
  // Roots closer than cluster_tol * (1 + max|root|) are merged into one
  // root with summed multiplicity.
  double cluster_tol = 1e-6;
};

// All complex roots of p with multiplicities (sum equals deg p).
// Companion-matrix eigenvalues followed by Newton polish and clustering.
std::vector<Root> poly_roots(const Polynomial<Complex>& p,
                             const RootOptions& opt = {});

// Exact mode delegates to the double path.
std::vector<Root> poly_roots(const Polynomial<GaussianRational>& p,
                             const RootOptions& opt = {});

}  // namespace quadbez

#endif

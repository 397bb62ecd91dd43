#ifndef QUADBEZ_SVG_HPP
#define QUADBEZ_SVG_HPP

#include <string>
#include <vector>

#include "quadbez/oracles.hpp"
#include "quadbez/ratfun.hpp"

namespace quadbez {

// Boundary of the quadrature domain as phi(tan theta) on a uniform grid in
// (-pi/2, pi/2), plus the limit point phi(infinity) closing the curve.
std::vector<Complex> sample_boundary(const RationalFunction<Complex>& phi,
                                     int samples = 4096);

// Standalone SVG document: boundary polyline plus root markers colored by
// membership (inside red, boundary orange, outside blue). Deterministic for
// fixed inputs.
std::string render_domain_svg(const std::vector<Complex>& boundary,
                              const std::vector<RootLocation>& roots);

}  // namespace quadbez

#endif

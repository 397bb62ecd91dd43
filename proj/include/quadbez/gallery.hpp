#ifndef QUADBEZ_GALLERY_HPP
#define QUADBEZ_GALLERY_HPP

#include <string>
#include <vector>

#include "quadbez/ratfun.hpp"

namespace quadbez {

// A named quadrature domain: the rational map phi sending the upper
// half-plane conformally onto it, with the poles of phi pinned exactly.
struct GalleryDomain {
  std::string name;
  RationalFunction<Complex> phi;
  std::vector<std::pair<Complex, int>> phi_poles;
  bool exact_capable = false;
  std::string notes;
};

// Same domain with exact Gaussian-rational data; only domains whose poles
// are Gaussian rational qualify (everything but order3).
struct ExactGalleryDomain {
  std::string name;
  RationalFunction<GaussianRational> phi;
  std::vector<std::pair<GaussianRational, int>> phi_poles;
};

const std::vector<std::string>& gallery_names();
GalleryDomain gallery_lookup(const std::string& name);
ExactGalleryDomain gallery_lookup_exact(const std::string& name);

}  // namespace quadbez

#endif

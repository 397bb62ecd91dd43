#include "quadbez/gallery.hpp"

#include <cmath>

#include "quadbez/errors.hpp"

namespace quadbez {

namespace {

Polynomial<Complex> poly_d(std::vector<Complex> c) {
  return Polynomial<Complex>(std::move(c));
}

Polynomial<GaussianRational> poly_x(std::vector<GaussianRational> c) {
  return Polynomial<GaussianRational>(std::move(c));
}

GaussianRational gr(long a, long b, long c) { return {a, b, c}; }

const Complex I{0.0, 1.0};

}  // namespace

const std::vector<std::string>& gallery_names() {
  static const std::vector<std::string> names = {"disc", "cardioid", "neumann",
                                                 "order3"};
  return names;
}

GalleryDomain gallery_lookup(const std::string& name) {
  if (name == "disc") {
    // Cayley transform (z - i)/(z + i): upper half-plane onto the unit disc.
    return {"disc",
            RationalFunction<Complex>(poly_d({-I, 1.0}), poly_d({I, 1.0}),
                                      false),
            {{-I, 1}},
            true,
            "Cayley transform; unit disc"};
  }
  if (name == "cardioid") {
    // w^2 + 3w composed with the Cayley transform: a cardioid-bounded
    // quadrature domain with one node of order two.
    return {"cardioid",
            RationalFunction<Complex>(
                poly_d({2.0, -2.0 * I, 4.0}), poly_d({-1.0, 2.0 * I, 1.0}),
                false),
            {{-I, 2}},
            true,
            "image of the disc under w^2 + 3w; one quadrature node of order 2"};
  }
  if (name == "neumann") {
    // 15(z^2 + 1) / (6z^2 + 20iz - 6): a Neumann oval, quadrature identity
    // of order two with two distinct nodes.
    return {"neumann",
            RationalFunction<Complex>(poly_d({15.0, 0.0, 15.0}),
                                      poly_d({-6.0, 20.0 * I, 6.0}), false),
            {{Complex(0.0, -1.0 / 3.0), 1}, {Complex(0.0, -3.0), 1}},
            true,
            "Neumann oval; reflection of an ellipse in the circle"};
  }
  if (name == "order3") {
    // 63(z+i)^2 (z-i) / (28z^3 + 108iz^2 - 84z - 36i): a symmetric domain
    // with three quadrature nodes. Two poles involve sqrt(3), so this one
    // runs in double mode only.
    const double s3 = std::sqrt(3.0);
    return {"order3",
            RationalFunction<Complex>(
                poly_d({63.0 * I, 63.0, 63.0 * I, 63.0}),
                poly_d({-36.0 * I, -84.0, 108.0 * I, 28.0}), false),
            {{Complex(0.0, -3.0), 1},
             {Complex(-2.0 * s3 / 7.0, -3.0 / 7.0), 1},
             {Complex(2.0 * s3 / 7.0, -3.0 / 7.0), 1}},
            false,
            "order-3 symmetric quadrature domain"};
  }
  throw InvalidInput("unknown gallery domain: " + name);
}

ExactGalleryDomain gallery_lookup_exact(const std::string& name) {
  const GaussianRational i1 = GaussianRational::i();
  if (name == "disc") {
    return {"disc",
            RationalFunction<GaussianRational>(poly_x({-i1, 1}), poly_x({i1, 1}),
                                               false),
            {{gr(0, -1, 1), 1}}};
  }
  if (name == "cardioid") {
    return {"cardioid",
            RationalFunction<GaussianRational>(
                poly_x({2, gr(0, -2, 1), 4}), poly_x({-1, gr(0, 2, 1), 1}),
                false),
            {{gr(0, -1, 1), 2}}};
  }
  if (name == "neumann") {
    return {"neumann",
            RationalFunction<GaussianRational>(
                poly_x({15, 0, 15}), poly_x({-6, gr(0, 20, 1), 6}), false),
            {{gr(0, -1, 3), 1}, {gr(0, -3, 1), 1}}};
  }
  if (name == "order3")
    throw InvalidInput("order3 runs in double mode only (irrational poles)");
  throw InvalidInput("unknown gallery domain: " + name);
}

}  // namespace quadbez

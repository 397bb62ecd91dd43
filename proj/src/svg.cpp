#include "quadbez/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "quadbez/errors.hpp"

namespace quadbez {

std::vector<Complex> sample_boundary(const RationalFunction<Complex>& phi,
                                     int samples) {
  if (samples < 8) throw InvalidInput("boundary sampling: too few samples");
  if (phi.num().degree() > phi.den().degree())
    throw InvalidInput("boundary sampling: map has a pole at infinity");
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(samples) + 1);
  const double pi = 3.14159265358979323846;
  for (int k = 0; k < samples; ++k) {
    double theta = -pi / 2.0 + pi * (k + 0.5) / samples;
    Complex x(std::tan(theta), 0.0);
    Complex w = phi(x);
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
      throw InvalidInput("boundary sampling: map has a pole on the real axis");
    pts.push_back(w);
  }
  // The limit point phi(infinity).
  Complex at_inf = phi.num().degree() == phi.den().degree()
                       ? phi.num().leading() / phi.den().leading()
                       : Complex(0.0, 0.0);
  pts.push_back(at_inf);
  return pts;
}

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);
  return buf;
}

const char* root_color(HalfPlane cls) {
  switch (cls) {
    case HalfPlane::upper: return "#d62728";   // inside
    case HalfPlane::real: return "#ff7f0e";    // on the boundary
    case HalfPlane::lower: return "#1f77b4";   // outside
  }
  return "#000000";
}

}  // namespace

std::string render_domain_svg(const std::vector<Complex>& boundary,
                              const std::vector<RootLocation>& roots) {
  if (boundary.empty()) throw InvalidInput("svg: empty boundary");
  double xmin = boundary[0].real(), xmax = xmin;
  double ymin = -boundary[0].imag(), ymax = ymin;
  auto grow = [&](double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (const auto& z : boundary) grow(z.real(), -z.imag());
  for (const auto& r : roots) grow(r.root.real(), -r.root.imag());

  double w = std::max(xmax - xmin, 1e-6), h = std::max(ymax - ymin, 1e-6);
  double margin = 0.08 * std::max(w, h);
  xmin -= margin;
  ymin -= margin;
  w += 2 * margin;
  h += 2 * margin;
  double marker = 0.012 * std::max(w, h);
  double stroke = 0.004 * std::max(w, h);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\"";
  out += num(xmin) + " " + num(ymin) + " " + num(w) + " " + num(h) + "\">\n";
  out += "<rect x=\"" + num(xmin) + "\" y=\"" + num(ymin) + "\" width=\"" +
         num(w) + "\" height=\"" + num(h) + "\" fill=\"white\"/>\n";

  out += "<path d=\"";
  for (std::size_t k = 0; k < boundary.size(); ++k) {
    out += (k == 0 ? "M" : "L");
    out += num(boundary[k].real()) + "," + num(-boundary[k].imag());
  }
  out += "Z\" fill=\"none\" stroke=\"#333333\" stroke-width=\"" + num(stroke) +
         "\"/>\n";

  for (const auto& r : roots) {
    out += "<circle cx=\"" + num(r.root.real()) + "\" cy=\"" +
           num(-r.root.imag()) + "\" r=\"" + num(marker) + "\" fill=\"" +
           root_color(r.cls) + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace quadbez

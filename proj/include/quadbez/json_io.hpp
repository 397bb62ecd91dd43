#ifndef QUADBEZ_JSON_IO_HPP
#define QUADBEZ_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "quadbez/counting.hpp"
#include "quadbez/gallery.hpp"
#include "quadbez/oracles.hpp"

namespace quadbez {

// Field order is fixed (ordered_json) so identical inputs produce
// byte-identical output.
using Json = nlohmann::ordered_json;

Json polynomial_json(const Polynomial<Complex>& p);
Json polynomial_json(const Polynomial<GaussianRational>& p);
Json ratfun_json(const RationalFunction<Complex>& f);

template <class T>
Json pole_divisor_json(const PoleDivisor<T>& d) {
  Json arr = Json::array();
  for (const auto& e : d.entries()) {
    Json o;
    o["pole"] = scalar_str(e.pole);
    o["multiplicity"] = e.multiplicity;
    o["class"] = pole_class_name(e.cls);
    arr.push_back(std::move(o));
  }
  return Json{{"poles", std::move(arr)}, {"degree", d.degree()}};
}

Json inertia_json(const Inertia& in);
Json zero_count_report_json(const ZeroCountReport& rep);
Json fiber_report_json(const FiberReport& rep);
Json membership_json(const MembershipCount& mc);

// Matrix dump: array-of-arrays of scalar strings plus the basis labels,
// rows and columns in ordered-basis order.
template <class T>
Json matrix_dump_json(const Matrix<T>& m, const OrderedPoleBasis<T>& basis) {
  Json labels = Json::array();
  for (const auto& lbl : basis.labels())
    labels.push_back(Json{{"pole", scalar_str(lbl.pole)}, {"order", lbl.order}});
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_str(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"basis", std::move(labels)}, {"matrix", std::move(rows)}};
}

// Parse a polynomial from a JSON array of scalars (numbers or strings),
// low-to-high coefficient order.
Polynomial<Complex> parse_polynomial_d(const Json& arr);
Polynomial<GaussianRational> parse_polynomial_x(const Json& arr);

}  // namespace quadbez

#endif

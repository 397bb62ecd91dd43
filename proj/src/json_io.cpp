#include "quadbez/json_io.hpp"

#include <cstdio>

#include "quadbez/errors.hpp"

namespace quadbez {

namespace {

template <class T>
Json poly_json_impl(const Polynomial<T>& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(scalar_str(c));
  return arr;
}

}  // namespace

Json polynomial_json(const Polynomial<Complex>& p) { return poly_json_impl(p); }
Json polynomial_json(const Polynomial<GaussianRational>& p) {
  return poly_json_impl(p);
}

Json ratfun_json(const RationalFunction<Complex>& f) {
  return Json{{"num", polynomial_json(f.num())}, {"den", polynomial_json(f.den())}};
}

Json inertia_json(const Inertia& in) {
  return Json{{"n_plus", in.n_plus}, {"n_minus", in.n_minus}, {"n_zero", in.n_zero}};
}

Json zero_count_report_json(const ZeroCountReport& rep) {
  Json o;
  o["common_zero_degree"] = rep.common_zero_degree;
  o["interior_additional"] = rep.interior_additional;
  if (rep.interior_total_if_no_boundary.has_value())
    o["interior_total_if_no_boundary"] = *rep.interior_total_if_no_boundary;
  else
    o["interior_total_if_no_boundary"] = nullptr;
  o["boundary_suspected"] = rep.boundary_suspected;
  o["ambiguous_rank"] = rep.ambiguous_rank;
  o["n"] = rep.n;
  o["map_degree"] = rep.map_degree;
  o["inertia"] = inertia_json(rep.inertia);
  o["mode"] = rep.mode;
  o["rank_tol"] = rep.rank_tol;
  o["provenance"] = rep.provenance;
  o["rule"] = rep.rule;
  return o;
}

Json fiber_report_json(const FiberReport& rep) {
  Json pts = Json::array();
  for (const auto& pt : rep.preimages)
    pts.push_back(Json{{"point", scalar_str(pt.point)},
                       {"multiplicity", pt.multiplicity},
                       {"location", half_plane_name(pt.location)}});
  return Json{{"lambda", scalar_str(rep.lambda)},
              {"preimages", std::move(pts)},
              {"imbalance", rep.imbalance}};
}

Json membership_json(const MembershipCount& mc) {
  return Json{{"inside", mc.inside}, {"boundary", mc.boundary}, {"outside", mc.outside}};
}

namespace {

std::string scalar_token(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  throw InvalidInput("polynomial coefficient must be a number or scalar string");
}

}  // namespace

Polynomial<Complex> parse_polynomial_d(const Json& arr) {
  if (!arr.is_array()) throw InvalidInput("polynomial must be a JSON array");
  std::vector<Complex> c;
  c.reserve(arr.size());
  for (const auto& v : arr) c.push_back(parse_complex(scalar_token(v)));
  return Polynomial<Complex>(std::move(c));
}

Polynomial<GaussianRational> parse_polynomial_x(const Json& arr) {
  if (!arr.is_array()) throw InvalidInput("polynomial must be a JSON array");
  std::vector<GaussianRational> c;
  c.reserve(arr.size());
  for (const auto& v : arr) c.push_back(parse_gaussian_rational(scalar_token(v)));
  return Polynomial<GaussianRational>(std::move(c));
}

}  // namespace quadbez

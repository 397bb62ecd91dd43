// quadbez: count zeros of complex polynomials on quadrature domains via the
// inertia of the genus-0 surface Bezout matrix, with independent oracles.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "quadbez/counting.hpp"
#include "quadbez/errors.hpp"
#include "quadbez/gallery.hpp"
#include "quadbez/json_io.hpp"
#include "quadbez/oracles.hpp"
#include "quadbez/svg.hpp"

namespace {

using namespace quadbez;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNumerical = 3;

struct CommonArgs {
  std::string domain;
  std::string phi_num, phi_den;
  std::string poly;
  std::string mode = "double";
  double rank_tol = 1e-9;
  std::uint64_t seed = 1;
  std::string out;
};

void add_common(CLI::App* cmd, CommonArgs* a, bool poly_required) {
  cmd->add_option("--domain", a->domain,
                  "gallery domain name (disc|cardioid|neumann|order3)");
  cmd->add_option("--phi-num", a->phi_num,
                  "numerator of a user map phi, JSON coefficient array "
                  "(low to high)");
  cmd->add_option("--phi-den", a->phi_den, "denominator of a user map phi");
  auto* p = cmd->add_option("--poly", a->poly,
                            "polynomial p, JSON coefficient array (low to "
                            "high), e.g. \"[-4,3,-2,5,1]\"");
  if (poly_required) p->required();
  cmd->add_option("--mode", a->mode, "scalar mode: double|exact")
      ->check(CLI::IsMember({"double", "exact"}));
  cmd->add_option("--rank-tol", a->rank_tol, "rank tolerance for inertia");
  cmd->add_option("--seed", a->seed, "seed for randomized oracles");
  cmd->add_option("--out", a->out, "write output to this file instead of stdout");
}

void emit(const CommonArgs& a, const std::string& text) {
  if (a.out.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream f(a.out, std::ios::binary);
  if (!f) throw InvalidInput("cannot open output file: " + a.out);
  f << text;
}

// Resolved double-mode problem: the map, its poles when known, provenance.
struct DomainSpec {
  RationalFunction<Complex> phi;
  std::vector<std::pair<Complex, int>> phi_poles;
  bool have_poles = false;
  bool exact_capable = false;
  std::string provenance;
};

DomainSpec resolve_domain(const CommonArgs& a) {
  const bool custom = !a.phi_num.empty() || !a.phi_den.empty();
  if (a.domain.empty() == !custom)
    throw InvalidInput("specify exactly one of --domain or --phi-num/--phi-den");
  DomainSpec spec;
  if (custom) {
    if (a.phi_num.empty() || a.phi_den.empty())
      throw InvalidInput("a user map needs both --phi-num and --phi-den");
    Json jn = Json::parse(a.phi_num, nullptr, false);
    Json jd = Json::parse(a.phi_den, nullptr, false);
    if (jn.is_discarded() || jd.is_discarded())
      throw InvalidInput("--phi-num/--phi-den must be valid JSON arrays");
    spec.phi = RationalFunction<Complex>(parse_polynomial_d(jn),
                                         parse_polynomial_d(jd));
    spec.provenance = "user map";
    return spec;
  }
  GalleryDomain dom = gallery_lookup(a.domain);
  spec.phi = dom.phi;
  spec.phi_poles = dom.phi_poles;
  spec.have_poles = true;
  spec.exact_capable = dom.exact_capable;
  spec.provenance = dom.name;
  return spec;
}

Polynomial<Complex> resolve_poly(const CommonArgs& a) {
  Json j = Json::parse(a.poly, nullptr, false);
  if (j.is_discarded()) throw InvalidInput("--poly must be a valid JSON array");
  return parse_polynomial_d(j);
}

ZeroCountReport run_count_report(const CommonArgs& a) {
  DomainSpec spec = resolve_domain(a);
  FormOptions opt;
  opt.rank_tol = a.rank_tol;
  ZeroCountReport rep;
  if (a.mode == "exact") {
    if (spec.provenance == "user map")
      throw InvalidInput("exact mode needs exact pole data; use a gallery "
                         "domain (disc, cardioid, neumann)");
    ExactGalleryDomain dom = gallery_lookup_exact(spec.provenance);
    Json j = Json::parse(a.poly, nullptr, false);
    if (j.is_discarded()) throw InvalidInput("--poly must be a valid JSON array");
    Polynomial<GaussianRational> p = parse_polynomial_x(j);
    rep = count_zeros_in_domain(p, dom.phi, &dom.phi_poles, opt);
  } else {
    Polynomial<Complex> p = resolve_poly(a);
    rep = count_zeros_in_domain(
        p, spec.phi, spec.have_poles ? &spec.phi_poles : nullptr, opt);
  }
  rep.provenance = spec.provenance;
  return rep;
}

int cmd_count(const CommonArgs& a) {
  ZeroCountReport rep = run_count_report(a);
  emit(a, zero_count_report_json(rep).dump(2) + "\n");
  return rep.ambiguous_rank ? kExitNumerical : kExitOk;
}

int cmd_verify(const CommonArgs& a, bool corrupt_j) {
  DomainSpec spec = resolve_domain(a);
  Polynomial<Complex> p = resolve_poly(a);

  ZeroCountReport rep = run_count_report(a);
  MembershipCount mc = membership_count(p, spec.phi);

  Json out;
  out["count"] = zero_count_report_json(rep);
  out["membership"] = membership_json(mc);

  bool ok = true;
  auto complain = [&](const std::string& msg) {
    ok = false;
    std::fprintf(stderr, "verify mismatch: %s\n", msg.c_str());
  };

  if (rep.n >= 1) {
    if (mc.boundary == 0) {
      // No boundary zeros: the count in U is -signature/2 even when n_0 > 0
      // (Schwarz-reflection-symmetric pairs).
      int interior = -rep.inertia.signature() / 2;
      if (interior != mc.inside)
        complain("bezout interior " + std::to_string(interior) +
                 " != membership inside " + std::to_string(mc.inside));
    } else if (rep.common_zero_degree == mc.boundary) {
      // Pure boundary kernel: the additional count is the interior count.
      if (rep.interior_additional != mc.inside)
        complain("bezout interior " + std::to_string(rep.interior_additional) +
                 " != membership inside " + std::to_string(mc.inside));
    } else if (rep.interior_additional > mc.inside) {
      complain("bezout additional " + std::to_string(rep.interior_additional) +
               " exceeds membership inside " + std::to_string(mc.inside));
    }
    // n_0 aggregates boundary zeros and reflected pairs.
    int extra = rep.common_zero_degree - mc.boundary;
    if (extra < 0 || extra % 2 != 0)
      complain("common-zero degree " + std::to_string(rep.common_zero_degree) +
               " inconsistent with boundary count " + std::to_string(mc.boundary));

    // Winding-number and argument-principle legs on the real pair
    // (f_r, f_i), whose signature is carried by the same Hermitian form the
    // count used.
    RationalFunction<Complex> f = compose_poly_ratfun(p, spec.phi);
    RationalFunction<Complex> ftau = f.tau();
    auto cd = to_common_denominator(f, ftau);
    const Complex half(0.5, 0.0), half_i(0.0, -0.5);
    Polynomial<Complex> num_r = half * (cd.p1 + cd.p2);
    Polynomial<Complex> num_i = half_i * (cd.p1 - cd.p2);
    RationalFunction<Complex> h(num_r, num_i);

    int signature = rep.inertia.signature();
    // Negative-control hook: simulate a sign error in J. The injected value
    // always differs from the true signature, so verify must exit 1.
    if (corrupt_j) signature = -signature - 1;

    CauchyOptions copt;
    copt.seed = a.seed;
    int ci = cauchy_index(h, copt);
    out["winding"] = Json{{"signature", signature}, {"cauchy_index", ci}};
    if (ci != signature)
      complain("signature " + std::to_string(signature) + " != cauchy index " +
               std::to_string(ci));

    std::mt19937_64 rng(a.seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> re(-2.0, 2.0), im(0.25, 2.0);
    Json fibers = Json::array();
    for (int k = 0; k < 3; ++k) {
      for (int attempt = 0; attempt < 32; ++attempt) {
        Complex lambda(re(rng), im(rng));
        try {
          FiberReport fr = fiber_imbalance(h, lambda);
          fibers.push_back(fiber_report_json(fr));
          if (fr.imbalance != signature)
            complain("signature " + std::to_string(signature) +
                     " != fiber imbalance " + std::to_string(fr.imbalance) +
                     " at lambda " + scalar_str(lambda));
          break;
        } catch (const NumericalFailure&) {
          // non-generic lambda: redraw
        }
      }
    }
    out["argument_principle"] = std::move(fibers);
  }

  out["agree"] = ok;
  emit(a, out.dump(2) + "\n");
  return ok ? kExitOk : kExitMismatch;
}

int cmd_plot(const CommonArgs& a, int samples) {
  DomainSpec spec = resolve_domain(a);
  {
    DivisorOptions open;
    open.require_closed = false;
    auto d = pole_divisor(spec.phi.den(), open,
                          spec.have_poles ? &spec.phi_poles : nullptr);
    for (const auto& e : d.entries())
      if (e.cls != PoleClass::pair_lower)
        throw InvalidInput(
            "plot: map poles must lie strictly in the lower half-plane");
  }
  std::vector<Complex> boundary = sample_boundary(spec.phi, samples);
  std::vector<RootLocation> roots;
  if (!a.poly.empty()) roots = classify_roots(resolve_poly(a), spec.phi);
  emit(a, render_domain_svg(boundary, roots));
  return kExitOk;
}

int cmd_matrix(const CommonArgs& a) {
  DomainSpec spec = resolve_domain(a);
  FormOptions opt;
  opt.rank_tol = a.rank_tol;
  opt.strict_rank = false;
  Json out;
  if (a.mode == "exact") {
    if (spec.provenance == "user map")
      throw InvalidInput("exact mode needs exact pole data; use a gallery "
                         "domain (disc, cardioid, neumann)");
    ExactGalleryDomain dom = gallery_lookup_exact(spec.provenance);
    Json j = Json::parse(a.poly, nullptr, false);
    if (j.is_discarded()) throw InvalidInput("--poly must be a valid JSON array");
    auto form = hermitian_form(parse_polynomial_x(j), dom.phi, &dom.phi_poles, opt);
    out = matrix_dump_json(form.h, form.basis);
    out["divisor"] = pole_divisor_json(form.basis.divisor());
    out["inertia"] = inertia_json(form.inertia);
  } else {
    auto form = hermitian_form(resolve_poly(a), spec.phi,
                               spec.have_poles ? &spec.phi_poles : nullptr, opt);
    out = matrix_dump_json(form.h, form.basis);
    out["divisor"] = pole_divisor_json(form.basis.divisor());
    out["inertia"] = inertia_json(form.inertia);
  }
  out["mode"] = a.mode;
  out["provenance"] = spec.provenance;
  emit(a, out.dump(2) + "\n");
  return kExitOk;
}

int cmd_gallery(const CommonArgs& a) {
  Json arr = Json::array();
  for (const auto& name : gallery_names()) {
    GalleryDomain dom = gallery_lookup(name);
    Json o;
    o["name"] = dom.name;
    o["phi"] = ratfun_json(dom.phi);
    o["map_degree"] = dom.phi.map_degree();
    o["exact_capable"] = dom.exact_capable;
    o["notes"] = dom.notes;
    arr.push_back(std::move(o));
  }
  emit(a, arr.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero counts of complex polynomials on quadrature domains via "
               "Bezout matrix inertia"};
  app.require_subcommand(1);

  CommonArgs count_args, verify_args, plot_args, matrix_args, gallery_args;
  bool corrupt_j = false;
  int plot_samples = 4096;

  CLI::App* count = app.add_subcommand("count", "count zeros of p inside the domain");
  add_common(count, &count_args, true);

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check the bezout count against the independent oracles");
  add_common(verify, &verify_args, true);
  verify->add_flag("--corrupt-j", corrupt_j,
                   "negative-control test hook: corrupt the signature matrix")
      ->group("");  // hidden

  CLI::App* plot = app.add_subcommand(
      "plot", "emit an SVG of the domain boundary and the roots of p");
  add_common(plot, &plot_args, false);
  plot->add_option("--samples", plot_samples, "boundary sample count");

  CLI::App* matrix = app.add_subcommand(
      "matrix", "dump the Hermitian Bezout form and its basis labels");
  add_common(matrix, &matrix_args, true);

  CLI::App* gallery = app.add_subcommand("gallery", "list the domain gallery");
  gallery->add_option("--out", gallery_args.out, "write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (count->parsed()) return cmd_count(count_args);
    if (verify->parsed()) return cmd_verify(verify_args, corrupt_j);
    if (plot->parsed()) return cmd_plot(plot_args, plot_samples);
    if (matrix->parsed()) return cmd_matrix(matrix_args);
    if (gallery->parsed()) return cmd_gallery(gallery_args);
  } catch (const InvalidInput& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  } catch (const NumericalFailure& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  }
  return kExitInvalid;
}

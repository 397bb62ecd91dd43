// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "quadbez/counting.hpp"
#include "quadbez/gallery.hpp"
#include "quadbez/oracles.hpp"
#include "test_support.hpp"

using namespace quadbez;
using namespace quadbez::testing;

namespace {

int g_failures = 0;

void criterion(int id, const std::string& name,
               const std::function<std::string()>& body) {
  std::string detail;
  bool pass = false;
  try {
    detail = body();  // empty string means pass
    pass = detail.empty();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  if (pass) {
    std::printf("PASS criterion %2d: %s\n", id, name.c_str());
  } else {
    std::printf("FAIL criterion %2d: %s -- %s\n", id, name.c_str(),
                detail.c_str());
    ++g_failures;
  }
}

std::string check_eq(const std::string& what, long got, long want) {
  if (got == want) return "";
  std::ostringstream os;
  os << what << ": got " << got << ", want " << want;
  return os.str();
}

Polynomial<Complex> golden_p() { return example_quartic(); }
Polynomial<Complex> golden_q() { return poly_d({-4.0, 0.0, 1.0}); }
Polynomial<GaussianRational> golden_p_exact() {
  return poly_x({-4, 3, -2, 5, 1});
}
Polynomial<GaussianRational> golden_q_exact() { return poly_x({-4, 0, 1}); }

ZeroCountReport count_gallery(const std::string& name,
                              const Polynomial<Complex>& p) {
  auto dom = gallery_lookup(name);
  return count_zeros_in_domain(p, dom.phi, &dom.phi_poles);
}

// ---------------------------------------------------------------------------

std::string c1_disc() {
  auto rep = count_gallery("disc", golden_p());
  std::string err;
  if (!(err = check_eq("n_plus", rep.inertia.n_plus, 1)).empty()) return err;
  if (!(err = check_eq("n_minus", rep.inertia.n_minus, 7)).empty()) return err;
  if (!(err = check_eq("n_zero", rep.inertia.n_zero, 0)).empty()) return err;
  if (!(err = check_eq("interior", rep.interior_additional, 3)).empty())
    return err;
  auto dx = gallery_lookup_exact("disc");
  auto rx = count_zeros_in_domain(golden_p_exact(), dx.phi, &dx.phi_poles);
  if (!(rx.inertia == rep.inertia)) return "exact and double modes disagree";
  if (!(err = check_eq("exact interior", rx.interior_additional, 3)).empty())
    return err;
  return "";
}

std::string c2_cardioid() {
  auto rp = count_gallery("cardioid", golden_p());
  std::string err;
  if (!(err = check_eq("p n_plus", rp.inertia.n_plus, 5)).empty()) return err;
  if (!(err = check_eq("p n_minus", rp.inertia.n_minus, 11)).empty()) return err;
  if (!(err = check_eq("p n_zero", rp.inertia.n_zero, 0)).empty()) return err;
  if (!(err = check_eq("p interior", rp.interior_additional, 3)).empty())
    return err;
  auto rq = count_gallery("cardioid", golden_q());
  if (!(err = check_eq("q n_zero", rq.inertia.n_zero, 1)).empty()) return err;
  if (!(err = check_eq("q n_minus", rq.inertia.n_minus, 5)).empty()) return err;
  if (!(err = check_eq("q interior add", rq.interior_additional, 1)).empty())
    return err;
  auto dx = gallery_lookup_exact("cardioid");
  auto rx = count_zeros_in_domain(golden_q_exact(), dx.phi, &dx.phi_poles);
  if (!(rx.inertia == rq.inertia)) return "exact and double modes disagree on q";
  return "";
}

std::string c3_neumann() {
  auto rp = count_gallery("neumann", golden_p());
  std::string err;
  if (!(err = check_eq("p n_minus", rp.inertia.n_minus, 11)).empty()) return err;
  if (!(err = check_eq("p n_zero (invertible)", rp.inertia.n_zero, 0)).empty())
    return err;
  if (rp.inertia.n_plus + rp.inertia.n_minus + rp.inertia.n_zero != 16)
    return "p form is not 16x16";
  if (!(err = check_eq("p interior", rp.interior_additional, 3)).empty())
    return err;
  auto rq = count_gallery("neumann", golden_q());
  if (!(err = check_eq("q n_minus", rq.inertia.n_minus, 6)).empty()) return err;
  if (!(err = check_eq("q interior", rq.interior_additional, 2)).empty())
    return err;
  return "";
}

std::string c4_order3() {
  auto rp = count_gallery("order3", golden_p());
  std::string err;
  if (rp.inertia.n_plus + rp.inertia.n_minus + rp.inertia.n_zero != 24)
    return "form is not 24x24";
  if (!(err = check_eq("n_minus", rp.inertia.n_minus, 15)).empty()) return err;
  if (!(err = check_eq("interior", rp.interior_additional, 3)).empty())
    return err;
  return "";
}

std::string c5_oracle_equivalence() {
  std::mt19937_64 rng(0xacce5501);
  for (const auto& name : gallery_names()) {
    auto dom = gallery_lookup(name);
    int accepted = 0, drawn = 0;
    while (accepted < 50) {
      if (++drawn > 2000) return "could not draw 50 boundary-free polynomials";
      int deg = 1 + static_cast<int>(rng() % 5);
      auto p = random_int_poly(rng, deg, 5);
      auto mc = membership_count(p, dom.phi);
      if (mc.boundary > 0) continue;  // boundary cases excluded by the oracle
      ++accepted;
      auto rep = count_zeros_in_domain(p, dom.phi, &dom.phi_poles);
      // With no zeros on the boundary the count in U is -signature/2; this
      // also covers draws with Schwarz-reflection-symmetric root pairs,
      // where n_0 > 0 without any boundary root.
      int interior = -rep.inertia.signature() / 2;
      if (interior != mc.inside ||
          (rep.common_zero_degree == 0 &&
           rep.interior_additional != mc.inside)) {
        std::ostringstream os;
        os << name << " draw " << drawn << ": bezout " << interior
           << " (additional " << rep.interior_additional
           << ", n0 " << rep.common_zero_degree << ") != membership "
           << mc.inside;
        return os.str();
      }
    }
  }
  return "";
}

std::string c6_index_suite() {
  std::mt19937_64 rng(0xacce5506);
  std::uniform_real_distribution<double> re(-1.5, 1.5), im(0.25, 1.75);

  std::vector<std::vector<std::pair<Complex, int>>> divisors = {
      {{-kI, 1}, {kI, 1}},
      {{-kI, 2}, {kI, 2}},
      {{Complex(0, -1.0 / 3.0), 1},
       {Complex(0, 1.0 / 3.0), 1},
       {Complex(0, -3.0), 1},
       {Complex(0, 3.0), 1}},
  };
  for (const auto& poles : divisors) {
    auto d = PoleDivisor<Complex>::from_poles(poles);
    auto q = d.to_polynomial();
    const int n = d.degree();
    int done = 0, drawn = 0;
    while (done < 50) {
      if (++drawn > 2000) return "could not draw 50 regular pairs";
      auto fn = random_int_poly(rng, 1 + static_cast<int>(rng() % n), 5);
      auto gn = random_int_poly(rng, n, 5);
      RationalFunction<Complex> f(fn, q, false), g(gn, q, false);
      RationalFunction<Complex> h(fn, gn);
      if (h.map_degree() < 1) continue;

      auto sb = surface_bezoutian(f, g, d);
      auto in = matrix_inertia(sb.basis.j_apply(sb.b), 1e-9, false).inertia;

      int ci;
      try {
        CauchyOptions copt;
        copt.seed = rng();
        ci = cauchy_index(h, copt);
      } catch (const NumericalFailure&) {
        continue;
      }
      if (ci != in.signature()) {
        std::ostringstream os;
        os << "winding: signature " << in.signature() << " != cauchy index "
           << ci << " (N=" << n << ", draw " << drawn << ")";
        return os.str();
      }
      for (int k = 0; k < 3; ++k) {
        bool got = false;
        for (int attempt = 0; attempt < 32 && !got; ++attempt) {
          try {
            auto fb = fiber_imbalance(h, Complex(re(rng), im(rng)));
            got = true;
            if (fb.imbalance != in.signature()) {
              std::ostringstream os;
              os << "argument: signature " << in.signature()
                 << " != imbalance " << fb.imbalance << " (N=" << n << ")";
              return os.str();
            }
          } catch (const NumericalFailure&) {
          }
        }
        if (!got) return "no generic lambda found";
      }
      ++done;
    }
  }
  return "";
}

std::string c7_kernel_suite() {
  std::mt19937_64 rng(0xacce5507);
  auto i1 = GaussianRational::i();

  struct Div {
    Polynomial<GaussianRational> q;
    std::vector<std::pair<GaussianRational, int>> poles;
  };
  std::vector<Div> divisors = {
      {poly_x({1, 0, 1}), {{-i1, 1}, {i1, 1}}},
      {poly_x({1, 0, 2, 0, 1}), {{-i1, 2}, {i1, 2}}},
      {poly_x({0, 1, 0, 1}), {{GaussianRational(0), 1}, {-i1, 1}, {i1, 1}}},
  };
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto rand_poly = [&](int deg) {
    std::vector<GaussianRational> c(static_cast<std::size_t>(deg) + 1);
    for (int k = 0; k < deg; ++k) c[static_cast<std::size_t>(k)] = coeff(rng);
    int lead = 0;
    while (lead == 0) lead = coeff(rng);
    c.back() = lead;
    return Polynomial<GaussianRational>(std::move(c));
  };

  for (int it = 0; it < 30; ++it) {
    const auto& div = divisors[static_cast<std::size_t>(it) % divisors.size()];
    auto d = pole_divisor(div.q, DivisorOptions{}, &div.poles);
    const int n = d.degree();

    // Plant a real common factor: rational roots and/or a conjugate pair.
    Polynomial<GaussianRational> common = poly_x({1});
    int planted = static_cast<int>(rng() % std::min(3, n));
    for (int k = 0; k < planted && common.degree() + 1 <= n - 1; ++k) {
      if (rng() % 2 == 0) {
        common = common * poly_x({GaussianRational(coeff(rng), 0, 2), 1});
      } else if (common.degree() + 2 <= n - 1) {
        common = common * poly_x({GaussianRational(1 + (int)(rng() % 4)), 0, 1});
      }
    }
    int room = n - common.degree();
    int slack_f = static_cast<int>(rng() % (room + 1));  // zeros at infinity
    int slack_g = static_cast<int>(rng() % (room + 1));
    auto p1 = common * rand_poly(room - slack_f);
    auto p2 = common * rand_poly(room - slack_g);
    RationalFunction<GaussianRational> f(p1, div.q, false), g(p2, div.q, false);

    auto sb = surface_bezoutian(f, g, d);
    auto in = matrix_inertia(sb.basis.j_apply(sb.b));
    auto gx = poly_gcd_extended(p1, p2, n);
    if (in.n_zero != gx.common_degree) {
      std::ostringstream os;
      os << "draw " << it << ": n_zero " << in.n_zero << " != common degree "
         << gx.common_degree << " (N=" << n << ")";
      return os.str();
    }
  }
  return "";
}

std::string c8_algebraic_identities() {
  std::mt19937_64 rng(0xacce5508);
  std::uniform_real_distribution<double> u(-2.0, 2.0);

  for (const auto& name : gallery_names()) {
    auto dom = gallery_lookup(name);
    for (const auto& p : {golden_p(), golden_q()}) {
      const int n = p.degree();
      auto f = compose_poly_ratfun(p, dom.phi);
      auto ft = f.tau();
      DivisorOptions open;
      open.require_closed = false;
      auto d =
          pole_divisor(dom.phi.den(), open, &dom.phi_poles).closure().scaled(n);

      auto bpair = surface_bezoutian(ft, f, d);
      auto bswap = surface_bezoutian(f, ft, d);
      double scale = 1.0 + bpair.b.frobenius_norm();

      // Antisymmetry in the arguments and symmetry of the matrix itself.
      if (mat_dist(bpair.b, -bswap.b) > 1e-9 * scale)
        return name + ": B(f,g) != -B(g,f)";
      if (mat_dist(bpair.b, bpair.b.transpose()) > 1e-9 * scale)
        return name + ": B not symmetric";

      // Scaling identity B(f^tau, f) = 2i B(f_r, f_i).
      auto cd = to_common_denominator(f, ft);
      RationalFunction<Complex> fr(Complex(0.5, 0.0) * (cd.p1 + cd.p2), cd.q,
                                   false);
      RationalFunction<Complex> fi(Complex(0.0, -0.5) * (cd.p1 - cd.p2), cd.q,
                                   false);
      auto bri = surface_bezoutian(fr, fi, d);
      if (mat_dist(bpair.b, Complex(0.0, 2.0) * bri.b) > 1e-9 * scale)
        return name + ": B(f^tau,f) != 2i B(f_r,f_i)";

      // SL2 bilinearity on the real pair.
      double al = u(rng), be = u(rng), ga = u(rng), de = u(rng);
      RationalFunction<Complex> f2(
          Complex(al) * fr.num() + Complex(be) * fi.num(), cd.q, false);
      RationalFunction<Complex> g2(
          Complex(ga) * fr.num() + Complex(de) * fi.num(), cd.q, false);
      auto b2 = surface_bezoutian(f2, g2, d);
      auto want = Complex(al * de - be * ga) * bri.b;
      if (mat_dist(b2.b, want) > 1e-8 * (1.0 + want.frobenius_norm()))
        return name + ": SL2 bilinearity violated";

      // Hermitian residual of the form.
      FormOptions fopt;
      fopt.strict_rank = false;
      auto form = hermitian_form(p, dom.phi, &dom.phi_poles, fopt);
      if (form.hermitian_residual > 1e-10 * (1.0 + form.h.frobenius_norm()))
        return name + ": Hermitian residual too large";

      // Defining property at 20 sample points away from the poles.
      auto dd = d.to_double();
      for (int k = 0; k < 20; ++k) {
        Complex t = sample_point_away(rng, dd);
        Complex s = sample_point_away(rng, dd);
        if (std::abs(t - s) < 0.15) {
          --k;
          continue;
        }
        Complex lhs = (ft(t) * f(s) - ft(s) * f(t)) / (t - s);
        Complex rhs = bezout_expansion(bpair, t, s);
        if (std::abs(lhs - rhs) > 1e-8 * (1.0 + std::abs(lhs)))
          return name + ": defining property residual too large";
      }
    }
  }
  return "";
}

std::string c9_calibration() {
  auto q2 = poly_d({1.0, 0.0, 1.0});
  RationalFunction<Complex> f(poly_d({0.0, 1.0}), q2, false);
  RationalFunction<Complex> g(poly_d({1.0}), q2, false);
  auto sb = surface_bezoutian(f, g, pole_divisor(q2));
  auto evs = hermitian_eigenvalues(sb.basis.j_apply(sb.b));
  if (evs.size() != 2) return "CAL-1: wrong size";
  if (std::abs(evs[0]) > 1e-12 || std::abs(evs[1] - 0.5) > 1e-12) {
    std::ostringstream os;
    os << "CAL-1: eigenvalues {" << evs[0] << ", " << evs[1]
       << "} != {0, 1/2}";
    return os.str();
  }
  auto in1 = matrix_inertia(sb.basis.j_apply(sb.b), 1e-9, false).inertia;
  if (in1.signature() != 1) return "CAL-1: signature != +1";

  auto t = poly_d({0.0, 1.0});
  RationalFunction<Complex> one(poly_d({1.0}), poly_d({1.0}), false);
  RationalFunction<Complex> invt(poly_d({1.0}), t, false);
  auto sb2 = surface_bezoutian(one, invt, pole_divisor(t));
  auto in2 = matrix_inertia(sb2.basis.j_apply(sb2.b), 1e-9, false).inertia;
  if (in2.signature() != 1) return "CAL-2: signature != +1";
  return "";
}

std::string c10_hermite_suite() {
  std::mt19937_64 rng(0xacce5510);
  int done = 0, drawn = 0;
  while (done < 100) {
    if (++drawn > 5000) return "could not draw 100 admissible polynomials";
    int deg = 1 + static_cast<int>(rng() % 6);
    auto p = random_gaussian_int_poly(rng, deg, 5);
    auto roots = poly_roots(p);
    int upper = 0, lower = 0;
    bool degenerate = false;
    for (const auto& r : roots) {
      if (std::abs(r.value.imag()) <= 1e-6 * (1.0 + std::abs(r.value))) {
        degenerate = true;
        break;
      }
      if (r.value.imag() > 0)
        upper += r.multiplicity;
      else
        lower += r.multiplicity;
    }
    if (!degenerate)
      for (const auto& a : roots)
        for (const auto& b : roots)
          if (std::abs(a.value - std::conj(b.value)) <=
              1e-6 * (1.0 + std::abs(a.value)))
            degenerate = true;
    if (degenerate) continue;
    ++done;
    auto hc = hermite_half_plane_count(p);
    if (hc.upper != upper || hc.lower != lower || hc.common != 0) {
      std::ostringstream os;
      os << "draw " << drawn << ": hermite (" << hc.upper << "," << hc.lower
         << "," << hc.common << ") != roots (" << upper << "," << lower
         << ",0)";
      return os.str();
    }
  }
  return "";
}

}  // namespace

int main() {
  criterion(1, "disc golden test (double + exact agree)", c1_disc);
  criterion(2, "cardioid golden tests", c2_cardioid);
  criterion(3, "neumann-oval golden tests", c3_neumann);
  criterion(4, "order-3 golden test", c4_order3);
  criterion(5, "oracle equivalence suite (4 galleries x 50 polynomials)",
            c5_oracle_equivalence);
  criterion(6, "winding/argument property suite (3 divisors x 50 pairs)",
            c6_index_suite);
  criterion(7, "kernel suite (30 planted common-zero pairs, exact)",
            c7_kernel_suite);
  criterion(8, "algebraic identity suite (gallery-derived)",
            c8_algebraic_identities);
  criterion(9, "calibration tests CAL-1 and CAL-2", c9_calibration);
  criterion(10, "hermite classical suite (100 random polynomials)",
            c10_hermite_suite);

  if (g_failures > 0) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}

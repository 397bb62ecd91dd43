#ifndef QUADBEZ_POLE_BASIS_HPP
#define QUADBEZ_POLE_BASIS_HPP

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "quadbez/polynomial.hpp"
#include "quadbez/ratfun.hpp"
#include "quadbez/roots.hpp"

namespace quadbez {

enum class PoleClass { real, pair_lower, pair_upper };

inline const char* pole_class_name(PoleClass c) {
  switch (c) {
    case PoleClass::real: return "real";
    case PoleClass::pair_lower: return "pair-lower";
    case PoleClass::pair_upper: return "pair-upper";
  }
  return "?";
}

template <class T>
struct PoleEntry {
  T pole{};
  int multiplicity = 0;
  PoleClass cls = PoleClass::real;
  int partner = -1;  // index of the conjugate entry; self for real poles
};

struct DivisorOptions {
  // |Im a| <= class_tol * (1 + |a|) classifies a pole as real.
  double class_tol = 1e-9;
  // Conjugate pairing accepts candidates within pair_tol * (1 + |a|).
  double pair_tol = 1e-6;
  bool require_closed = true;
};

// A divisor of poles with real/conjugate-pair classification. When closed
// under conjugation it is a real divisor D = D^tau and can index a basis.
template <class T>
class PoleDivisor {
 public:
  static PoleDivisor from_poles(std::vector<std::pair<T, int>> poles,
                                const DivisorOptions& opt = {});

  const std::vector<PoleEntry<T>>& entries() const { return entries_; }

  int degree() const {
    int n = 0;
    for (const auto& e : entries_) n += e.multiplicity;
    return n;
  }

  bool conjugate_closed() const {
    for (const auto& e : entries_)
      if (e.partner < 0) return false;
    return true;
  }

  // Multiplicities scaled by a positive factor (D -> n*D).
  PoleDivisor scaled(int factor) const {
    PoleDivisor d = *this;
    for (auto& e : d.entries_) e.multiplicity *= factor;
    return d;
  }

  // Image under tau: conjugated poles, lower/upper classes exchanged.
  PoleDivisor conj() const {
    PoleDivisor d = *this;
    for (auto& e : d.entries_) {
      e.pole = conj_of(e.pole);
      if (e.cls == PoleClass::pair_lower)
        e.cls = PoleClass::pair_upper;
      else if (e.cls == PoleClass::pair_upper)
        e.cls = PoleClass::pair_lower;
    }
    return d;
  }

  // Smallest real divisor >= this one: each unpaired pole gains its
  // conjugate, paired multiplicities are raised to their maximum. This is
  // the join D v D^tau.
  PoleDivisor closure() const;

  // Monic polynomial with exactly these poles as roots.
  Polynomial<T> to_polynomial() const {
    Polynomial<T> q = Polynomial<T>::constant(scalar_from_int<T>(1));
    for (const auto& e : entries_) {
      Polynomial<T> lin(std::vector<T>{-e.pole, scalar_from_int<T>(1)});
      for (int k = 0; k < e.multiplicity; ++k) q = q * lin;
    }
    return q;
  }

  PoleDivisor<Complex> to_double() const {
    std::vector<std::pair<Complex, int>> poles;
    for (const auto& e : entries_)
      poles.emplace_back(quadbez::to_complex(e.pole), e.multiplicity);
    PoleDivisor<Complex> d;
    d.entries_.reserve(entries_.size());
    for (std::size_t k = 0; k < entries_.size(); ++k)
      d.entries_.push_back({poles[k].first, poles[k].second, entries_[k].cls,
                            entries_[k].partner});
    return d;
  }

  template <class U>
  friend class PoleDivisor;

 private:
  std::vector<PoleEntry<T>> entries_;
};

namespace detail {

inline double imag_part(const Complex& z) { return z.imag(); }
inline double imag_part(const GaussianRational& z) { return z.to_complex().imag(); }

inline bool exactly_conjugate(const Complex& a, const Complex& b) {
  return std::conj(a) == b;
}
inline bool exactly_conjugate(const GaussianRational& a, const GaussianRational& b) {
  return a.conj() == b;
}

inline Complex force_real(const Complex& z) { return {z.real(), 0.0}; }
inline GaussianRational force_real(const GaussianRational& z) {
  return GaussianRational::from_rationals(z.real(), 0);
}

// Conjugate-symmetric average of a lower pole and its upper candidate.
inline Complex symmetrize_lower(const Complex& lower, const Complex& upper) {
  return 0.5 * (lower + std::conj(upper));
}
inline GaussianRational symmetrize_lower(const GaussianRational& lower,
                                         const GaussianRational& upper) {
  return GaussianRational(1, 0, 2) * (lower + upper.conj());
}

}  // namespace detail

template <class T>
PoleDivisor<T> PoleDivisor<T>::from_poles(std::vector<std::pair<T, int>> poles,
                                          const DivisorOptions& opt) {
  PoleDivisor<T> d;
  std::vector<int> lower, upper;
  for (auto& [pole, mult] : poles) {
    if (mult <= 0) throw InvalidInput("pole divisor: nonpositive multiplicity");
    double im = detail::imag_part(pole);
    double scale = 1.0 + abs_of(pole);
    PoleEntry<T> e;
    e.multiplicity = mult;
    if (std::abs(im) <= opt.class_tol * scale) {
      e.pole = detail::force_real(pole);
      e.cls = PoleClass::real;
      e.partner = static_cast<int>(d.entries_.size());
    } else {
      e.pole = pole;
      e.cls = im < 0 ? PoleClass::pair_lower : PoleClass::pair_upper;
      (im < 0 ? lower : upper).push_back(static_cast<int>(d.entries_.size()));
    }
    d.entries_.push_back(std::move(e));
  }

  // Pair each lower pole with its nearest upper conjugate candidate and
  // replace both by the exact conjugate-symmetric average, so the signature
  // matrix comes out exactly block-structured.
  std::vector<bool> taken(d.entries_.size(), false);
  for (int li : lower) {
    auto& le = d.entries_[static_cast<std::size_t>(li)];
    int best = -1;
    double best_dist = 0.0;
    for (int ui : upper) {
      if (taken[static_cast<std::size_t>(ui)]) continue;
      const auto& ue = d.entries_[static_cast<std::size_t>(ui)];
      if (ue.multiplicity != le.multiplicity) continue;
      double dist = std::abs(quadbez::to_complex(le.pole) -
                             std::conj(quadbez::to_complex(ue.pole)));
      if (best < 0 || dist < best_dist) {
        best = ui;
        best_dist = dist;
      }
    }
    double scale = 1.0 + abs_of(le.pole);
    if (best >= 0 && best_dist <= opt.pair_tol * scale) {
      auto& ue = d.entries_[static_cast<std::size_t>(best)];
      le.pole = detail::symmetrize_lower(le.pole, ue.pole);
      ue.pole = conj_of(le.pole);
      le.partner = best;
      ue.partner = li;
      taken[static_cast<std::size_t>(best)] = true;
    } else if (opt.require_closed) {
      throw InvalidInput(
          "pole divisor is not conjugate-closed within tolerance");
    }
  }
  if (opt.require_closed)
    for (int ui : upper)
      if (d.entries_[static_cast<std::size_t>(ui)].partner < 0)
        throw InvalidInput(
            "pole divisor is not conjugate-closed within tolerance");
  return d;
}

template <class T>
PoleDivisor<T> PoleDivisor<T>::closure() const {
  std::vector<std::pair<T, int>> poles;
  std::vector<bool> done(entries_.size(), false);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (done[k]) continue;
    const auto& e = entries_[k];
    if (e.cls == PoleClass::real) {
      poles.emplace_back(e.pole, e.multiplicity);
    } else if (e.partner >= 0) {
      int m = std::max(e.multiplicity,
                       entries_[static_cast<std::size_t>(e.partner)].multiplicity);
      poles.emplace_back(e.pole, m);
      poles.emplace_back(conj_of(e.pole), m);
      done[static_cast<std::size_t>(e.partner)] = true;
    } else {
      poles.emplace_back(e.pole, e.multiplicity);
      poles.emplace_back(conj_of(e.pole), e.multiplicity);
    }
    done[k] = true;
  }
  return from_poles(std::move(poles));
}

// Pole divisor of a monic polynomial. Exact mode must receive the poles
// explicitly (there is no exact root finding); double mode finds and
// clusters them unless known poles are supplied. A pole of multiplicity m
// splits by roughly eps^(1/m) in the eigensolver, so the cluster radius is
// chosen adaptively: the clustering whose factorization best reconstructs Q
// wins (cluster centroids cancel the leading splitting error).
inline PoleDivisor<Complex> pole_divisor(
    const Polynomial<Complex>& q, const DivisorOptions& opt = {},
    const std::vector<std::pair<Complex, int>>* known = nullptr) {
  std::vector<std::pair<Complex, int>> poles;
  if (known != nullptr) {
    poles = *known;
  } else if (q.degree() > 0) {
    const Polynomial<Complex> target = q.monic();
    const double scale = std::max(1.0, target.max_coeff_abs());
    double best_res = std::numeric_limits<double>::infinity();
    for (double radius : {1e-6, 1e-5, 1e-4, 1e-3}) {
      RootOptions ro;
      ro.cluster_tol = radius;
      auto roots = poly_roots(q, ro);
      Polynomial<Complex> rebuilt =
          Polynomial<Complex>::constant(Complex(1.0, 0.0));
      for (const auto& r : roots) {
        Polynomial<Complex> lin(std::vector<Complex>{-r.value, Complex(1.0, 0.0)});
        for (int k = 0; k < r.multiplicity; ++k) rebuilt = rebuilt * lin;
      }
      double res = (rebuilt - target).max_coeff_abs() / scale;
      if (res < best_res) {
        best_res = res;
        poles.clear();
        for (const auto& r : roots) poles.emplace_back(r.value, r.multiplicity);
      }
      if (best_res <= 1e-9) break;
    }
    if (best_res > 1e-5)
      throw NumericalFailure("pole divisor: could not cluster the poles");
  }
  int total = 0;
  for (const auto& [pole, mult] : poles) total += mult;
  if (total != q.degree())
    throw InvalidInput("pole divisor degree does not match the denominator");
  return PoleDivisor<Complex>::from_poles(std::move(poles), opt);
}

inline PoleDivisor<GaussianRational> pole_divisor(
    const Polynomial<GaussianRational>& q, const DivisorOptions& opt,
    const std::vector<std::pair<GaussianRational, int>>* known) {
  if (known == nullptr)
    throw InvalidInput("exact mode requires explicit pole locations");
  int total = 0;
  for (const auto& [pole, mult] : *known) total += mult;
  if (total != q.degree())
    throw InvalidInput("pole divisor degree does not match the denominator");
  auto d = PoleDivisor<GaussianRational>::from_poles(*known, opt);
  if (!(d.to_polynomial() == q.monic()))
    throw InvalidInput("supplied poles do not factor the denominator");
  return d;
}

// ---------------------------------------------------------------------------
// Ordered basis of pole-localized sections and the signature matrix J.

template <class T>
struct BasisLabel {
  T pole{};
  int order = 0;       // k: the basis function is (t - pole)^-(k+1)
  int entry_index = 0; // position in the divisor's entry list
};

// Basis order: all real-pole labels first (poles ascending, derivative order
// ascending within each pole), then conjugate pairs sorted by their lower
// representative, interleaved as (a,k),(conj a,k) for k = 0..m-1.
// J is the identity on real labels and the swap on each interleaved pair.
template <class T>
class OrderedPoleBasis {
 public:
  static OrderedPoleBasis build(const PoleDivisor<T>& divisor);

  const PoleDivisor<T>& divisor() const { return divisor_; }
  const std::vector<BasisLabel<T>>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  int j_partner(std::size_t i) const { return partner_[i]; }
  const std::vector<int>& j_partners() const { return partner_; }

  Matrix<T> j_matrix() const {
    Matrix<T> j(size(), size());
    for (std::size_t i = 0; i < size(); ++i)
      j(i, static_cast<std::size_t>(partner_[i])) = scalar_from_int<T>(1);
    return j;
  }

  // J * M: rows permuted by the pairing.
  Matrix<T> j_apply(const Matrix<T>& m) const {
    Matrix<T> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::size_t src = static_cast<std::size_t>(partner_[i]);
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(src, j);
    }
    return out;
  }

  // Basis function at label i evaluated at t.
  T eval(std::size_t i, const T& t) const {
    const auto& lbl = labels_[i];
    T diff = t - lbl.pole;
    T acc = scalar_from_int<T>(1);
    for (int k = 0; k <= lbl.order; ++k) acc = acc / diff;
    return acc;
  }

 private:
  PoleDivisor<T> divisor_;
  std::vector<BasisLabel<T>> labels_;
  std::vector<int> partner_;
};

template <class T>
OrderedPoleBasis<T> OrderedPoleBasis<T>::build(const PoleDivisor<T>& divisor) {
  OrderedPoleBasis<T> b;
  b.divisor_ = divisor;
  const auto& entries = divisor.entries();

  auto key = [](const T& z) {
    Complex c = quadbez::to_complex(z);
    return std::make_pair(c.real(), c.imag());
  };

  std::vector<int> real_idx, lower_idx;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k].cls == PoleClass::real) {
      real_idx.push_back(static_cast<int>(k));
    } else if (entries[k].cls == PoleClass::pair_lower) {
      if (entries[k].partner < 0)
        throw InvalidInput("ordered basis: unpaired complex pole");
      lower_idx.push_back(static_cast<int>(k));
    } else if (entries[k].partner < 0) {
      throw InvalidInput("ordered basis: unpaired complex pole");
    }
  }
  std::sort(real_idx.begin(), real_idx.end(), [&](int x, int y) {
    return key(entries[static_cast<std::size_t>(x)].pole) <
           key(entries[static_cast<std::size_t>(y)].pole);
  });
  std::sort(lower_idx.begin(), lower_idx.end(), [&](int x, int y) {
    return key(entries[static_cast<std::size_t>(x)].pole) <
           key(entries[static_cast<std::size_t>(y)].pole);
  });

  for (int ei : real_idx) {
    const auto& e = entries[static_cast<std::size_t>(ei)];
    for (int k = 0; k < e.multiplicity; ++k) {
      b.partner_.push_back(static_cast<int>(b.labels_.size()));
      b.labels_.push_back({e.pole, k, ei});
    }
  }
  for (int ei : lower_idx) {
    const auto& e = entries[static_cast<std::size_t>(ei)];
    const auto& p = entries[static_cast<std::size_t>(e.partner)];
    for (int k = 0; k < e.multiplicity; ++k) {
      int at = static_cast<int>(b.labels_.size());
      b.partner_.push_back(at + 1);
      b.labels_.push_back({e.pole, k, ei});
      b.partner_.push_back(at);
      b.labels_.push_back({p.pole, k, e.partner});
    }
  }
  return b;
}

template <class T>
std::pair<OrderedPoleBasis<T>, Matrix<T>> ordered_basis_and_j(
    const PoleDivisor<T>& d) {
  auto basis = OrderedPoleBasis<T>::build(d);
  auto j = basis.j_matrix();
  return {std::move(basis), std::move(j)};
}

// ---------------------------------------------------------------------------
// Partial fractions: the N x N change of basis M with
//   t^i / Q(t) = sum over labels (a,k) of M[i][(a,k)] * (t - a)^-(k+1).
// Column (a,k) of row i is read off the order-m Taylor expansion of
// t^i * (t-a)^m / Q(t) at a, computed by truncated series reciprocal.
template <class T>
Matrix<T> partial_fraction_matrix(const Polynomial<T>& q,
                                  const OrderedPoleBasis<T>& basis) {
  const int n = q.degree();
  if (basis.divisor().degree() != n)
    throw InvalidInput("partial fractions: divisor degree != deg Q");
  {
    // D must actually factor Q.
    Polynomial<T> rebuilt = basis.divisor().to_polynomial();
    Polynomial<T> diff = rebuilt - q.monic();
    double scale = std::max(1.0, q.monic().max_coeff_abs());
    if (diff.max_coeff_abs() > 1e-6 * scale)
      throw InvalidInput("partial fractions: divisor inconsistent with Q");
  }

  const std::size_t un = static_cast<std::size_t>(n);
  Matrix<T> m(un, un);

  // Group the interleaved labels by divisor entry; labels of one entry share
  // the pole and carry orders k = 0..mult-1.
  std::vector<std::vector<std::size_t>> cols_by_entry(
      basis.divisor().entries().size());
  for (std::size_t c = 0; c < basis.size(); ++c)
    cols_by_entry[static_cast<std::size_t>(basis.labels()[c].entry_index)]
        .push_back(c);

  const T one = scalar_from_int<T>(1);
  for (std::size_t ei = 0; ei < cols_by_entry.size(); ++ei) {
    if (cols_by_entry[ei].empty()) continue;
    const auto& entry = basis.divisor().entries()[ei];
    const T& a = entry.pole;
    const int mult = entry.multiplicity;
    const std::size_t um = static_cast<std::size_t>(mult);

    // R(t) = Q(t) / (t - a)^mult by synthetic division.
    Polynomial<T> r = q;
    for (int k = 0; k < mult; ++k) {
      const auto& rc = r.coeffs();
      std::vector<T> out(rc.size() - 1);
      T carry{};
      for (std::size_t j = rc.size(); j-- > 1;) {
        carry = rc[j] + a * carry;
        out[j - 1] = carry;
      }
      r = Polynomial<T>(std::move(out));
    }

    // Series of R(a + w) truncated to order mult, then its reciprocal.
    std::vector<T> dser = taylor_shift(r, a);
    dser.resize(um, T{});
    if (abs_of(dser[0]) <= 1e-14 * std::max(1.0, q.max_coeff_abs()))
      throw InvalidInput("partial fractions: divisor inconsistent with Q");
    std::vector<T> rec(um, T{});
    rec[0] = one / dser[0];
    for (std::size_t k = 1; k < um; ++k) {
      T acc{};
      for (std::size_t j = 1; j <= k; ++j) acc += dser[j] * rec[k - j];
      rec[k] = -(acc / dser[0]);
    }

    // Row i: series of (a + w)^i times rec, truncated; then
    // M[i][(a,k)] = coefficient of w^(mult-1-k).
    std::vector<T> pw(um, T{});
    pw[0] = one;
    for (int i = 0; i < n; ++i) {
      for (std::size_t c : cols_by_entry[ei]) {
        int k = basis.labels()[c].order;
        std::size_t want = um - 1 - static_cast<std::size_t>(k);
        T acc{};
        for (std::size_t j = 0; j <= want; ++j) acc += pw[j] * rec[want - j];
        m(static_cast<std::size_t>(i), c) = acc;
      }
      // pw *= (a + w) mod w^mult
      for (std::size_t j = um; j-- > 0;) {
        T v = a * pw[j];
        if (j > 0) v += pw[j - 1];
        pw[j] = v;
      }
    }
  }
  return m;
}

}  // namespace quadbez

#endif

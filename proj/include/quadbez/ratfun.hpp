#ifndef QUADBEZ_RATFUN_HPP
#define QUADBEZ_RATFUN_HPP

#include <utility>

#include "quadbez/polynomial.hpp"

namespace quadbez {

// Rational function num/den, normalized so den is monic and the pair is
// coprime (exactly in exact mode, to tolerance in double mode).
template <class T>
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial<T>::constant(scalar_from_int<T>(1))) {}

  RationalFunction(Polynomial<T> num, Polynomial<T> den, bool reduce_pair = true,
                   double reduce_tol = 1e-10)
      : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InvalidInput("rational function: zero denominator");
    if (reduce_pair) reduce(reduce_tol);
    T inv = scalar_from_int<T>(1) / den_.leading();
    num_ = inv * num_;
    den_ = inv * den_;
  }

  const Polynomial<T>& num() const { return num_; }
  const Polynomial<T>& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  // Degree as a map on the sphere.
  int map_degree() const { return std::max(num_.degree(), den_.degree()); }

  T operator()(const T& z) const { return num_(z) / den_(z); }

  RationalFunction tau() const {
    RationalFunction f;
    f.num_ = num_.tau();
    f.den_ = den_.tau();  // stays monic
    return f;
  }

  friend RationalFunction operator+(const RationalFunction& f,
                                    const RationalFunction& g) {
    return {f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_};
  }
  friend RationalFunction operator-(const RationalFunction& f,
                                    const RationalFunction& g) {
    return {f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_};
  }
  friend RationalFunction operator*(const T& s, const RationalFunction& f) {
    RationalFunction h = f;
    h.num_ = s * h.num_;
    return h;
  }

 private:
  void reduce(double tol) {
    if (num_.is_zero()) return;
    Polynomial<T> g;
    if constexpr (scalar_traits<T>::exact) {
      g = gcd_exact(num_, den_);
    } else {
      g = gcd_approx(num_, den_, tol);
    }
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }

  Polynomial<T> num_, den_;
};

// p(phi) as a rational function: sum a_j P^j Q^(n-j) over Q^n.
// No cancellation occurs when the leading coefficient is nonzero and
// P, Q are coprime, so the result is built unreduced.
template <class T>
RationalFunction<T> compose_poly_ratfun(const Polynomial<T>& p,
                                        const RationalFunction<T>& phi) {
  if (p.is_zero()) throw InvalidInput("compose: zero polynomial");
  const int n = p.degree();
  // Powers P^j and Q^(n-j) built incrementally.
  std::vector<Polynomial<T>> ppow(static_cast<std::size_t>(n) + 1),
      qpow(static_cast<std::size_t>(n) + 1);
  ppow[0] = Polynomial<T>::constant(scalar_from_int<T>(1));
  qpow[0] = ppow[0];
  for (int j = 1; j <= n; ++j) {
    ppow[static_cast<std::size_t>(j)] = ppow[static_cast<std::size_t>(j - 1)] * phi.num();
    qpow[static_cast<std::size_t>(j)] = qpow[static_cast<std::size_t>(j - 1)] * phi.den();
  }
  Polynomial<T> num;
  for (int j = 0; j <= n; ++j) {
    T a = p.coeff(j);
    if (exactly_zero(a)) continue;
    num = num + a * (ppow[static_cast<std::size_t>(j)] *
                     qpow[static_cast<std::size_t>(n - j)]);
  }
  return RationalFunction<T>(std::move(num), qpow[static_cast<std::size_t>(n)],
                             /*reduce_pair=*/false);
}

template <class T>
RationalFunction<T> ratfun_tau(const RationalFunction<T>& f) {
  return f.tau();
}

template <class T>
struct CommonDenominator {
  Polynomial<T> p1, p2, q;  // f = p1/q, g = p2/q, q monic lcm
};

// Rewrites f and g over the monic lcm of their denominators. Errors when a
// numerator ends up with higher degree than the lcm (pole at infinity): the
// caller must first apply a real Moebius change of variable.
template <class T>
CommonDenominator<T> to_common_denominator(const RationalFunction<T>& f,
                                           const RationalFunction<T>& g,
                                           double tol = 1e-8) {
  Polynomial<T> d1 = f.den(), d2 = g.den();
  Polynomial<T> gcd;
  if constexpr (scalar_traits<T>::exact) {
    gcd = gcd_exact(d1, d2);
  } else {
    gcd = gcd_approx(d1, d2, tol);
  }
  // d1, d2, and gcd are monic, so d1 * (d2 / gcd) is monic as well.
  Polynomial<T> cof2 = gcd.degree() > 0 ? divmod(d2, gcd).first : d2;
  Polynomial<T> q = d1 * cof2;
  Polynomial<T> p1 = f.num() * cof2;
  Polynomial<T> cof1 = gcd.degree() > 0 ? divmod(d1, gcd).first : d1;
  Polynomial<T> p2 = g.num() * cof1;
  if (p1.degree() > q.degree() || p2.degree() > q.degree())
    throw InvalidInput(
        "pole at infinity: numerator degree exceeds the common denominator; "
        "apply a real Moebius change of variable first");
  return {std::move(p1), std::move(p2), std::move(q)};
}

}  // namespace quadbez

#endif

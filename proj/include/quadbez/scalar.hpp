#ifndef QUADBEZ_SCALAR_HPP
#define QUADBEZ_SCALAR_HPP

#include <complex>
#include <cstdlib>
#include <string>
#include <type_traits>

#include <gmpxx.h>

namespace quadbez {

using Complex = std::complex<double>;

// Exact Gaussian rational (a + b*i)/c with arbitrary-precision integers,
// kept in the canonical form c > 0, gcd(a, b, c) = 1.
class GaussianRational {
 public:
  GaussianRational() : a_(0), b_(0), c_(1) {}
  GaussianRational(long v) : a_(v), b_(0), c_(1) {}  // NOLINT: implicit on purpose
  GaussianRational(mpz_class a, mpz_class b, mpz_class c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    canonicalize();
  }

  static GaussianRational from_rationals(const mpq_class& re,
                                         const mpq_class& im) {
    mpz_class c = re.get_den() * im.get_den() / gcd(re.get_den(), im.get_den());
    mpz_class a = re.get_num() * (c / re.get_den());
    mpz_class b = im.get_num() * (c / im.get_den());
    return {a, b, c};
  }

  static GaussianRational i() { return {0, 1, 1}; }

  const mpz_class& num_re() const { return a_; }
  const mpz_class& num_im() const { return b_; }
  const mpz_class& den() const { return c_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_real() const { return b_ == 0; }
  // Sign of the real part; only meaningful for real values.
  int real_sign() const { return sgn(a_); }

  mpq_class real() const { return canon_q(a_, c_); }
  mpq_class imag() const { return canon_q(b_, c_); }

  Complex to_complex() const {
    return {mpq_class(canon_q(a_, c_)).get_d(),
            mpq_class(canon_q(b_, c_)).get_d()};
  }

  GaussianRational conj() const { return {a_, -b_, c_}; }

  GaussianRational operator-() const { return {-a_, -b_, c_}; }

  friend GaussianRational operator+(const GaussianRational& x,
                                    const GaussianRational& y) {
    return {x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_};
  }
  friend GaussianRational operator-(const GaussianRational& x,
                                    const GaussianRational& y) {
    return {x.a_ * y.c_ - y.a_ * x.c_, x.b_ * y.c_ - y.b_ * x.c_, x.c_ * y.c_};
  }
  friend GaussianRational operator*(const GaussianRational& x,
                                    const GaussianRational& y) {
    return {x.a_ * y.a_ - x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_,
            x.c_ * y.c_};
  }
  friend GaussianRational operator/(const GaussianRational& x,
                                    const GaussianRational& y);

  GaussianRational& operator+=(const GaussianRational& y) { return *this = *this + y; }
  GaussianRational& operator-=(const GaussianRational& y) { return *this = *this - y; }
  GaussianRational& operator*=(const GaussianRational& y) { return *this = *this * y; }
  GaussianRational& operator/=(const GaussianRational& y) { return *this = *this / y; }

  friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }
  friend bool operator!=(const GaussianRational& x, const GaussianRational& y) {
    return !(x == y);
  }

  // Canonical "(a+bi)/c" form, e.g. "(3-2i)/4".
  std::string str() const;

 private:
  static mpz_class gcd(const mpz_class& x, const mpz_class& y) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return g;
  }
  static mpq_class canon_q(const mpz_class& n, const mpz_class& d) {
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  }
  void canonicalize();

  mpz_class a_, b_, c_;
};

// ---------------------------------------------------------------------------
// Uniform scalar operations so the algebra layer can be written once for both
// modes. Tolerances are honored in double mode and ignored in exact mode.

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Complex> {
  static constexpr bool exact = false;
  static const char* mode_name() { return "double"; }
};

template <>
struct scalar_traits<GaussianRational> {
  static constexpr bool exact = true;
  static const char* mode_name() { return "exact"; }
};

inline Complex conj_of(const Complex& z) { return std::conj(z); }
inline GaussianRational conj_of(const GaussianRational& z) { return z.conj(); }

inline bool exactly_zero(const Complex& z) { return z == Complex(0.0, 0.0); }
inline bool exactly_zero(const GaussianRational& z) { return z.is_zero(); }

inline double abs_of(const Complex& z) { return std::abs(z); }
inline double abs_of(const GaussianRational& z) { return std::abs(z.to_complex()); }

inline Complex to_complex(const Complex& z) { return z; }
inline Complex to_complex(const GaussianRational& z) { return z.to_complex(); }

template <class T>
T scalar_from_int(long v) {
  return T(v);
}
template <>
inline Complex scalar_from_int<Complex>(long v) {
  return Complex(static_cast<double>(v), 0.0);
}

// The imaginary unit in either mode.
template <class T>
T scalar_i();
template <>
inline Complex scalar_i<Complex>() {
  return Complex(0.0, 1.0);
}
template <>
inline GaussianRational scalar_i<GaussianRational>() {
  return GaussianRational::i();
}

// 1/(2i) = -i/2, the Hermitian-form prefactor.
template <class T>
T half_over_i();
template <>
inline Complex half_over_i<Complex>() {
  return Complex(0.0, -0.5);
}
template <>
inline GaussianRational half_over_i<GaussianRational>() {
  return GaussianRational(0, -1, 2);
}

// String form matching the wire format: "a+bi" in double mode,
// "(a+bi)/c" in exact mode.
std::string scalar_str(const Complex& z);
std::string scalar_str(const GaussianRational& z);

// Parse either wire format (also accepts bare integers, fractions "p/q",
// decimals, and the shorthands "i", "-i", "2i", "1+2i").
Complex parse_complex(const std::string& s);
GaussianRational parse_gaussian_rational(const std::string& s);

}  // namespace quadbez

#endif

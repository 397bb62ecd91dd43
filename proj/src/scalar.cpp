#include "quadbez/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "quadbez/errors.hpp"

namespace quadbez {

GaussianRational operator/(const GaussianRational& x,
                           const GaussianRational& y) {
  if (y.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  // x / y = x * conj(y) * c_y / (|num y|^2)
  mpz_class n2 = y.a_ * y.a_ + y.b_ * y.b_;
  return {(x.a_ * y.a_ + x.b_ * y.b_) * y.c_,
          (x.b_ * y.a_ - x.a_ * y.b_) * y.c_, x.c_ * n2};
}

void GaussianRational::canonicalize() {
  if (c_ == 0) throw std::domain_error("GaussianRational: zero denominator");
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  mpz_class g = gcd(gcd(abs(a_), abs(b_)), c_);
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

std::string GaussianRational::str() const {
  std::string s = "(" + a_.get_str();
  s += (b_ >= 0) ? "+" : "-";
  mpz_class babs = abs(b_);
  s += babs.get_str() + "i)/" + c_.get_str();
  return s;
}

namespace {

std::string fmt_double(double v) {
  if (v == 0.0) v = 0.0;  // collapse -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Splits "re<sign>im i" at the top-level sign separating the two parts.
// Returns false when the string is a single (real or pure-imaginary) term.
bool split_complex_parts(const std::string& body, std::string* re_part,
                         std::string* im_part) {
  // Find a '+' or '-' that is not a leading sign and not an exponent sign.
  for (std::size_t k = 1; k < body.size(); ++k) {
    char ch = body[k];
    if (ch != '+' && ch != '-') continue;
    char prev = body[k - 1];
    if (prev == 'e' || prev == 'E') continue;  // 1e-3
    *re_part = body.substr(0, k);
    *im_part = body.substr(k);
    return true;
  }
  return false;
}

double parse_real_token(const std::string& tok) {
  if (tok.empty()) throw InvalidInput("empty numeric token");
  std::size_t slash = tok.find('/');
  char* end = nullptr;
  if (slash != std::string::npos) {
    double n = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + slash) throw InvalidInput("bad fraction: " + tok);
    double d = std::strtod(tok.c_str() + slash + 1, &end);
    if (*end != '\0' || d == 0.0) throw InvalidInput("bad fraction: " + tok);
    return n / d;
  }
  double v = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size()) throw InvalidInput("bad number: " + tok);
  return v;
}

// Imaginary parts arrive as "i", "+i", "-i", "2i", "-0.5i", ...
double parse_imag_token(std::string tok) {
  if (tok.empty() || tok.back() != 'i') throw InvalidInput("bad imaginary token");
  tok.pop_back();
  if (tok.empty() || tok == "+") return 1.0;
  if (tok == "-") return -1.0;
  return parse_real_token(tok);
}

mpq_class parse_rational_token(std::string tok) {
  if (!tok.empty() && tok.front() == '+') tok.erase(0, 1);  // gmp rejects '+'
  if (tok.empty()) throw InvalidInput("empty numeric token");
  std::size_t dot = tok.find('.');
  if (dot != std::string::npos) {
    // Decimal literal -> exact rational (digits / power of ten).
    std::string digits = tok.substr(0, dot) + tok.substr(dot + 1);
    std::size_t frac_len = tok.size() - dot - 1;
    if (digits.empty() || digits == "+" || digits == "-")
      throw InvalidInput("bad decimal: " + tok);
    mpz_class num;
    if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
      throw InvalidInput("bad decimal: " + tok);
    mpz_class den = 1;
    for (std::size_t k = 0; k < frac_len; ++k) den *= 10;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), tok.c_str(), 10) != 0)
    throw InvalidInput("bad rational: " + tok);
  if (q.get_den() == 0) throw InvalidInput("zero denominator: " + tok);
  q.canonicalize();
  return q;
}

mpq_class parse_rational_imag_token(std::string tok) {
  if (tok.empty() || tok.back() != 'i') throw InvalidInput("bad imaginary token");
  tok.pop_back();
  if (tok.empty() || tok == "+") return {1};
  if (tok == "-") return {-1};
  return parse_rational_token(tok);
}

}  // namespace

std::string scalar_str(const Complex& z) {
  std::string s = fmt_double(z.real());
  double im = z.imag() == 0.0 ? 0.0 : z.imag();
  s += (im >= 0.0 || std::isnan(im)) ? "+" : "-";
  s += fmt_double(std::abs(im)) + "i";
  return s;
}

std::string scalar_str(const GaussianRational& z) { return z.str(); }

Complex parse_complex(const std::string& s) {
  std::string body = s;
  // Tolerate the exact-mode wrapper "(...)/c".
  if (!body.empty() && body.front() == '(') {
    std::size_t close = body.find(')');
    if (close == std::string::npos) throw InvalidInput("unbalanced '(': " + s);
    std::string inner = body.substr(1, close - 1);
    std::string tail = body.substr(close + 1);
    double den = 1.0;
    if (!tail.empty()) {
      if (tail.front() != '/') throw InvalidInput("bad scalar: " + s);
      den = parse_real_token(tail.substr(1));
      if (den == 0.0) throw InvalidInput("zero denominator: " + s);
    }
    return parse_complex(inner) / den;
  }
  if (body.empty()) throw InvalidInput("empty scalar");
  std::string re_part, im_part;
  if (split_complex_parts(body, &re_part, &im_part))
    return {parse_real_token(re_part), parse_imag_token(im_part)};
  if (body.back() == 'i') return {0.0, parse_imag_token(body)};
  return {parse_real_token(body), 0.0};
}

GaussianRational parse_gaussian_rational(const std::string& s) {
  std::string body = s;
  mpq_class den{1};
  if (!body.empty() && body.front() == '(') {
    std::size_t close = body.find(')');
    if (close == std::string::npos) throw InvalidInput("unbalanced '(': " + s);
    std::string tail = body.substr(close + 1);
    body = body.substr(1, close - 1);
    if (!tail.empty()) {
      if (tail.front() != '/') throw InvalidInput("bad scalar: " + s);
      den = parse_rational_token(tail.substr(1));
      if (den == 0) throw InvalidInput("zero denominator: " + s);
    }
  }
  if (body.empty()) throw InvalidInput("empty scalar");
  mpq_class re{0}, im{0};
  std::string re_part, im_part;
  if (split_complex_parts(body, &re_part, &im_part)) {
    re = parse_rational_token(re_part);
    im = parse_rational_imag_token(im_part);
  } else if (body.back() == 'i') {
    im = parse_rational_imag_token(body);
  } else {
    re = parse_rational_token(body);
  }
  re /= den;
  im /= den;
  re.canonicalize();
  im.canonicalize();
  return GaussianRational::from_rationals(re, im);
}

}  // namespace quadbez

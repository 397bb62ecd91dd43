#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "quadbez/errors.hpp"
#include "quadbez/scalar.hpp"

using namespace quadbez;

TEST_CASE("gaussian rational canonical form") {
  GaussianRational a(2, -4, 6);  // (2-4i)/6 -> (1-2i)/3
  CHECK(a.num_re() == 1);
  CHECK(a.num_im() == -2);
  CHECK(a.den() == 3);

  GaussianRational b(1, 0, -2);  // negative denominator normalizes
  CHECK(b.den() == 2);
  CHECK(b.num_re() == -1);

  CHECK(GaussianRational(0, 0, 5) == GaussianRational(0));
  CHECK_THROWS_AS(GaussianRational(1, 1, 0), std::domain_error);
}

TEST_CASE("gaussian rational arithmetic") {
  GaussianRational half(1, 0, 2), i(0, 1, 1);
  CHECK(half + half == GaussianRational(1));
  CHECK(i * i == GaussianRational(-1));
  CHECK((half * i) / i == half);
  CHECK(i.conj() == -i);
  CHECK(i.conj().conj() == i);
  CHECK_THROWS_AS(half / GaussianRational(0), std::domain_error);

  // Division really inverts multiplication.
  GaussianRational x(3, -7, 5), y(-2, 9, 11);
  CHECK((x * y) / y == x);
  CHECK(x + (-x) == GaussianRational(0));
}

TEST_CASE("exact scalar string round trip") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<long> coeff(-50, 50), den(1, 40);
  for (int it = 0; it < 100; ++it) {
    GaussianRational x(coeff(rng), coeff(rng), den(rng));
    CHECK(parse_gaussian_rational(x.str()) == x);
  }
  CHECK(GaussianRational(3, -2, 4).str() == "(3-2i)/4");
  CHECK(GaussianRational(0).str() == "(0+0i)/1");
}

TEST_CASE("scalar parsing accepts the shorthand forms") {
  CHECK(parse_gaussian_rational("5") == GaussianRational(5));
  CHECK(parse_gaussian_rational("-3/6") == GaussianRational(-1, 0, 2));
  CHECK(parse_gaussian_rational("i") == GaussianRational::i());
  CHECK(parse_gaussian_rational("-i") == GaussianRational(0, -1, 1));
  CHECK(parse_gaussian_rational("1+2i") == GaussianRational(1, 2, 1));
  CHECK(parse_gaussian_rational("0.25") == GaussianRational(1, 0, 4));
  CHECK(parse_gaussian_rational("1.5-0.5i") == GaussianRational(3, -1, 2));
  CHECK_THROWS_AS(parse_gaussian_rational("zebra"), InvalidInput);
  CHECK_THROWS_AS(parse_gaussian_rational("1/0"), InvalidInput);

  CHECK(parse_complex("1+2i") == Complex(1, 2));
  CHECK(parse_complex("-i") == Complex(0, -1));
  CHECK(parse_complex("2.5e-3") == Complex(2.5e-3, 0));
  CHECK(parse_complex("1e-3-2e-4i") == Complex(1e-3, -2e-4));
  CHECK(parse_complex("(1-2i)/2") == Complex(0.5, -1));
  CHECK_THROWS_AS(parse_complex(""), InvalidInput);
}

TEST_CASE("double scalar strings are canonical and reparseable") {
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int it = 0; it < 100; ++it) {
    Complex z(u(rng), u(rng));
    CHECK(parse_complex(scalar_str(z)) == z);  // %.17g is lossless
  }
  CHECK(scalar_str(Complex(1.0, 0.0)) == "1+0i");
  CHECK(scalar_str(Complex(0.0, -2.0)) == "0-2i");
  CHECK(scalar_str(Complex(-0.0, -0.0)) == "0+0i");
}

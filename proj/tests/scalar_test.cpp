#include "hermite2d/errors.hpp"
#include "hermite2d/scalar.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hermite2d;

namespace {

ExactScalar sc(int n) { return ExactScalar(n); }
ExactScalar frac(int a, int b) { return ExactScalar(make_rational(a, b)); }
ExactScalar gauss(int re_n, int re_d, int im_n, int im_d) {
  return ExactScalar(GaussianRational(make_rational(re_n, re_d), make_rational(im_n, im_d)));
}

struct Rng {
  std::mt19937 gen{20240917};

  BigRational rational() {
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 12);
    return make_rational(num(gen), den(gen));
  }
  GaussianRational gaussian() { return {rational(), rational()}; }
  ExactScalar scalar() { return {gaussian(), gaussian()}; }
  ExactScalar real_scalar() {
    return {GaussianRational(rational()), GaussianRational(rational())};
  }
};

}  // namespace

TEST_CASE("multiplication in Q(i,sqrt2)") {
  CHECK(sc(1) * ExactScalar::sqrt2() == ExactScalar::sqrt2());
  CHECK(ExactScalar::sqrt2() * ExactScalar::sqrt2() == sc(2));
  CHECK(ExactScalar::i() * ExactScalar::i() == sc(-1));
  CHECK((sc(1) + ExactScalar::sqrt2()) * (sc(-1) + ExactScalar::sqrt2()) == sc(1));
}

TEST_CASE("inverse") {
  CHECK(sc(2).inverse() == frac(1, 2));
  CHECK(ExactScalar::sqrt2().inverse() == frac(1, 2) * ExactScalar::sqrt2());
  // (1+sqrt2)(-1+sqrt2) = 1, checked above, so the inverse is forced:
  CHECK((sc(1) + ExactScalar::sqrt2()).inverse() == sc(-1) + ExactScalar::sqrt2());
  CHECK_THROWS_AS(sc(0).inverse(), std::domain_error);
}

TEST_CASE("conjugation") {
  CHECK(ExactScalar::i().conj() == -ExactScalar::i());
  const ExactScalar x{GaussianRational(BigRational(1), BigRational(2)),
                      GaussianRational(BigRational(3), BigRational(-1))};
  const ExactScalar expected{GaussianRational(BigRational(1), BigRational(-2)),
                             GaussianRational(BigRational(3), BigRational(1))};
  CHECK(x.conj() == expected);
  const ExactScalar real = frac(3, 7) + frac(-2, 5) * ExactScalar::sqrt2();
  CHECK(real.conj() == real);
  CHECK(x.conj().conj() == x);
}

TEST_CASE("exact sign of real elements") {
  CHECK(sign(sc(3) - sc(2) * ExactScalar::sqrt2()) == Sign::positive);
  CHECK(sign(sc(1) - ExactScalar::sqrt2()) == Sign::negative);
  CHECK(sign(sc(0)) == Sign::zero);
  CHECK(sign(-sc(3) + sc(2) * ExactScalar::sqrt2()) == Sign::negative);
  CHECK(sign(ExactScalar::sqrt2()) == Sign::positive);
  CHECK_THROWS_AS(sign(ExactScalar::i()), NotRealError);
  // cross-check the close call numerically: 3 - 2*1.414.. > 0
  CHECK((sc(3) - sc(2) * ExactScalar::sqrt2()).to_complex().real() > 0.0);
}

TEST_CASE("floating conversion") {
  const auto half = gauss(1, 2, 1, 2).to_complex();
  CHECK(half.real() == 0.5);
  CHECK(half.imag() == 0.5);
  CHECK(ExactScalar::sqrt2().to_complex().real() == 1.4142135623730951);
  BigInt huge = 1;
  for (int k = 0; k < 400; ++k) huge *= 10;
  CHECK_THROWS_AS(ExactScalar(BigRational(huge)).to_complex(), std::overflow_error);
}

TEST_CASE("field axioms on random triples") {
  Rng rng;
  for (int iter = 0; iter < 200; ++iter) {
    const ExactScalar a = rng.scalar();
    const ExactScalar b = rng.scalar();
    const ExactScalar c = rng.scalar();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + sc(0) == a);
    CHECK(a * sc(1) == a);
    CHECK(a - a == sc(0));
  }
}

TEST_CASE("inverse is two-sided on 1000 random nonzero elements") {
  Rng rng;
  int done = 0;
  while (done < 1000) {
    const ExactScalar a = rng.scalar();
    if (a.is_zero()) continue;
    CHECK(a * a.inverse() == sc(1));
    CHECK(a.inverse() * a == sc(1));
    ++done;
  }
}

TEST_CASE("sign agrees with the floating image away from zero") {
  Rng rng;
  for (int iter = 0; iter < 500; ++iter) {
    const ExactScalar a = rng.real_scalar();
    const double f = a.to_complex().real();
    if (std::abs(f) <= 1e-6) continue;
    CHECK(sign(a) == (f > 0 ? Sign::positive : Sign::negative));
  }
}

TEST_CASE("conjugation is a ring homomorphism") {
  Rng rng;
  for (int iter = 0; iter < 200; ++iter) {
    const ExactScalar a = rng.scalar();
    const ExactScalar b = rng.scalar();
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
  }
}

TEST_CASE("canonical rendering") {
  CHECK(to_string(sc(0)) == "0");
  CHECK(to_string(sc(-3)) == "-3");
  CHECK(to_string(frac(-3, 2)) == "-3/2");
  CHECK(to_string(ExactScalar::i()) == "i");
  CHECK(to_string(-ExactScalar::i()) == "-i");
  CHECK(to_string(gauss(1, 1, 2, 1)) == "1+2i");
  CHECK(to_string(gauss(3, 1, -1, 1)) == "3-i");
  CHECK(to_string(gauss(0, 1, 1, 3)) == "1/3i");
  CHECK(to_string(ExactScalar::sqrt2()) == "(1)√2");
  CHECK(to_string(frac(1, 2) * ExactScalar::sqrt2()) == "(1/2)√2");
  const ExactScalar mixed = gauss(1, 1, -2, 1) + gauss(3, 1, 1, 1) * ExactScalar::sqrt2();
  CHECK(to_string(mixed) == "(1-2i)+(3+i)√2");
}

TEST_CASE("parsing") {
  CHECK(parse_scalar("0") == sc(0));
  CHECK(parse_scalar("-3/2") == frac(-3, 2));
  CHECK(parse_scalar("i") == ExactScalar::i());
  CHECK(parse_scalar("-i") == -ExactScalar::i());
  CHECK(parse_scalar("1/2+1/3i") == gauss(1, 2, 1, 3));
  CHECK(parse_scalar("√2") == ExactScalar::sqrt2());
  CHECK(parse_scalar("sqrt2") == ExactScalar::sqrt2());
  CHECK(parse_scalar("(1/2)sqrt(2)") == frac(1, 2) * ExactScalar::sqrt2());
  CHECK(parse_scalar("1+√2") == sc(1) + ExactScalar::sqrt2());
  CHECK(parse_scalar("(1-2i)+(3+i)√2") ==
        gauss(1, 1, -2, 1) + gauss(3, 1, 1, 1) * ExactScalar::sqrt2());
  CHECK_THROWS_AS(parse_scalar("z9"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1+"), ParseError);
  CHECK_THROWS_AS(parse_scalar("(1"), ParseError);
}

TEST_CASE("render/parse round-trip on random elements") {
  Rng rng;
  for (int iter = 0; iter < 300; ++iter) {
    const ExactScalar a = rng.scalar();
    CHECK(parse_scalar(to_string(a)) == a);
  }
}

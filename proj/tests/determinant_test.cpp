#include "hermite2d/determinant.hpp"
#include "hermite2d/errors.hpp"

#include <doctest.h>

using namespace hermite2d;

namespace {

BigRational q(int a, int b = 1) { return make_rational(a, b); }

ExactMatrix from_entries(int n, int pi_power, std::vector<ExactScalar> entries) {
  ExactMatrix m;
  m.n = n;
  m.pi_power = pi_power;
  m.entries = std::move(entries);
  return m;
}

}  // namespace

TEST_CASE("Hankel matrix entries") {
  const HankelSpec one{GMatrix::identity(), 1, 0, q(2, 7), q(-1, 3)};
  const ExactMatrix m1 = hankel_matrix(one);
  CHECK(m1.n == 1);
  CHECK(m1.pi_power == 1);
  CHECK(m1.at(0, 0) == ExactScalar(1));

  // z = 1/2 + 1/3 i: rows ((1, conj z), (z, |z|^2 + 1))
  const GaussianRational z(q(1, 2), q(1, 3));
  const HankelSpec two{GMatrix::identity(), 2, 0, z.re, z.im};
  const ExactMatrix m2 = hankel_matrix(two);
  CHECK(m2.at(0, 0) == ExactScalar(1));
  CHECK(m2.at(0, 1) == ExactScalar(z.conj()));
  CHECK(m2.at(1, 0) == ExactScalar(z));
  CHECK(m2.at(1, 1) == ExactScalar(z.norm2() + 1));

  const HankelSpec shifted{GMatrix::identity(), 1, 1, z.re, z.im};
  CHECK(hankel_matrix(shifted).at(0, 0) == ExactScalar(z.norm2() + 1));

  CHECK_THROWS_AS(hankel_matrix(HankelSpec{parse_gmatrix("1,1;0,1"), 1, 0, q(0), q(0)}),
                  std::invalid_argument);
}

TEST_CASE("exact determinants by elimination") {
  const ExactScalar zero(0), one(1);
  CHECK(exact_determinant(from_entries(3, 0,
                                       {one, zero, zero, zero, one, zero, zero, zero, one})) ==
        ScaledExact(one, 0));

  const GaussianRational z(q(1, 2), q(1, 3));
  const ExactMatrix m = from_entries(
      2, 1, {one, ExactScalar(z.conj()), ExactScalar(z), ExactScalar(z.norm2() + 1)});
  CHECK(exact_determinant(m) == ScaledExact(one, 2));

  CHECK(exact_determinant(from_entries(2, 1, {one, one, one, one})) ==
        ScaledExact(zero, 0));

  // row swaps flip the sign
  const ExactMatrix swapped = from_entries(2, 0, {zero, one, one, zero});
  CHECK(exact_determinant(swapped) == ScaledExact(-one, 0));
}

TEST_CASE("positivity of the Hankel determinant") {
  const auto p1 = positivity_check(HankelSpec{GMatrix::identity(), 1, 0, q(0), q(0)});
  CHECK(p1.positive);
  CHECK(p1.value == ScaledExact(ExactScalar(1), 1));

  for (const GaussianRational& z :
       {GaussianRational(0), GaussianRational(q(3, 4), q(-2, 5))}) {
    const auto p2 = positivity_check(HankelSpec{GMatrix::identity(), 2, 0, z.re, z.im});
    CHECK(p2.positive);
    CHECK(p2.value == ScaledExact(ExactScalar(1), 2));
  }

  const auto p3 =
      positivity_check(HankelSpec{parse_gmatrix("1,i;-i,1"), 2, 1, q(1, 2), q(1, 3)});
  CHECK(p3.positive);

  for (const char* gs : {"1,0;0,1", "2,i;-i,2", "1,1-i;1+i,1"}) {
    const GMatrix g = parse_gmatrix(gs);
    for (int N = 1; N <= 3; ++N)
      for (int s = 0; s <= 2; ++s)
        CHECK(positivity_check(HankelSpec{g, N, s, q(1, 2), q(1, 3)}).positive);
  }
}

TEST_CASE("Hankel symmetry for the identity deformation at real points") {
  const HankelSpec spec{GMatrix::identity(), 3, 1, q(2, 3), q(0)};
  const ExactMatrix m = hankel_matrix(spec);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(m.at(r, c) == m.at(c, r));
  // transposing leaves the determinant unchanged
  ExactMatrix t = m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) t.at(r, c) = m.at(c, r);
  CHECK(exact_determinant(t) == exact_determinant(m));
}

TEST_CASE("integral oracle at the identity deformation") {
  CHECK(oracle_delta(HankelSpec{GMatrix::identity(), 1, 0, q(4, 5), q(-1, 9)}) ==
        ScaledExact(ExactScalar(1), 1));
  CHECK(oracle_delta(HankelSpec{GMatrix::identity(), 2, 0, q(1, 2), q(1, 3)}) ==
        ScaledExact(ExactScalar(1), 2));
  const BigRational x0 = q(1, 2), y0 = q(1, 3);
  CHECK(oracle_delta(HankelSpec{GMatrix::identity(), 1, 1, x0, y0}) ==
        ScaledExact(ExactScalar(x0 * x0 + y0 * y0 + 1), 1));
}

TEST_CASE("oracle equals the determinant route") {
  for (const char* gs : {"1,0;0,1", "2,i;-i,2", "1,1-i;1+i,1"}) {
    const GMatrix g = parse_gmatrix(gs);
    for (int N = 1; N <= 2; ++N)
      for (int s = 0; s <= 1; ++s)
        for (const GaussianRational& z :
             {GaussianRational(0), GaussianRational(q(1, 2), q(1, 3))}) {
          const HankelSpec spec{g, N, s, z.re, z.im};
          CHECK(oracle_delta(spec) == exact_determinant(hankel_matrix(spec)));
        }
  }
}

TEST_CASE("oracle range limits") {
  CHECK_THROWS_AS(oracle_delta(HankelSpec{GMatrix::identity(), 3, 0, q(0), q(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(oracle_delta(HankelSpec{GMatrix::identity(), 2, 2, q(0), q(0)}),
                  std::invalid_argument);
}

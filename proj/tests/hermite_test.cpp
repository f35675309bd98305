#include "hermite2d/hermite.hpp"

#include <doctest.h>

using namespace hermite2d;

namespace {

SparsePoly var(Var v, int e = 1) { return SparsePoly::variable(v, e); }
SparsePoly constant(int n) { return SparsePoly(ExactScalar(n)); }
ExactScalar frac(int a, int b) { return ExactScalar(make_rational(a, b)); }

const GMatrix kSwap = GMatrix::swap();
const GMatrix kShear = parse_gmatrix("1,1;0,1");
const GMatrix kDiag23 = parse_gmatrix("2,0;0,3");
const GMatrix kHerm = parse_gmatrix("2,i;-i,2");

}  // namespace

TEST_CASE("real Hermite recurrence values") {
  CHECK(real_hermite(0) == constant(1));
  CHECK(real_hermite(1) == ExactScalar(2) * var(Var::x));
  CHECK(real_hermite(2) == ExactScalar(4) * var(Var::x, 2) - constant(2));
  CHECK(real_hermite(3) == ExactScalar(8) * var(Var::x, 3) - ExactScalar(12) * var(Var::x));
}

TEST_CASE("Rodrigues route matches the recurrence") {
  CHECK(real_hermite_rodrigues(1) == ExactScalar(2) * var(Var::x));
  CHECK(real_hermite_rodrigues(2) == ExactScalar(4) * var(Var::x, 2) - constant(2));
  for (int n = 0; n <= 12; ++n) CHECK(real_hermite_rodrigues(n) == real_hermite(n));
}

TEST_CASE("bivariate Hermite explicit sum") {
  for (int n = 0; n <= 5; ++n) CHECK(complex_hermite(0, n) == var(Var::z2, n));
  CHECK(complex_hermite(1, 1) == var(Var::z1) * var(Var::z2) - constant(1));
  CHECK(complex_hermite(2, 1) ==
        var(Var::z1, 2) * var(Var::z2) - ExactScalar(2) * var(Var::z1));
}

TEST_CASE("index swap mirrors the variables") {
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n) {
      AffineMap swap_vars;
      swap_vars[Var::z1] = LinearForm{{{Var::z2, ExactScalar(1)}}, ExactScalar(0)};
      swap_vars[Var::z2] = LinearForm{{{Var::z1, ExactScalar(1)}}, ExactScalar(0)};
      CHECK(substitute(complex_hermite(m, n), swap_vars) == complex_hermite(n, m));
    }
}

TEST_CASE("leading term is z1^m z2^n") {
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n) {
      const SparsePoly p = complex_hermite(m, n);
      CHECK(p.degree() == m + n);
      ExpVec lead{};
      exp_of(lead, Var::z1) = static_cast<std::uint16_t>(m);
      exp_of(lead, Var::z2) = static_cast<std::uint16_t>(n);
      CHECK(p.coefficient(lead) == ExactScalar(1));
    }
}

TEST_CASE("raising-operator route") {
  CHECK(complex_hermite_operator(0, 0) == constant(1));
  CHECK(complex_hermite_operator(1, 1) == var(Var::z1) * var(Var::z2) - constant(1));
  CHECK(complex_hermite_operator(3, 2) == complex_hermite(3, 2));
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      CHECK(complex_hermite_operator(m, n) == complex_hermite(m, n));
}

TEST_CASE("deformed Rodrigues route") {
  CHECK(deformed_rodrigues(GMatrix::identity(), 1, 1) ==
        var(Var::z1) * var(Var::z2) - constant(1));
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      CHECK(deformed_rodrigues(GMatrix::identity(), m, n) == complex_hermite(m, n));
  CHECK(deformed_rodrigues(kSwap, 2, 1) ==
        var(Var::z1) * var(Var::z2, 2) - ExactScalar(2) * var(Var::z2));
}

TEST_CASE("deformed binomial sum") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      CHECK(deformed_sum(GMatrix::identity(), m, n) == complex_hermite(m, n));
  CHECK(deformed_sum(parse_gmatrix("1,0;0,2"), 1, 1) ==
        ExactScalar(2) * (var(Var::z1) * var(Var::z2)) - constant(2));
  CHECK(deformed_sum(parse_gmatrix("i,0;0,1"), 1, 1) ==
        ExactScalar::i() * (var(Var::z1) * var(Var::z2)) - SparsePoly(ExactScalar::i()));
}

TEST_CASE("swap identity") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      CHECK(deformed_sum(kSwap, m, n) == complex_hermite(n, m));
}

TEST_CASE("deformation matrix") {
  for (int L = 0; L <= 8; ++L) {
    const DeformationMatrix M = deformation_matrix(GMatrix::identity(), L);
    for (int r = 0; r <= L; ++r)
      for (int k = 0; k <= L; ++k)
        CHECK(M.at(r, k) == (r == k ? ExactScalar(1) : ExactScalar(0)));
  }
  const DeformationMatrix S = deformation_matrix(kSwap, 1);
  CHECK(S.at(0, 0) == ExactScalar(0));
  CHECK(S.at(0, 1) == ExactScalar(1));
  CHECK(S.at(1, 0) == ExactScalar(1));
  CHECK(S.at(1, 1) == ExactScalar(0));
  const DeformationMatrix T = deformation_matrix(kShear, 1);
  CHECK(T.at(0, 0) == ExactScalar(1));
  CHECK(T.at(0, 1) == ExactScalar(0));
  CHECK(T.at(1, 0) == ExactScalar(1));
  CHECK(T.at(1, 1) == ExactScalar(1));
}

TEST_CASE("matrix route") {
  CHECK(deformed_via_matrix(GMatrix::identity(), 1, 2) == complex_hermite(1, 1));
  CHECK(deformed_via_matrix(kSwap, 0, 1) == complex_hermite(1, 0));
  CHECK(deformed_via_matrix(kShear, 1, 2) == deformed_sum(kShear, 1, 1));
  CHECK_THROWS_AS(deformed_via_matrix(kSwap, 3, 2), std::out_of_range);
}

TEST_CASE("generating-series table") {
  const auto id_table = gf_table(GMatrix::identity(), 4);
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; m + n <= 4; ++n) CHECK(id_table.at({m, n}) == complex_hermite(m, n));
  const GMatrix g = parse_gmatrix("1,i;-i,1");
  const auto table = gf_table(g, 3);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; m + n <= 3; ++n) CHECK(table.at({m, n}) == deformed_sum(g, m, n));
}

TEST_CASE("conjugation sandwich route") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      CHECK(sandwich_route(GMatrix::identity(), m, n) == complex_hermite(m, n));
  CHECK(sandwich_route(kSwap, 1, 0) == var(Var::z2));
  CHECK(sandwich_route(kDiag23, 1, 1) ==
        ExactScalar(6) * (var(Var::z1) * var(Var::z2)) - constant(6));
}

TEST_CASE("all five construction routes agree") {
  const std::vector<GMatrix> gs = {GMatrix::identity(), kSwap, kDiag23, kShear, kHerm};
  for (const GMatrix& g : gs) {
    const auto table = gf_table(g, 6);
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n <= 3; ++n) {
        const SparsePoly ref = deformed_sum(g, m, n);
        CHECK(deformed_rodrigues(g, m, n) == ref);
        CHECK(sandwich_route(g, m, n) == ref);
        CHECK(deformed_via_matrix(g, m, m + n) == ref);
        CHECK(table.at({m, n}) == ref);
      }
    }
  }
}

TEST_CASE("real-basis change matrix") {
  const DeformationMatrix M0 = real_basis_matrix(0);
  CHECK(M0.at(0, 0) == ExactScalar(1));

  const DeformationMatrix M1 = real_basis_matrix(1);
  const ExactScalar ihalf = frac(1, 2) * ExactScalar::i();
  CHECK(M1.at(0, 0) == -ihalf);
  CHECK(M1.at(1, 0) == frac(1, 2));
  CHECK(M1.at(0, 1) == ihalf);
  CHECK(M1.at(1, 1) == frac(1, 2));

  CHECK(real_basis_matrix(2).at(0, 0) == frac(-1, 4));
}

TEST_CASE("expansion over real Hermite products") {
  CHECK(complex_to_real_expand(0, 0) == std::vector<ExactScalar>{ExactScalar(1)});
  const auto e10 = complex_to_real_expand(1, 0);
  REQUIRE(e10.size() == 2);
  CHECK(e10[0] == frac(1, 2) * ExactScalar::i());
  CHECK(e10[1] == frac(1, 2));
  const DeformationMatrix M2 = real_basis_matrix(2);
  const auto e11 = complex_to_real_expand(1, 1);
  for (int r = 0; r <= 2; ++r) CHECK(e11[r] == M2.at(r, 1));
  for (int L = 0; L <= 6; ++L) {
    const DeformationMatrix M = real_basis_matrix(L);
    for (int m = 0; m <= L; ++m) {
      const auto col = complex_to_real_expand(m, L - m);
      for (int r = 0; r <= L; ++r) CHECK(col[r] == M.at(r, m));
    }
  }
}

TEST_CASE("squared norms connect the two bases") {
  for (int L = 0; L <= 6; ++L) {
    const DeformationMatrix M = real_basis_matrix(L);
    for (int m = 0; m <= L; ++m) {
      for (int mp = 0; mp <= L; ++mp) {
        ExactScalar acc;
        for (int r = 0; r <= L; ++r) {
          const ExactScalar w(BigRational((BigInt(1) << L) * factorial(r) * factorial(L - r)));
          acc += M.at(r, m) * M.at(r, mp).conj() * w;
        }
        const ExactScalar expected =
            m == mp ? ExactScalar(BigRational(factorial(m) * factorial(L - m))) : ExactScalar(0);
        CHECK(acc == expected);
      }
    }
  }
}

TEST_CASE("central values") {
  CHECK(hermite_at_zero(2, 2) == ExactScalar(2));
  CHECK(hermite_at_zero(3, 2) == ExactScalar(0));
  CHECK(hermite_at_zero(1, 1) == ExactScalar(-1));
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n) {
      ExactScalar expected;
      if (m == n) {
        expected = ExactScalar(BigRational(factorial(n)));
        if (n % 2 != 0) expected = -expected;
      }
      CHECK(hermite_at_zero(m, n) == expected);
    }
}

TEST_CASE("negative indices are rejected") {
  CHECK_THROWS_AS(real_hermite(-1), std::invalid_argument);
  CHECK_THROWS_AS(complex_hermite(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(deformation_matrix(GMatrix::identity(), -2), std::invalid_argument);
}

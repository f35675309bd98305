#include "hermite2d/hermite.hpp"

#include <stdexcept>

namespace hermite2d {

namespace {

void check_nonnegative(int n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
}

const SparsePoly& poly_x() {
  static const SparsePoly p = SparsePoly::variable(Var::x);
  return p;
}

}  // namespace

SparsePoly real_hermite(int n) {
  check_nonnegative(n, "degree");
  SparsePoly prev(ExactScalar(1));  // H_0
  if (n == 0) return prev;
  SparsePoly cur = ExactScalar(2) * poly_x();  // H_1
  for (int k = 1; k < n; ++k) {
    SparsePoly next = ExactScalar(2) * poly_x() * cur - ExactScalar(2 * k) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

SparsePoly real_hermite_rodrigues(int n) {
  check_nonnegative(n, "degree");
  // One step Q <- 2x Q - Q' is one application of -e^{x^2} d/dx e^{-x^2}.
  SparsePoly q(ExactScalar(1));
  for (int k = 0; k < n; ++k) q = ExactScalar(2) * poly_x() * q - derivative(q, Var::x);
  return q;
}

SparsePoly complex_hermite(int m, int n) {
  check_nonnegative(m, "index m");
  check_nonnegative(n, "index n");
  SparsePoly p;
  const int kmax = std::min(m, n);
  for (int k = 0; k <= kmax; ++k) {
    BigInt c = factorial(k) * binomial(m, k) * binomial(n, k);
    if (k % 2 != 0) c = -c;
    p += SparsePoly::monomial(ExactScalar(BigRational(c)),
                              {{Var::z1, m - k}, {Var::z2, n - k}});
  }
  return p;
}

SparsePoly complex_hermite_operator(int m, int n) {
  check_nonnegative(m, "index m");
  check_nonnegative(n, "index n");
  SparsePoly p(ExactScalar(1));
  for (int k = 0; k < n; ++k) p = SparsePoly::variable(Var::z2) * p - derivative(p, Var::z1);
  for (int k = 0; k < m; ++k) p = SparsePoly::variable(Var::z1) * p - derivative(p, Var::z2);
  return p;
}

namespace {

SparsePoly g_linear_form(const ExactScalar& c1, const ExactScalar& c2) {
  return c1 * SparsePoly::variable(Var::z1) + c2 * SparsePoly::variable(Var::z2);
}

}  // namespace

SparsePoly deformed_rodrigues(const GMatrix& g, int m, int n) {
  check_nonnegative(m, "index m");
  check_nonnegative(n, "index n");
  const SparsePoly base = pow(g_linear_form(g.g11, g.g21), m) * pow(g_linear_form(g.g12, g.g22), n);
  return mixed_exp_operator(base, ExactScalar(-1), Var::z1, Var::z2);
}

SparsePoly deformed_sum(const GMatrix& g, int m, int n) {
  check_nonnegative(m, "index m");
  check_nonnegative(n, "index n");
  SparsePoly acc;
  for (int j = 0; j <= m; ++j) {
    for (int k = 0; k <= n; ++k) {
      const ExactScalar coeff = ExactScalar(BigRational(binomial(m, j) * binomial(n, k))) *
                                pow(g.g11, j) * pow(g.g21, m - j) * pow(g.g12, k) *
                                pow(g.g22, n - k);
      if (coeff.is_zero()) continue;
      acc += coeff * complex_hermite(j + k, n + m - j - k);
    }
  }
  return acc;
}

DeformationMatrix deformation_matrix(const GMatrix& g, int L) {
  check_nonnegative(L, "level L");
  DeformationMatrix M;
  M.kind = DeformationMatrix::Kind::deformation;
  M.L = L;
  M.rows.assign(L + 1, std::vector<ExactScalar>(L + 1));
  for (int r = 0; r <= L; ++r) {
    for (int k = 0; k <= L; ++k) {
      ExactScalar sum;
      const int qlo = std::max(0, r + k - L);
      const int qhi = std::min(r, k);
      for (int q = qlo; q <= qhi; ++q) {
        sum += ExactScalar(BigRational(binomial(k, q) * binomial(L - k, r - q))) *
               pow(g.g11, q) * pow(g.g21, k - q) * pow(g.g12, r - q) *
               pow(g.g22, L - k + q - r);
      }
      M.rows[r][k] = sum;
    }
  }
  return M;
}

SparsePoly deformed_via_matrix(const GMatrix& g, int k, int L) {
  check_nonnegative(L, "level L");
  if (k < 0 || k > L) throw std::out_of_range("column index k outside 0..L");
  const DeformationMatrix M = deformation_matrix(g, L);
  SparsePoly acc;
  for (int r = 0; r <= L; ++r) acc += M.at(r, k) * complex_hermite(r, L - r);
  return acc;
}

std::map<std::pair<int, int>, SparsePoly> gf_table(const GMatrix& g, int max_deg) {
  check_nonnegative(max_deg, "truncation degree");
  const SparsePoly U = SparsePoly::variable(Var::u);
  const SparsePoly V = SparsePoly::variable(Var::v);
  const SparsePoly a = g.g11 * U + g.g12 * V;  // multiplies z1
  const SparsePoly b = g.g21 * U + g.g22 * V;  // multiplies z2
  const std::set<Var> svars{Var::u, Var::v};
  const SparsePoly exponent = a * SparsePoly::variable(Var::z1) +
                              b * SparsePoly::variable(Var::z2) -
                              series_mul(a, b, svars, max_deg);
  const SparsePoly series = series_exp(exponent, svars, max_deg);

  std::map<std::pair<int, int>, SparsePoly> table;
  for (int m = 0; m <= max_deg; ++m) {
    for (int n = 0; m + n <= max_deg; ++n) {
      const ExactScalar scale(BigRational(factorial(m) * factorial(n)));
      table[{m, n}] = scale * coefficient_of(series, {{Var::u, m}, {Var::v, n}});
    }
  }
  return table;
}

SparsePoly sandwich_route(const GMatrix& g, int m, int n) {
  check_nonnegative(m, "index m");
  check_nonnegative(n, "index n");
  SparsePoly p = mixed_exp_operator(complex_hermite(m, n), ExactScalar(1), Var::z1, Var::z2);
  AffineMap change;
  change[Var::z1] = LinearForm{{{Var::z1, g.g11}, {Var::z2, g.g21}}, ExactScalar(0)};
  change[Var::z2] = LinearForm{{{Var::z1, g.g12}, {Var::z2, g.g22}}, ExactScalar(0)};
  p = substitute(p, change);
  return mixed_exp_operator(p, ExactScalar(-1), Var::z1, Var::z2);
}

DeformationMatrix real_basis_matrix(int L) {
  check_nonnegative(L, "level L");
  DeformationMatrix M;
  M.kind = DeformationMatrix::Kind::real_basis;
  M.L = L;
  M.rows.assign(L + 1, std::vector<ExactScalar>(L + 1));
  const BigRational half_pow = make_rational(1, BigInt(1) << L);
  for (int r = 0; r <= L; ++r) {
    for (int m = 0; m <= L; ++m) {
      ExactScalar sum;
      const int klo = std::max(0, r + m - L);
      const int khi = std::min(r, m);
      for (int k = klo; k <= khi; ++k) {
        ExactScalar term(BigRational(binomial(m, k) * binomial(L - m, r - k)));
        if ((L - m - r + k) % 2 != 0) term = -term;
        sum += term * pow(ExactScalar::i(), L - r);
      }
      M.rows[r][m] = sum * ExactScalar(half_pow);
    }
  }
  return M;
}

std::vector<ExactScalar> complex_to_real_expand(int m, int n) {
  check_nonnegative(m, "index m");
  check_nonnegative(n, "index n");
  const int L = m + n;
  AffineMap diag;
  diag[Var::z1] = LinearForm{{{Var::x, ExactScalar(1)}, {Var::y, ExactScalar::i()}}, ExactScalar(0)};
  diag[Var::z2] = LinearForm{{{Var::x, ExactScalar(1)}, {Var::y, -ExactScalar::i()}}, ExactScalar(0)};
  SparsePoly rest = substitute(complex_hermite(m, n), diag);

  // Peel leading monomials: x^a y^b only ever appears as the top term of
  // H_a(x) H_b(y) / 2^{a+b}, and subtracting that product strictly lowers
  // the total degree of everything it introduces.
  std::map<std::pair<int, int>, ExactScalar> coeffs;
  while (!rest.is_zero()) {
    const auto& top = *rest.terms().rbegin();
    const int a = exp_of(top.first, Var::x);
    const int b = exp_of(top.first, Var::y);
    const ExactScalar c = top.second * ExactScalar(make_rational(1, BigInt(1) << (a + b)));
    coeffs[{a, b}] += c;
    AffineMap rename;  // real_hermite is a polynomial in x; move one copy to y
    rename[Var::x] = LinearForm{{{Var::y, ExactScalar(1)}}, ExactScalar(0)};
    rest -= c * (real_hermite(a) * substitute(real_hermite(b), rename));
  }

  std::vector<ExactScalar> column(L + 1);
  for (const auto& [ab, c] : coeffs) {
    const auto [a, b] = ab;
    if (a + b != L)
      throw std::logic_error("expansion left the degree-" + std::to_string(L) + " block");
    column[a] = c;
  }
  return column;
}

ExactScalar hermite_at_zero(int m, int n) { return complex_hermite(m, n).constant_term(); }

}  // namespace hermite2d

#include "hermite2d/integrate.hpp"

#include "hermite2d/errors.hpp"

#include <stdexcept>

namespace hermite2d {

std::string to_string(const ScaledExact& v) {
  if (v.pi_power == 0) return to_string(v.coeff);
  std::string s = v.coeff == ExactScalar(1) ? std::string() : "(" + to_string(v.coeff) + ")*";
  s += "pi";
  if (v.pi_power != 1) s += "^" + std::to_string(v.pi_power);
  return s;
}

BigRational gaussian_moment(int k) {
  if (k < 0) throw std::invalid_argument("negative moment order");
  if (k % 2 != 0) return BigRational(0);
  const int p = k / 2;
  return make_rational(factorial(2 * p), BigInt(1) << (2 * p)) / BigRational(factorial(p));
}

namespace {

std::array<bool, kNumVars> mask_of(const std::vector<Var>& vars) {
  std::array<bool, kNumVars> m{};
  for (Var v : vars) m[static_cast<std::size_t>(v)] = true;
  return m;
}

void check_no_foreign(const SparsePoly& p, const std::array<bool, kNumVars>& mask) {
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (e[i] > 0 && !mask[i])
        throw std::invalid_argument("unsubstituted foreign variable '" +
                                    std::string(var_name(static_cast<Var>(i))) + "'");
}

// Moment product over the integration variables, or zero when any
// exponent is odd. Exponents outside `vars` must already be checked.
bool term_moment(const ExpVec& e, const std::vector<Var>& vars, BigRational& out) {
  out = BigRational(1);
  for (Var v : vars) {
    const int k = exp_of(e, v);
    if (k % 2 != 0) return false;
    if (k > 0) out *= gaussian_moment(k);
  }
  return true;
}

}  // namespace

ScaledExact integrate_gaussian(const SparsePoly& p, const std::vector<Var>& vars,
                               bool normalized) {
  if (!normalized && vars.size() % 2 != 0)
    throw std::invalid_argument("unnormalized Gaussian integral needs an even variable count");
  const auto mask = mask_of(vars);
  check_no_foreign(p, mask);
  ExactScalar acc;
  BigRational mom;
  for (const auto& [e, c] : p.terms())
    if (term_moment(e, vars, mom)) acc += c * ExactScalar(mom);
  return {acc, normalized ? 0 : static_cast<int>(vars.size()) / 2};
}

ScaledExact integrate_gaussian_product(const SparsePoly& a, const SparsePoly& b,
                                       const std::vector<Var>& vars, bool normalized) {
  if (!normalized && vars.size() % 2 != 0)
    throw std::invalid_argument("unnormalized Gaussian integral needs an even variable count");
  const auto mask = mask_of(vars);
  check_no_foreign(a, mask);
  check_no_foreign(b, mask);
  ExactScalar acc;
  BigRational mom;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      ExpVec e;
      for (std::size_t i = 0; i < kNumVars; ++i)
        e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      if (term_moment(e, vars, mom)) acc += ca * cb * ExactScalar(mom);
    }
  }
  return {acc, normalized ? 0 : static_cast<int>(vars.size()) / 2};
}

SparsePoly diagonal_conjugate(const SparsePoly& p) {
  SparsePoly r;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (e[i] > 0 && static_cast<Var>(i) != Var::z1 && static_cast<Var>(i) != Var::z2)
        throw std::invalid_argument("diagonal_conjugate expects a polynomial in z1, z2 only");
    ExpVec s = e;
    std::swap(exp_of(s, Var::z1), exp_of(s, Var::z2));
    r.add_term(s, c.conj());
  }
  return r;
}

OrthResult orthogonality_condition(const GMatrix& g, const GMatrix& h) {
  const GMatrix prod = h.conj_transpose() * g;
  OrthResult res;
  res.is_orthogonal_family = prod.g12.is_zero() && prod.g21.is_zero();
  res.lambda1 = prod.g11;
  res.lambda2 = prod.g22;
  return res;
}

SparsePoly diagonal_substitution(const SparsePoly& p) {
  AffineMap diag;
  diag[Var::z1] =
      LinearForm{{{Var::x, ExactScalar(1)}, {Var::y, ExactScalar::i()}}, ExactScalar(0)};
  diag[Var::z2] =
      LinearForm{{{Var::x, ExactScalar(1)}, {Var::y, -ExactScalar::i()}}, ExactScalar(0)};
  return substitute(p, diag);
}

ScaledExact orthogonality_integral(const GMatrix& g, const GMatrix& h, int m, int n, int p,
                                   int q) {
  const SparsePoly lhs = diagonal_substitution(deformed_sum(g, m, n));
  const SparsePoly rhs = diagonal_substitution(diagonal_conjugate(deformed_sum(h, p, q)));
  return integrate_gaussian_product(lhs, rhs, {Var::x, Var::y}, true);
}

namespace {

nlohmann::ordered_json gmatrix_json(const GMatrix& g) {
  return nlohmann::ordered_json::array(
      {to_string(g.g11), to_string(g.g12), to_string(g.g21), to_string(g.g22)});
}

}  // namespace

VerificationReport verify_moment_rep(const GMatrix& g, int m, int n, const BigRational& x0,
                                     const BigRational& y0) {
  const SparsePoly zeta = SparsePoly::variable(Var::r1) +
                          ExactScalar::i() * SparsePoly::variable(Var::s1);
  const SparsePoly zeta_bar = SparsePoly::variable(Var::r1) -
                              ExactScalar::i() * SparsePoly::variable(Var::s1);
  const SparsePoly integrand =
      pow(g.g11 * zeta + g.g21 * zeta_bar, m) * pow(g.g12 * zeta + g.g22 * zeta_bar, n);

  AffineMap shift;
  shift[Var::r1] = LinearForm{{{Var::r1, ExactScalar(1)}}, ExactScalar(BigRational(x0))};
  shift[Var::s1] = LinearForm{{{Var::s1, ExactScalar(1)}}, ExactScalar(BigRational(y0))};
  const ScaledExact integral =
      integrate_gaussian(substitute(integrand, shift), {Var::r1, Var::s1}, true);
  const ExactScalar rhs = pow(ExactScalar::i(), m + n) * integral.coeff;

  const GaussianRational z(x0, y0);
  const ExactScalar z1v = ExactScalar::i() * ExactScalar(z);
  const ExactScalar z2v = ExactScalar::i() * ExactScalar(z.conj());
  const ExactScalar lhs =
      evaluate(deformed_sum(g, m, n), {{Var::z1, z1v}, {Var::z2, z2v}});

  VerificationReport rep;
  rep.identity = "eqmomentrep";
  rep.params["g"] = gmatrix_json(g);
  rep.params["m"] = m;
  rep.params["n"] = n;
  rep.params["x0"] = to_string(x0);
  rep.params["y0"] = to_string(y0);
  rep.lhs = to_string(lhs);
  rep.rhs = to_string(rhs);
  rep.pass = lhs == rhs;
  return rep;
}

namespace {

// Normalized integral of H_m(u+b) H_n(u+c) against e^{-(u+a)^2},
// scaled by (-1)^n / 2^{(m+n)/2}; the half power of 2 is exact via
// inverse powers of sqrt2.
ExactScalar wigner_rhs(int m, int n, const ExactScalar& a, const ExactScalar& b,
                       const ExactScalar& c) {
  AffineMap to_b = shift_map(Var::x, Var::u, b);
  AffineMap to_c = shift_map(Var::x, Var::u, c);
  SparsePoly prod = substitute(real_hermite(m), to_b) * substitute(real_hermite(n), to_c);
  AffineMap center;  // u -> t - a
  center[Var::u] = LinearForm{{{Var::t, ExactScalar(1)}}, -a};
  const ScaledExact integral = integrate_gaussian(substitute(prod, center), {Var::t}, true);

  ExactScalar prefactor = pow(ExactScalar::sqrt2().inverse(), m + n);
  if (n % 2 != 0) prefactor = -prefactor;
  return prefactor * integral.coeff;
}

}  // namespace

VerificationReport verify_wigner(int m, int n, const ExactScalar& a, const GaussianRational& z) {
  const ExactScalar inv_sqrt2 = ExactScalar::sqrt2().inverse();
  const ExactScalar zs{z};
  const ExactScalar zbs{z.conj()};
  const ExactScalar b = a + zs * inv_sqrt2;
  const ExactScalar c = a - zbs * inv_sqrt2;

  const ExactScalar rhs = wigner_rhs(m, n, a, b, c);
  const ExactScalar lhs = evaluate(complex_hermite(m, n), {{Var::z1, zs}, {Var::z2, zbs}});

  VerificationReport rep;
  rep.identity = "eqHmnInt";
  rep.params["m"] = m;
  rep.params["n"] = n;
  rep.params["a"] = to_string(a);
  rep.params["z"] = to_string(z);
  rep.lhs = to_string(lhs);
  rep.rhs = to_string(rhs);
  rep.pass = lhs == rhs && rhs.radical.is_zero();
  return rep;
}

VerificationReport verify_wigner_deformed(const GMatrix& g, int k, int L, const ExactScalar& a,
                                          const GaussianRational& z) {
  if (k < 0 || k > L) throw std::out_of_range("column index k outside 0..L");
  const ExactScalar inv_sqrt2 = ExactScalar::sqrt2().inverse();
  const ExactScalar zs{z};
  const ExactScalar zbs{z.conj()};
  const ExactScalar b = a + zs * inv_sqrt2;
  const ExactScalar c = a - zbs * inv_sqrt2;

  const DeformationMatrix M = deformation_matrix(g, L);
  ExactScalar rhs;
  for (int r = 0; r <= L; ++r) {
    if (M.at(r, k).is_zero()) continue;
    rhs += M.at(r, k) * wigner_rhs(r, L - r, a, b, c);
  }
  const ExactScalar lhs =
      evaluate(deformed_sum(g, k, L - k), {{Var::z1, zs}, {Var::z2, zbs}});

  VerificationReport rep;
  rep.identity = "eqHmnInt-def";
  rep.params["g"] = gmatrix_json(g);
  rep.params["k"] = k;
  rep.params["L"] = L;
  rep.params["a"] = to_string(a);
  rep.params["z"] = to_string(z);
  rep.lhs = to_string(lhs);
  rep.rhs = to_string(rhs);
  rep.pass = lhs == rhs && rhs.radical.is_zero();
  return rep;
}

VerificationReport verify_translation(int m, int n, int p, int q, const GaussianRational& a) {
  const ExactScalar av{a};
  const ExactScalar acv{a.conj()};

  AffineMap plus;
  plus[Var::z1] = LinearForm{{{Var::z1, ExactScalar(1)}}, av};
  plus[Var::z2] = LinearForm{{{Var::z2, ExactScalar(1)}}, acv};
  AffineMap minus;
  minus[Var::z1] = LinearForm{{{Var::z1, ExactScalar(1)}}, -av};
  minus[Var::z2] = LinearForm{{{Var::z2, ExactScalar(1)}}, -acv};

  const SparsePoly lhs_poly = diagonal_substitution(substitute(complex_hermite(m, n), plus) *
                                                    substitute(complex_hermite(p, q), minus));
  const ScaledExact lhs = integrate_gaussian(lhs_poly, {Var::x, Var::y}, false);

  // Second factor is H_{p,n}(a, conj a); the (n,p) index order only
  // coincides with it for real a.
  const std::map<Var, ExactScalar> at_a{{Var::z1, av}, {Var::z2, acv}};
  ExactScalar rhs_coeff =
      evaluate(complex_hermite(m, q), at_a) * evaluate(complex_hermite(p, n), at_a);
  if ((p + q) % 2 != 0) rhs_coeff = -rhs_coeff;
  const ScaledExact rhs(rhs_coeff, 1);

  VerificationReport rep;
  rep.identity = "eqeDHIR";
  rep.params["m"] = m;
  rep.params["n"] = n;
  rep.params["p"] = p;
  rep.params["q"] = q;
  rep.params["a"] = to_string(a);
  rep.lhs = to_string(lhs);
  rep.rhs = to_string(rhs);
  rep.pi_power = lhs.pi_power;
  rep.pass = lhs == rhs;
  return rep;
}

}  // namespace hermite2d

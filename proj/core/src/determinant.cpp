#include "hermite2d/determinant.hpp"

#include "hermite2d/errors.hpp"

#include <stdexcept>
#include <utility>

namespace hermite2d {

namespace {

void check_spec(const HankelSpec& spec) {
  if (spec.N < 1) throw std::invalid_argument("Hankel size N must be >= 1");
  if (spec.s < 0) throw std::invalid_argument("index shift s must be >= 0");
  if (!spec.g.hermitian_pair())
    throw std::invalid_argument("g violates the hermitian-pair condition: " + to_string(spec.g));
}

}  // namespace

ExactMatrix hankel_matrix(const HankelSpec& spec) {
  check_spec(spec);
  const GaussianRational z(spec.x0, spec.y0);
  const std::map<Var, ExactScalar> at{{Var::z1, ExactScalar::i() * ExactScalar(z)},
                                      {Var::z2, ExactScalar::i() * ExactScalar(z.conj())}};

  ExactMatrix mat;
  mat.n = spec.N;
  mat.pi_power = 1;
  mat.entries.resize(static_cast<std::size_t>(spec.N) * spec.N);
  const ExactScalar minus_i = -ExactScalar::i();
  for (int m = 0; m < spec.N; ++m) {
    for (int n = 0; n < spec.N; ++n) {
      const ExactScalar value = evaluate(deformed_sum(spec.g, m + spec.s, n + spec.s), at);
      mat.at(m, n) = pow(minus_i, m + n + 2 * spec.s) * value;
    }
  }
  return mat;
}

ScaledExact exact_determinant(const ExactMatrix& m) {
  const int n = m.n;
  std::vector<ExactScalar> a = m.entries;
  auto at = [&](int r, int c) -> ExactScalar& {
    return a[static_cast<std::size_t>(r) * n + c];
  };

  bool negate = false;
  ExactScalar det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return {ExactScalar(0), 0};
    if (pivot != col) {
      for (int c = col; c < n; ++c) std::swap(at(pivot, c), at(col, c));
      negate = !negate;
    }
    const ExactScalar& p = at(col, col);
    det *= p;
    const ExactScalar pinv = p.inverse();
    for (int r = col + 1; r < n; ++r) {
      if (at(r, col).is_zero()) continue;
      const ExactScalar factor = at(r, col) * pinv;
      for (int c = col; c < n; ++c) at(r, c) -= factor * at(col, c);
    }
  }
  if (negate) det = -det;
  return {det, n * m.pi_power};
}

PositivityResult positivity_check(const HankelSpec& spec) {
  const ScaledExact det = exact_determinant(hankel_matrix(spec));
  const Sign sg = sign(det.coeff);  // NotRealError propagates: a complex
                                    // residue would falsify the claim
  return {det, sg == Sign::positive};
}

ScaledExact oracle_delta(const HankelSpec& spec) {
  check_spec(spec);
  if (spec.N > 2 || spec.s > 1)
    throw std::invalid_argument("oracle_delta supports N in {1,2}, s in {0,1}");

  const std::pair<Var, Var> coords[2] = {{Var::r1, Var::s1}, {Var::r2, Var::s2}};
  std::vector<SparsePoly> U(spec.N);
  for (int k = 0; k < spec.N; ++k) {
    const SparsePoly zeta = SparsePoly::variable(coords[k].first) +
                            ExactScalar::i() * SparsePoly::variable(coords[k].second);
    const SparsePoly zeta_bar = SparsePoly::variable(coords[k].first) -
                                ExactScalar::i() * SparsePoly::variable(coords[k].second);
    U[k] = spec.g.g11 * zeta + spec.g.g21 * zeta_bar;
  }

  SparsePoly integrand(ExactScalar(1));
  for (int k = 0; k < spec.N; ++k)
    for (int rep = 0; rep < spec.s; ++rep)
      integrand *= U[k] * conjugate_coefficients(U[k]);
  for (int j = 0; j < spec.N; ++j)
    for (int k = j + 1; k < spec.N; ++k) {
      const SparsePoly diff = U[j] - U[k];
      integrand *= diff * conjugate_coefficients(diff);
    }

  AffineMap shift;
  std::vector<Var> vars;
  for (int k = 0; k < spec.N; ++k) {
    shift[coords[k].first] =
        LinearForm{{{coords[k].first, ExactScalar(1)}}, ExactScalar(BigRational(spec.x0))};
    shift[coords[k].second] =
        LinearForm{{{coords[k].second, ExactScalar(1)}}, ExactScalar(BigRational(spec.y0))};
    vars.push_back(coords[k].first);
    vars.push_back(coords[k].second);
  }

  const ScaledExact integral = integrate_gaussian(substitute(integrand, shift), vars, false);
  const ExactScalar scale(make_rational(1, factorial(spec.N)));
  return {integral.coeff * scale, integral.pi_power};
}

}  // namespace hermite2d

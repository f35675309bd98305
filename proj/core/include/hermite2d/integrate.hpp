#pragma once

#include "hermite2d/gmatrix.hpp"
#include "hermite2d/hermite.hpp"
#include "hermite2d/poly.hpp"
#include "hermite2d/report.hpp"

#include <string>
#include <vector>

namespace hermite2d {

/// Exact value of a Gaussian integral: coeff * pi^pi_power. A zero
/// coefficient forces pi_power = 0 so equality stays componentwise.
struct ScaledExact {
  ExactScalar coeff;
  int pi_power = 0;

  ScaledExact() = default;
  ScaledExact(ExactScalar c, int p) : coeff(std::move(c)), pi_power(coeff.is_zero() ? 0 : p) {}

  friend bool operator==(const ScaledExact& a, const ScaledExact& b) {
    return a.coeff == b.coeff && a.pi_power == b.pi_power;
  }
  friend bool operator!=(const ScaledExact& a, const ScaledExact& b) { return !(a == b); }
};

std::string to_string(const ScaledExact& v);

/// Integral of t^k against e^{-t^2} dt / sqrt(pi): zero for odd k,
/// (2p)!/(4^p p!) for k = 2p.
BigRational gaussian_moment(int k);

/// Termwise moment integration over the listed variables. normalized
/// divides by sqrt(pi) per variable; unnormalized mode requires an even
/// variable count and reports pi_power = vars/2. Any other variable
/// occurring in p is an error.
ScaledExact integrate_gaussian(const SparsePoly& p, const std::vector<Var>& vars, bool normalized);

/// Same integral for a product a*b without materializing the product.
ScaledExact integrate_gaussian_product(const SparsePoly& a, const SparsePoly& b,
                                       const std::vector<Var>& vars, bool normalized);

/// Pointwise complex conjugate on the diagonal z2 = conj(z1): conjugate
/// all coefficients and swap the z1/z2 exponents. p may use only z1, z2.
SparsePoly diagonal_conjugate(const SparsePoly& p);

struct OrthResult {
  bool is_orthogonal_family = false;
  ExactScalar lambda1, lambda2;  // diagonal of h* g, present when orthogonal
};

/// Diagonality test of h* g; the lambdas are its diagonal entries.
OrthResult orthogonality_condition(const GMatrix& g, const GMatrix& h);

/// Exact value of the normalized cross integral of the (g)- and
/// (h)-deformed polynomials on the diagonal.
ScaledExact orthogonality_integral(const GMatrix& g, const GMatrix& h, int m, int n, int p, int q);

/// Substitutes z1 -> x+iy, z2 -> x-iy.
SparsePoly diagonal_substitution(const SparsePoly& p);

VerificationReport verify_moment_rep(const GMatrix& g, int m, int n, const BigRational& x0,
                                     const BigRational& y0);

VerificationReport verify_wigner(int m, int n, const ExactScalar& a, const GaussianRational& z);

VerificationReport verify_wigner_deformed(const GMatrix& g, int k, int L, const ExactScalar& a,
                                          const GaussianRational& z);

VerificationReport verify_translation(int m, int n, int p, int q, const GaussianRational& a);

}  // namespace hermite2d

#pragma once

#include "hermite2d/gmatrix.hpp"
#include "hermite2d/poly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace hermite2d {

/// (L+1)x(L+1) matrix of exact scalars; rows[r][k].
struct DeformationMatrix {
  enum class Kind { deformation, real_basis };
  Kind kind = Kind::deformation;
  int L = 0;
  std::vector<std::vector<ExactScalar>> rows;

  const ExactScalar& at(int r, int k) const { return rows[r][k]; }
};

/// Physicists' Hermite polynomial in x via the three-term recurrence
/// H_{n+1} = 2x H_n - 2n H_{n-1}; leading coefficient 2^n.
SparsePoly real_hermite(int n);

/// Same polynomial by iterating Q <- 2x Q - dQ/dx from Q = 1.
SparsePoly real_hermite_rodrigues(int n);

/// Bivariate Hermite polynomial in z1, z2 as the explicit finite sum
/// sum_k (-1)^k k! C(m,k) C(n,k) z1^{m-k} z2^{n-k}.
SparsePoly complex_hermite(int m, int n);

/// Same polynomial by the raising-operator route: apply (z2 - d/dz1)
/// n times, then (z1 - d/dz2) m times, to 1.
SparsePoly complex_hermite_operator(int m, int n);

/// Deformed polynomial via exp(-d1 d2) on the expanded linear-form
/// product (g11 z1 + g21 z2)^m (g12 z1 + g22 z2)^n.
SparsePoly deformed_rodrigues(const GMatrix& g, int m, int n);

/// Deformed polynomial as the double binomial sum over undeformed ones.
SparsePoly deformed_sum(const GMatrix& g, int m, int n);

/// M(g,L): entry (r,k) expresses the degree-L deformed family in the
/// undeformed degree-L basis; 0^0 = 1 throughout.
DeformationMatrix deformation_matrix(const GMatrix& g, int L);

/// Matrix route: sum_r M(g,L)_{rk} H_{r,L-r}. Requires 0 <= k <= L.
SparsePoly deformed_via_matrix(const GMatrix& g, int k, int L);

/// All table entries (m,n), m+n <= max_deg, from the truncated
/// generating series; entry = m! n! * coefficient of u^m v^n.
std::map<std::pair<int, int>, SparsePoly> gf_table(const GMatrix& g, int max_deg);

/// Conjugation route: exp(+d1 d2), substitute the linear change of
/// variables, exp(-d1 d2), applied to the undeformed polynomial.
SparsePoly sandwich_route(const GMatrix& g, int m, int n);

/// M(L): entry (r,m) expresses H_{m,L-m} over products H_r(x) H_{L-r}(y).
DeformationMatrix real_basis_matrix(int L);

/// Expands complex_hermite(m,n) under z1 -> x+iy, z2 -> x-iy in the
/// H_r(x) H_{L-r}(y) basis (L = m+n); returns the L+1 coefficients.
/// The basis solve is triangular: H_n has leading coefficient 2^n.
std::vector<ExactScalar> complex_to_real_expand(int m, int n);

/// Constant term of complex_hermite(m,n): (-1)^n n! when m = n, else 0.
ExactScalar hermite_at_zero(int m, int n);

}  // namespace hermite2d

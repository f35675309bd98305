#pragma once

#include "hermite2d/gmatrix.hpp"
#include "hermite2d/integrate.hpp"

#include <vector>

namespace hermite2d {

/// Parameters of one Hankel determinant instance; g must satisfy
/// hermitian_pair, the evaluation point is z = x0 + i y0.
struct HankelSpec {
  GMatrix g = GMatrix::identity();
  int N = 1;
  int s = 0;
  BigRational x0;
  BigRational y0;
};

/// Square matrix of exact scalars with one shared power of pi: every
/// entry represents entries[i] * pi^pi_power.
struct ExactMatrix {
  int n = 0;
  int pi_power = 0;
  std::vector<ExactScalar> entries;

  ExactScalar& at(int r, int c) { return entries[static_cast<std::size_t>(r) * n + c]; }
  const ExactScalar& at(int r, int c) const {
    return entries[static_cast<std::size_t>(r) * n + c];
  }
};

/// Entry (m,n) is (-i)^{m+n+2s} * pi * H^(g)_{m+s,n+s}(iz, i conj z),
/// 0 <= m,n <= N-1.
ExactMatrix hankel_matrix(const HankelSpec& spec);

/// Field-valued Gaussian elimination, first nonzero pivot per column;
/// result pi_power is n times the entry pi_power.
ScaledExact exact_determinant(const ExactMatrix& m);

struct PositivityResult {
  ScaledExact value;
  bool positive = false;
};

/// Determinant of the Hankel matrix, asserted exactly real (NotRealError
/// otherwise) and classified by exact sign.
PositivityResult positivity_check(const HankelSpec& spec);

/// Independent route for N <= 2, s <= 1: the 2N-fold Gaussian integral
/// of |U_1|^{2s}...|U_N|^{2s} prod |U_j - U_k|^2 over shifted weights,
/// divided by N!.
ScaledExact oracle_delta(const HankelSpec& spec);

}  // namespace hermite2d

#pragma once

#include "hermite2d/scalar.hpp"

#include <string>
#include <string_view>

namespace hermite2d {

/// 2x2 deformation matrix over Q(i, sqrt2), row-major (g11 g12; g21 g22).
struct GMatrix {
  ExactScalar g11, g12, g21, g22;

  static GMatrix identity() { return {ExactScalar(1), ExactScalar(0), ExactScalar(0), ExactScalar(1)}; }
  static GMatrix swap() { return {ExactScalar(0), ExactScalar(1), ExactScalar(1), ExactScalar(0)}; }

  ExactScalar det() const { return g11 * g22 - g12 * g21; }

  /// g12 = conj(g21) and g22 = conj(g11).
  bool hermitian_pair() const {
    return g12 == g21.conj() && g22 == g11.conj();
  }

  GMatrix conj_transpose() const { return {g11.conj(), g21.conj(), g12.conj(), g22.conj()}; }

  /// Throws std::domain_error when singular.
  GMatrix inverse() const;

  friend GMatrix operator*(const GMatrix& a, const GMatrix& b) {
    return {a.g11 * b.g11 + a.g12 * b.g21, a.g11 * b.g12 + a.g12 * b.g22,
            a.g21 * b.g11 + a.g22 * b.g21, a.g21 * b.g12 + a.g22 * b.g22};
  }
  friend bool operator==(const GMatrix& a, const GMatrix& b) {
    return a.g11 == b.g11 && a.g12 == b.g12 && a.g21 == b.g21 && a.g22 == b.g22;
  }
  friend bool operator!=(const GMatrix& a, const GMatrix& b) { return !(a == b); }
};

/// Canonical row-major form "a,b;c,d" with canonical scalar entries.
std::string to_string(const GMatrix& g);
GMatrix parse_gmatrix(std::string_view text);

}  // namespace hermite2d

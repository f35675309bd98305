#pragma once

#include "hermite2d/rational.hpp"

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hermite2d {

/// Element of Q(i): re + im*i with exactly normalized components.
struct GaussianRational {
  BigRational re;
  BigRational im;

  GaussianRational() = default;
  GaussianRational(int n) : re(n) {}
  GaussianRational(BigRational r) : re(std::move(r)) {}
  GaussianRational(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GaussianRational conj() const { return {re, -im}; }
  BigRational norm2() const { return re * re + im * im; }

  /// Throws std::domain_error on zero.
  GaussianRational inverse() const;

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

/// Element of Q(i, sqrt2): unit + radical*sqrt2. The representation is
/// unique, so equality is componentwise; (sqrt2)^2 collapses to the
/// rational 2 in multiplication.
struct ExactScalar {
  GaussianRational unit;
  GaussianRational radical;

  ExactScalar() = default;
  ExactScalar(int n) : unit(n) {}
  ExactScalar(BigRational q) : unit(std::move(q)) {}
  ExactScalar(GaussianRational g) : unit(std::move(g)) {}
  ExactScalar(GaussianRational u, GaussianRational r) : unit(std::move(u)), radical(std::move(r)) {}

  static ExactScalar i() { return ExactScalar(GaussianRational::i()); }
  static ExactScalar sqrt2() { return {GaussianRational(), GaussianRational(1)}; }

  bool is_zero() const { return unit.is_zero() && radical.is_zero(); }
  bool is_rational() const { return radical.is_zero() && unit.is_real(); }
  bool is_real() const { return unit.is_real() && radical.is_real(); }

  ExactScalar conj() const { return {unit.conj(), radical.conj()}; }

  /// Exact reciprocal: rationalize the sqrt2 part, then the imaginary
  /// part. Throws std::domain_error on zero.
  ExactScalar inverse() const;

  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
    return {a.unit + b.unit, a.radical + b.radical};
  }
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
    return {a.unit - b.unit, a.radical - b.radical};
  }
  friend ExactScalar operator-(const ExactScalar& a) { return {-a.unit, -a.radical}; }
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    const GaussianRational two(BigRational(2));
    return {a.unit * b.unit + two * (a.radical * b.radical),
            a.unit * b.radical + a.radical * b.unit};
  }
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    return a * b.inverse();
  }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.unit == b.unit && a.radical == b.radical;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

  /// Round-to-nearest floating image. Throws std::overflow_error when a
  /// component exceeds the double range.
  std::complex<double> to_complex() const;
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Exact sign of a real element a + b*sqrt2, by case analysis on the
/// signs of a, b and comparison of a^2 against 2 b^2. Throws
/// NotRealError when either imaginary part is nonzero.
Sign sign(const ExactScalar& x);

ExactScalar pow(const ExactScalar& x, int n);

/// Canonical text form: "a/b" rationals, "p+qi" Gaussian values,
/// "(p+qi)+(r+si)√2" when the radical part is present; zero parts are
/// omitted and "0" stands for zero.
std::string to_string(const GaussianRational& g);
std::string to_string(const ExactScalar& x);

GaussianRational parse_gaussian(std::string_view text);
ExactScalar parse_scalar(std::string_view text);

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

}  // namespace hermite2d

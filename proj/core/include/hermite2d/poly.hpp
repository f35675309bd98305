#pragma once

#include "hermite2d/scalar.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hermite2d {

/// Closed variable alphabet; unknown symbols are rejected at parse time.
enum class Var : unsigned char { z1, z2, u, v, x, y, t, r1, s1, r2, s2 };

inline constexpr std::size_t kNumVars = 11;

constexpr std::array<Var, kNumVars> all_vars() {
  return {Var::z1, Var::z2, Var::u, Var::v, Var::x, Var::y,
          Var::t,  Var::r1, Var::s1, Var::r2, Var::s2};
}

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

/// Dense fixed-width exponent vector, one slot per alphabet variable.
using ExpVec = std::array<std::uint16_t, kNumVars>;

inline std::uint16_t& exp_of(ExpVec& e, Var v) { return e[static_cast<std::size_t>(v)]; }
inline std::uint16_t exp_of(const ExpVec& e, Var v) { return e[static_cast<std::size_t>(v)]; }
int total_degree(const ExpVec& e);

/// Graded-lexicographic order: total degree first, then lexicographic on
/// the exponent vector with z1 most significant.
struct GradedLexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Right-hand side of one substitution: sum of coeff*var plus a constant.
struct LinearForm {
  std::vector<std::pair<Var, ExactScalar>> terms;
  ExactScalar constant;
};

/// Simultaneous affine substitution: all images are computed from the
/// original polynomial.
using AffineMap = std::map<Var, LinearForm>;

AffineMap shift_map(Var v, Var target, const ExactScalar& offset);  // v -> target + offset

/// Sparse polynomial over ExactScalar. Zero coefficients are never
/// stored; the zero polynomial has degree -1 by convention.
class SparsePoly {
 public:
  using TermMap = std::map<ExpVec, ExactScalar, GradedLexLess>;

  SparsePoly() = default;
  explicit SparsePoly(ExactScalar c);

  static SparsePoly variable(Var v, int exponent = 1);
  static SparsePoly monomial(ExactScalar c, std::initializer_list<std::pair<Var, int>> exps);

  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  int degree_in(Var v) const;
  int degree_in_set(const std::set<Var>& vars) const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  ExactScalar coefficient(const ExpVec& e) const;
  ExactScalar constant_term() const;
  std::vector<Var> variables() const;

  void add_term(const ExpVec& e, const ExactScalar& c);

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a);
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const SparsePoly& a, const ExactScalar& c);
  friend SparsePoly operator*(const ExactScalar& c, const SparsePoly& a);
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

  SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

 private:
  TermMap terms_;
};

SparsePoly pow(const SparsePoly& p, int n);

/// Exact formal partial derivative.
SparsePoly derivative(const SparsePoly& p, Var v);

SparsePoly substitute(const SparsePoly& p, const AffineMap& map);

/// Applies sum_{k>=0} (c^k / k!) d_a^k d_b^k; terminates at
/// k = min(deg_a p, deg_b p).
SparsePoly mixed_exp_operator(const SparsePoly& p, const ExactScalar& c, Var a, Var b);

/// Product with every term of total degree > max_deg in svars dropped.
SparsePoly series_mul(const SparsePoly& a, const SparsePoly& b, const std::set<Var>& svars,
                      int max_deg);

/// sum_{k=0}^{max_deg} p^k / k!, truncated at svars-total-degree max_deg.
/// Requires every term of p to have svars-degree >= 1.
SparsePoly series_exp(const SparsePoly& p, const std::set<Var>& svars, int max_deg);

/// Polynomial in the remaining variables multiplying the given monomial.
SparsePoly coefficient_of(const SparsePoly& p, const std::map<Var, int>& assignment);

/// Exact evaluation. Throws UnboundVariableError when a variable occurs
/// in p but is missing from the point.
ExactScalar evaluate(const SparsePoly& p, const std::map<Var, ExactScalar>& point);

/// Floating evaluation with per-variable Horner ordering.
std::complex<double> evaluate_float(const SparsePoly& p,
                                    const std::map<Var, std::complex<double>>& point);

SparsePoly conjugate_coefficients(const SparsePoly& p);

/// Deterministic human-readable rendering, leading term first.
std::string to_string(const SparsePoly& p);

}  // namespace hermite2d

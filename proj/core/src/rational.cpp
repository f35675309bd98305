#include "hermite2d/rational.hpp"

#include "hermite2d/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace hermite2d {

BigRational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return BigRational(num, den);
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;  // exact: r is always an intermediate binomial
  }
  return r;
}

int sign_of(const BigRational& q) { return q.sign(); }

std::string to_string(const BigRational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += '/';
    s += denominator(q).str();
  }
  return s;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  if (!all_digits(num))
    throw ParseError("bad rational token '" + std::string(text) + "'");
  BigInt n{std::string(num)};
  BigInt d = 1;
  if (slash != std::string_view::npos) {
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(den))
      throw ParseError("bad rational token '" + std::string(text) + "'");
    d = BigInt{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  if (neg) n = -n;
  return BigRational(n, d);
}

double to_double(const BigRational& q) {
  using boost::multiprecision::msb;
  if (q.is_zero()) return 0.0;
  BigInt p = numerator(q);
  const BigInt& d = denominator(q);
  const bool neg = p < 0;
  if (neg) p = -p;
  const long est = static_cast<long>(msb(p)) - static_cast<long>(msb(d));
  if (est > 1026) throw std::overflow_error("rational exceeds double range");
  if (est < -1140) return neg ? -0.0 : 0.0;
  // Scale the quotient up to ~96 bits so floor division costs < 1 ulp.
  const long shift = 96 - est;
  const BigInt scaled = shift >= 0 ? BigInt(p << shift) / d : p / BigInt(d << -shift);
  const double r = std::ldexp(scaled.convert_to<double>(), static_cast<int>(-shift));
  if (std::isinf(r)) throw std::overflow_error("rational exceeds double range");
  return neg ? -r : r;
}

}  // namespace hermite2d

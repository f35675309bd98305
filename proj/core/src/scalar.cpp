#include "hermite2d/scalar.hpp"

#include "hermite2d/errors.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace hermite2d {

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  const BigRational n2 = norm2();
  return {re / n2, -im / n2};
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  // (u + r√2)(u - r√2) = u² - 2r², which lies in Q(i) and is nonzero
  // because √2 is not an element of Q(i).
  const GaussianRational two(BigRational(2));
  const GaussianRational denom = unit * unit - two * (radical * radical);
  const GaussianRational dinv = denom.inverse();
  return {unit * dinv, -(radical * dinv)};
}

namespace {

// floor(√2 · 2^200) / 2^200; enough guard bits that a + b·approx keeps
// the double conversion within a couple of ulps for any plausible input.
const BigRational& sqrt2_approx() {
  static const BigRational v = [] {
    const BigInt num = boost::multiprecision::sqrt(BigInt(2) << 400);
    return BigRational(num, BigInt(1) << 200);
  }();
  return v;
}

}  // namespace

std::complex<double> ExactScalar::to_complex() const {
  const BigRational re_exact = unit.re + radical.re * sqrt2_approx();
  const BigRational im_exact = unit.im + radical.im * sqrt2_approx();
  return {to_double(re_exact), to_double(im_exact)};
}

Sign sign(const ExactScalar& x) {
  if (!x.unit.im.is_zero() || !x.radical.im.is_zero())
    throw NotRealError("sign of a non-real value: " + to_string(x));
  const BigRational& a = x.unit.re;
  const BigRational& b = x.radical.re;
  const int sa = sign_of(a);
  const int sb = sign_of(b);
  if (sb == 0) return static_cast<Sign>(sa);
  if (sa == 0) return static_cast<Sign>(sb);
  if (sa == sb) return static_cast<Sign>(sa);
  // Opposite signs: |a| vs |b|√2 decides; a² = 2b² is impossible for
  // nonzero rationals.
  const int cmp = sign_of(a * a - BigRational(2) * b * b);
  if (cmp == 0) return Sign::zero;
  return static_cast<Sign>(cmp > 0 ? sa : sb);
}

ExactScalar pow(const ExactScalar& x, int n) {
  if (n < 0) return pow(x.inverse(), -n);
  ExactScalar r(1);
  ExactScalar base = x;
  while (n > 0) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

std::string to_string(const GaussianRational& g) {
  if (g.is_zero()) return "0";
  std::string s;
  if (!g.re.is_zero()) s = to_string(g.re);
  if (!g.im.is_zero()) {
    std::string im;
    if (g.im == BigRational(1))
      im = "i";
    else if (g.im == BigRational(-1))
      im = "-i";
    else
      im = to_string(g.im) + "i";
    if (!s.empty() && im.front() != '-') s += '+';
    s += im;
  }
  return s;
}

std::string to_string(const ExactScalar& x) {
  if (x.radical.is_zero()) return to_string(x.unit);
  std::string rad = "(" + to_string(x.radical) + ")√2";
  if (x.unit.is_zero()) return rad;
  return "(" + to_string(x.unit) + ")+" + rad;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << to_string(x); }

namespace {

// Recursive-descent parser for the canonical scalar syntax.
//   sum    := ['-'] product (('+'|'-') product)*
//   product:= atom [radical] | radical
//   atom   := '(' sum ')' | 'i' | number ['i']
//   radical:= '√2' | 'sqrt2' | 'sqrt(2)'
class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  ExactScalar parse() {
    ExactScalar v = parse_sum();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("trailing input at '" + std::string(text_.substr(pos_)) + "'");
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat_radical() {
    skip_ws();
    static constexpr std::string_view kUtf8 = "√2";
    if (text_.substr(pos_).starts_with(kUtf8)) {
      pos_ += kUtf8.size();
      return true;
    }
    if (text_.substr(pos_).starts_with("sqrt(2)")) {
      pos_ += 7;
      return true;
    }
    if (text_.substr(pos_).starts_with("sqrt2")) {
      pos_ += 5;
      return true;
    }
    return false;
  }

  ExactScalar parse_sum() {
    ExactScalar acc;
    bool neg = eat('-');
    acc = parse_product();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc += parse_product();
      else if (eat('-'))
        acc -= parse_product();
      else
        return acc;
    }
  }

  ExactScalar parse_product() {
    if (eat_radical()) return ExactScalar::sqrt2();
    ExactScalar a = parse_atom();
    if (eat_radical()) a *= ExactScalar::sqrt2();
    return a;
  }

  ExactScalar parse_atom() {
    skip_ws();
    if (eat('(')) {
      ExactScalar inner = parse_sum();
      if (!eat(')')) throw ParseError("missing ')' in '" + std::string(text_) + "'");
      return inner;
    }
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      return ExactScalar::i();
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
      ++pos_;
    if (pos_ == start)
      throw ParseError("bad scalar token at '" + std::string(text_.substr(start)) + "'");
    BigRational q = parse_rational(text_.substr(start, pos_ - start));
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      return ExactScalar(GaussianRational(BigRational(0), std::move(q)));
    }
    return ExactScalar(std::move(q));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExactScalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

GaussianRational parse_gaussian(std::string_view text) {
  ExactScalar s = parse_scalar(text);
  if (!s.radical.is_zero())
    throw ParseError("expected a Gaussian rational, got '" + std::string(text) + "'");
  return s.unit;
}

}  // namespace hermite2d

#include "hermite2d/poly.hpp"

#include "hermite2d/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermite2d {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "z1", "z2", "u", "v", "x", "y", "t", "r1", "s1", "r2", "s2"};

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (kVarNames[i] == name) return static_cast<Var>(i);
  return std::nullopt;
}

int total_degree(const ExpVec& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

AffineMap shift_map(Var v, Var target, const ExactScalar& offset) {
  AffineMap m;
  LinearForm f;
  f.terms.emplace_back(target, ExactScalar(1));
  f.constant = offset;
  m.emplace(v, std::move(f));
  return m;
}

SparsePoly::SparsePoly(ExactScalar c) {
  if (!c.is_zero()) terms_.emplace(ExpVec{}, std::move(c));
}

SparsePoly SparsePoly::variable(Var v, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  SparsePoly p;
  ExpVec e{};
  exp_of(e, v) = static_cast<std::uint16_t>(exponent);
  p.terms_.emplace(e, ExactScalar(1));
  return p;
}

SparsePoly SparsePoly::monomial(ExactScalar c, std::initializer_list<std::pair<Var, int>> exps) {
  SparsePoly p;
  if (c.is_zero()) return p;
  ExpVec e{};
  for (const auto& [v, k] : exps) {
    if (k < 0) throw std::invalid_argument("negative exponent");
    exp_of(e, v) = static_cast<std::uint16_t>(k);
  }
  p.terms_.emplace(e, std::move(c));
  return p;
}

int SparsePoly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.rbegin()->first);  // graded order: last term is maximal
}

int SparsePoly::degree_in(Var v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(exp_of(e, v)));
  return d;
}

int SparsePoly::degree_in_set(const std::set<Var>& vars) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (Var v : vars) s += exp_of(e, v);
    d = std::max(d, s);
  }
  return d;
}

ExactScalar SparsePoly::coefficient(const ExpVec& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? ExactScalar() : it->second;
}

ExactScalar SparsePoly::constant_term() const { return coefficient(ExpVec{}); }

std::vector<Var> SparsePoly::variables() const {
  std::array<bool, kNumVars> seen{};
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < kNumVars; ++i)
      if (e[i] > 0) seen[i] = true;
  std::vector<Var> out;
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (seen[i]) out.push_back(static_cast<Var>(i));
  return out;
}

void SparsePoly::add_term(const ExpVec& e, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

SparsePoly operator-(const SparsePoly& a) {
  SparsePoly r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      ExpVec e;
      for (std::size_t i = 0; i < kNumVars; ++i)
        e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

SparsePoly operator*(const SparsePoly& a, const ExactScalar& c) {
  SparsePoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, coeff] : a.terms_) r.terms_.emplace(e, coeff * c);
  return r;
}

SparsePoly operator*(const ExactScalar& c, const SparsePoly& a) { return a * c; }

SparsePoly pow(const SparsePoly& p, int n) {
  if (n < 0) throw std::invalid_argument("negative polynomial power");
  SparsePoly r(ExactScalar(1));
  for (int k = 0; k < n; ++k) r *= p;
  return r;
}

SparsePoly derivative(const SparsePoly& p, Var v) {
  SparsePoly r;
  for (const auto& [e, c] : p.terms()) {
    const int k = exp_of(e, v);
    if (k == 0) continue;
    ExpVec d = e;
    exp_of(d, v) = static_cast<std::uint16_t>(k - 1);
    r.add_term(d, c * ExactScalar(k));
  }
  return r;
}

SparsePoly substitute(const SparsePoly& p, const AffineMap& map) {
  // Image polynomial per substituted variable, plus cached powers.
  std::array<const LinearForm*, kNumVars> forms{};
  for (const auto& [v, f] : map) forms[static_cast<std::size_t>(v)] = &f;

  std::array<std::vector<SparsePoly>, kNumVars> powers;  // powers[v][k] = image(v)^k
  auto image_power = [&](std::size_t vi, int k) -> const SparsePoly& {
    auto& cache = powers[vi];
    if (cache.empty()) {
      SparsePoly img;
      if (forms[vi] != nullptr) {
        img = SparsePoly(forms[vi]->constant);
        for (const auto& [tv, tc] : forms[vi]->terms)
          img += SparsePoly::variable(tv) * tc;
      } else {
        img = SparsePoly::variable(static_cast<Var>(vi));
      }
      cache.push_back(SparsePoly(ExactScalar(1)));
      cache.push_back(std::move(img));
    }
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * cache[1]);
    return cache[k];
  };

  SparsePoly result;
  for (const auto& [e, c] : p.terms()) {
    SparsePoly term(c);
    for (std::size_t vi = 0; vi < kNumVars; ++vi)
      if (e[vi] > 0) term *= image_power(vi, e[vi]);
    result += term;
  }
  return result;
}

SparsePoly mixed_exp_operator(const SparsePoly& p, const ExactScalar& c, Var a, Var b) {
  SparsePoly result = p;
  SparsePoly q = p;
  ExactScalar factor(1);
  for (int k = 1;; ++k) {
    q = derivative(derivative(q, a), b);
    if (q.is_zero()) break;  // k exceeded min(deg_a, deg_b)
    factor *= c * ExactScalar(make_rational(1, k));
    result += q * factor;
  }
  return result;
}

namespace {

int svars_degree(const ExpVec& e, const std::array<bool, kNumVars>& in) {
  int d = 0;
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (in[i]) d += e[i];
  return d;
}

std::array<bool, kNumVars> var_mask(const std::set<Var>& vars) {
  std::array<bool, kNumVars> m{};
  for (Var v : vars) m[static_cast<std::size_t>(v)] = true;
  return m;
}

}  // namespace

SparsePoly series_mul(const SparsePoly& a, const SparsePoly& b, const std::set<Var>& svars,
                      int max_deg) {
  if (max_deg < 0) throw std::invalid_argument("negative truncation degree");
  const auto mask = var_mask(svars);
  SparsePoly r;
  for (const auto& [ea, ca] : a.terms()) {
    const int da = svars_degree(ea, mask);
    if (da > max_deg) continue;
    for (const auto& [eb, cb] : b.terms()) {
      if (da + svars_degree(eb, mask) > max_deg) continue;
      ExpVec e;
      for (std::size_t i = 0; i < kNumVars; ++i)
        e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

SparsePoly series_exp(const SparsePoly& p, const std::set<Var>& svars, int max_deg) {
  if (max_deg < 0) throw std::invalid_argument("negative truncation degree");
  const auto mask = var_mask(svars);
  for (const auto& [e, c] : p.terms())
    if (svars_degree(e, mask) == 0)
      throw std::invalid_argument("series_exp needs every term to carry a series variable");
  SparsePoly acc(ExactScalar(1));
  SparsePoly cur(ExactScalar(1));  // p^k / k!
  for (int k = 1; k <= max_deg; ++k) {
    cur = series_mul(cur, p, svars, max_deg) * ExactScalar(make_rational(1, k));
    if (cur.is_zero()) break;
    acc += cur;
  }
  return acc;
}

SparsePoly coefficient_of(const SparsePoly& p, const std::map<Var, int>& assignment) {
  SparsePoly r;
  for (const auto& [e, c] : p.terms()) {
    bool match = true;
    for (const auto& [v, k] : assignment)
      if (exp_of(e, v) != k) {
        match = false;
        break;
      }
    if (!match) continue;
    ExpVec rest = e;
    for (const auto& [v, k] : assignment) exp_of(rest, v) = 0;
    r.add_term(rest, c);
  }
  return r;
}

ExactScalar evaluate(const SparsePoly& p, const std::map<Var, ExactScalar>& point) {
  std::array<const ExactScalar*, kNumVars> vals{};
  for (const auto& [v, s] : point) vals[static_cast<std::size_t>(v)] = &s;
  std::array<std::vector<ExactScalar>, kNumVars> powers;

  ExactScalar acc;
  for (const auto& [e, c] : p.terms()) {
    ExactScalar term = c;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      const int k = e[i];
      if (k == 0) continue;
      if (vals[i] == nullptr)
        throw UnboundVariableError("unbound variable '" +
                                   std::string(var_name(static_cast<Var>(i))) + "'");
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(ExactScalar(1));
      while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * *vals[i]);
      term *= cache[k];
    }
    acc += term;
  }
  return acc;
}

namespace {

std::complex<double> evaluate_float_rec(const SparsePoly& p,
                                        const std::array<std::complex<double>, kNumVars>& vals,
                                        const std::array<bool, kNumVars>& bound,
                                        std::size_t from) {
  if (p.is_zero()) return {0.0, 0.0};
  std::size_t vi = kNumVars;
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = from; i < kNumVars; ++i)
      if (e[i] > 0) {
        vi = std::min(vi, i);
        break;
      }
  if (vi == kNumVars) {  // constant in the remaining variables
    return p.constant_term().to_complex();
  }
  if (!bound[vi])
    throw UnboundVariableError("unbound variable '" +
                               std::string(var_name(static_cast<Var>(vi))) + "'");
  // Group by the exponent of vi, then Horner over that exponent.
  std::map<int, SparsePoly> groups;
  for (const auto& [e, c] : p.terms()) {
    ExpVec rest = e;
    const int k = rest[vi];
    rest[vi] = 0;
    groups[k].add_term(rest, c);
  }
  std::complex<double> acc{0.0, 0.0};
  int prev = -1;
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    const int k = it->first;
    if (prev >= 0)
      for (int j = 0; j < prev - k; ++j) acc *= vals[vi];
    acc += evaluate_float_rec(it->second, vals, bound, vi + 1);
    prev = k;
  }
  for (int j = 0; j < prev; ++j) acc *= vals[vi];
  return acc;
}

}  // namespace

std::complex<double> evaluate_float(const SparsePoly& p,
                                    const std::map<Var, std::complex<double>>& point) {
  std::array<std::complex<double>, kNumVars> vals{};
  std::array<bool, kNumVars> bound{};
  for (const auto& [v, z] : point) {
    vals[static_cast<std::size_t>(v)] = z;
    bound[static_cast<std::size_t>(v)] = true;
  }
  return evaluate_float_rec(p, vals, bound, 0);
}

SparsePoly conjugate_coefficients(const SparsePoly& p) {
  SparsePoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(e, c.conj());
  return r;
}

std::string to_string(const SparsePoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += var_name(static_cast<Var>(i));
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    std::string cs = to_string(c);
    std::string term;
    if (mono.empty()) {
      term = cs;
    } else if (cs == "1") {
      term = mono;
    } else if (cs == "-1") {
      term = "-" + mono;
    } else {
      const bool needs_parens = cs.find_first_of("+-", 1) != std::string::npos;
      term = (needs_parens ? "(" + cs + ")" : cs) + "*" + mono;
    }
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out;
}

}  // namespace hermite2d

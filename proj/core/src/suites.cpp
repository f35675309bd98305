#include "hermite2d/suites.hpp"

#include "hermite2d/errors.hpp"
#include "hermite2d/json_io.hpp"

#include <atomic>
#include <functional>
#include <memory>
#include <thread>
#include <utility>

namespace hermite2d {

const std::vector<SuiteId>& all_suites() {
  static const std::vector<SuiteId> ids = {
      SuiteId::gf,           SuiteId::rodrigues_routes,
      SuiteId::swap_index,   SuiteId::orthogonality,
      SuiteId::orthogonality_condition,
      SuiteId::moment_rep,   SuiteId::wigner,
      SuiteId::wigner_deformed,
      SuiteId::translation,  SuiteId::real_basis,
      SuiteId::gram,         SuiteId::determinants,
      SuiteId::determinant_oracle,
      SuiteId::real_hermite, SuiteId::at_zero,
  };
  return ids;
}

std::string_view suite_name(SuiteId id) {
  switch (id) {
    case SuiteId::gf: return "gf";
    case SuiteId::rodrigues_routes: return "rodrigues-routes";
    case SuiteId::swap_index: return "swap";
    case SuiteId::orthogonality: return "orthogonality";
    case SuiteId::orthogonality_condition: return "orthogonality-condition";
    case SuiteId::moment_rep: return "moment-rep";
    case SuiteId::wigner: return "wigner";
    case SuiteId::wigner_deformed: return "wigner-deformed";
    case SuiteId::translation: return "translation";
    case SuiteId::real_basis: return "real-basis";
    case SuiteId::gram: return "gram";
    case SuiteId::determinants: return "determinants";
    case SuiteId::determinant_oracle: return "determinant-oracle";
    case SuiteId::real_hermite: return "real-hermite";
    case SuiteId::at_zero: return "at-zero";
  }
  return "";
}

std::optional<SuiteId> suite_from_name(std::string_view name) {
  for (SuiteId id : all_suites())
    if (suite_name(id) == name) return id;
  return std::nullopt;
}

const std::vector<GMatrix>& default_g_set() {
  static const std::vector<GMatrix> set = {
      parse_gmatrix("1,0;0,1"),
      parse_gmatrix("0,1;1,0"),
      parse_gmatrix("2,0;0,3"),
      parse_gmatrix("1,1;0,1"),
      parse_gmatrix("2,i;-i,2"),
  };
  return set;
}

const std::vector<GMatrix>& hermitian_pair_g_set() {
  static const std::vector<GMatrix> set = {
      parse_gmatrix("1,0;0,1"),
      parse_gmatrix("2,i;-i,2"),
      parse_gmatrix("1,1-i;1+i,1"),
  };
  return set;
}

const std::vector<GaussianRational>& default_points() {
  static const std::vector<GaussianRational> pts = {
      GaussianRational(0),
      GaussianRational(BigRational(1), BigRational(1)),
      GaussianRational(BigRational(1, 2), BigRational(-1, 3)),
  };
  return pts;
}

const std::vector<GaussianRational>& determinant_points() {
  static const std::vector<GaussianRational> pts = {
      GaussianRational(0),
      GaussianRational(1),
      GaussianRational(BigRational(1, 2), BigRational(1, 3)),
      GaussianRational(BigRational(-1), BigRational(1)),
      GaussianRational(BigRational(2, 5), BigRational(-3, 7)),
  };
  return pts;
}

namespace {

using Case = std::function<VerificationReport()>;

std::vector<VerificationReport> run_cases(const std::vector<Case>& cases, int jobs) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  std::vector<VerificationReport> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cases.size()) return;
      try {
        results[i] = cases[i]();
      } catch (const std::exception& e) {
        VerificationReport rep;
        rep.identity = "exception";
        rep.lhs = e.what();
        rep.rhs = "no exception";
        rep.pass = false;
        results[i] = std::move(rep);
      }
    }
  };
  if (jobs == 1 || cases.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return results;
}

VerificationReport poly_case(std::string identity, nlohmann::ordered_json params,
                             const SparsePoly& actual, const SparsePoly& expected) {
  VerificationReport rep;
  rep.identity = std::move(identity);
  rep.params = std::move(params);
  rep.lhs = to_string(actual);
  rep.rhs = to_string(expected);
  rep.pass = actual == expected;
  return rep;
}

VerificationReport scalar_case(std::string identity, nlohmann::ordered_json params,
                               const ExactScalar& actual, const ExactScalar& expected) {
  VerificationReport rep;
  rep.identity = std::move(identity);
  rep.params = std::move(params);
  rep.lhs = to_string(actual);
  rep.rhs = to_string(expected);
  rep.pass = actual == expected;
  return rep;
}

ExactScalar factorial_scalar(int n) { return ExactScalar(BigRational(factorial(n))); }

std::string render_column(const std::vector<ExactScalar>& col) {
  std::string s = "[";
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (i > 0) s += ", ";
    s += to_string(col[i]);
  }
  return s + "]";
}

const std::vector<GMatrix>& pick_g_set(const RunConfig& cfg) {
  return cfg.g_set.empty() ? default_g_set() : cfg.g_set;
}

const std::vector<GaussianRational>& pick_points(const RunConfig& cfg) {
  return cfg.points.empty() ? default_points() : cfg.points;
}

// --- individual suite case generators -----------------------------------

void gen_gf(const RunConfig& cfg, std::vector<Case>& cases) {
  const int bound = cfg.max_degree.value_or(6);
  for (const GMatrix& g : pick_g_set(cfg)) {
    auto table = std::make_shared<std::map<std::pair<int, int>, SparsePoly>>(
        gf_table(g, 2 * bound));
    for (int m = 0; m <= bound; ++m) {
      for (int n = 0; n <= bound; ++n) {
        cases.push_back([g, m, n, table] {
          nlohmann::ordered_json params{{"g", gmatrix_to_json(g)}, {"m", m}, {"n", n}};
          return poly_case("eqGFHg", std::move(params), table->at({m, n}),
                           deformed_sum(g, m, n));
        });
      }
    }
  }
}

void gen_rodrigues_routes(const RunConfig& cfg, std::vector<Case>& cases) {
  const int bound = cfg.max_degree.value_or(6);
  for (const GMatrix& g : pick_g_set(cfg)) {
    const bool is_identity = g == GMatrix::identity();
    for (int m = 0; m <= bound; ++m) {
      for (int n = 0; n <= bound; ++n) {
        nlohmann::ordered_json params{{"g", gmatrix_to_json(g)}, {"m", m}, {"n", n}};
        if (is_identity) {
          cases.push_back([g, m, n, params] {
            return poly_case("eqH-Ito", params, deformed_sum(g, m, n), complex_hermite(m, n));
          });
          cases.push_back([m, n, params] {
            return poly_case("compherm-basis", params, complex_hermite_operator(m, n),
                             complex_hermite(m, n));
          });
        }
        cases.push_back([g, m, n, params] {
          return poly_case("eq1.1.2", params, deformed_rodrigues(g, m, n),
                           deformed_sum(g, m, n));
        });
        cases.push_back([g, m, n, params] {
          return poly_case("eq1.1.1", params, sandwich_route(g, m, n), deformed_sum(g, m, n));
        });
        cases.push_back([g, m, n, params] {
          return poly_case("al-form", params, deformed_via_matrix(g, m, m + n),
                           deformed_sum(g, m, n));
        });
      }
    }
  }
}

void gen_swap(const RunConfig& cfg, std::vector<Case>& cases) {
  const int bound = cfg.max_degree.value_or(6);
  for (int m = 0; m <= bound; ++m) {
    for (int n = 0; n <= bound; ++n) {
      cases.push_back([m, n] {
        return poly_case("swap", {{"m", m}, {"n", n}},
                         deformed_sum(GMatrix::swap(), m, n), complex_hermite(n, m));
      });
    }
  }
}

using PolyTable = std::vector<std::vector<SparsePoly>>;

std::shared_ptr<PolyTable> diag_table(const GMatrix& g, int bound, bool conjugated) {
  auto table = std::make_shared<PolyTable>(bound + 1, std::vector<SparsePoly>(bound + 1));
  for (int m = 0; m <= bound; ++m) {
    for (int n = 0; n <= bound; ++n) {
      SparsePoly p = deformed_sum(g, m, n);
      if (conjugated) p = diagonal_conjugate(p);
      (*table)[m][n] = diagonal_substitution(p);
    }
  }
  return table;
}

void gen_orthogonality(const RunConfig& cfg, std::vector<Case>& cases) {
  const GMatrix id = GMatrix::identity();
  // Undeformed block, indices <= 5 by default.
  {
    const int bound = cfg.max_degree.value_or(5);
    auto left = diag_table(id, bound, false);
    auto right = diag_table(id, bound, true);
    for (int m = 0; m <= bound; ++m)
      for (int n = 0; n <= bound; ++n)
        for (int p = 0; p <= bound; ++p)
          for (int q = 0; q <= bound; ++q) {
            cases.push_back([m, n, p, q, left, right] {
              const ScaledExact val = integrate_gaussian_product(
                  (*left)[m][n], (*right)[p][q], {Var::x, Var::y}, true);
              const ExactScalar expected =
                  (m == p && n == q) ? factorial_scalar(m) * factorial_scalar(n)
                                     : ExactScalar(0);
              return scalar_case("H-Ito-OR", {{"m", m}, {"n", n}, {"p", p}, {"q", q}},
                                 val.coeff, expected);
            });
          }
  }
  // Deformed block with h = (g*)^{-1}, indices <= 4 by default.
  {
    const int bound = cfg.max_degree.value_or(4);
    for (const GMatrix& g : pick_g_set(cfg)) {
      const GMatrix h = g.conj_transpose().inverse();
      auto left = diag_table(g, bound, false);
      auto right = diag_table(h, bound, true);
      for (int m = 0; m <= bound; ++m)
        for (int n = 0; n <= bound; ++n)
          for (int p = 0; p <= bound; ++p)
            for (int q = 0; q <= bound; ++q) {
              cases.push_back([g, h, m, n, p, q, left, right] {
                const ScaledExact val = integrate_gaussian_product(
                    (*left)[m][n], (*right)[p][q], {Var::x, Var::y}, true);
                const ExactScalar expected =
                    (m == p && n == q) ? factorial_scalar(m) * factorial_scalar(n)
                                       : ExactScalar(0);
                nlohmann::ordered_json params{{"g", gmatrix_to_json(g)},
                                              {"h", gmatrix_to_json(h)},
                                              {"m", m},
                                              {"n", n},
                                              {"p", p},
                                              {"q", q}};
                return scalar_case("eqorthrel", std::move(params), val.coeff, expected);
              });
            }
    }
  }
  // A pair violating the diagonality condition must show a nonzero
  // cross term somewhere below indices 2.
  cases.push_back([] {
    const GMatrix g = GMatrix::identity();
    const GMatrix h = parse_gmatrix("1,1;0,1");
    VerificationReport rep;
    rep.identity = "eqcond-witness";
    rep.params = {{"g", gmatrix_to_json(g)}, {"h", gmatrix_to_json(h)}};
    rep.rhs = "nonzero cross term";
    rep.lhs = "none found";
    for (int m = 0; m <= 2 && !rep.pass; ++m)
      for (int n = 0; n <= 2 && !rep.pass; ++n)
        for (int p = 0; p <= 2 && !rep.pass; ++p)
          for (int q = 0; q <= 2 && !rep.pass; ++q) {
            if (m == p && n == q) continue;
            const ScaledExact val = orthogonality_integral(g, h, m, n, p, q);
            if (!val.coeff.is_zero()) {
              rep.pass = true;
              rep.params["m"] = m;
              rep.params["n"] = n;
              rep.params["p"] = p;
              rep.params["q"] = q;
              rep.lhs = to_string(val.coeff);
            }
          }
    return rep;
  });
}

void gen_orthogonality_condition(const RunConfig& cfg, std::vector<Case>& cases) {
  const auto& set = pick_g_set(cfg);
  std::vector<std::pair<GMatrix, GMatrix>> pairs;
  for (const GMatrix& g : set)
    for (const GMatrix& h : set) pairs.emplace_back(g, h);
  for (const GMatrix& g : set) pairs.emplace_back(g, g.conj_transpose().inverse());

  for (const auto& [g, h] : pairs) {
    cases.push_back([g, h] {
      const OrthResult cond = orthogonality_condition(g, h);
      bool cross_all_zero = true;
      bool diag_match = true;
      for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n)
          for (int p = 0; p <= 2; ++p)
            for (int q = 0; q <= 2; ++q) {
              const ScaledExact val = orthogonality_integral(g, h, m, n, p, q);
              if (m == p && n == q) {
                if (cond.is_orthogonal_family) {
                  const ExactScalar expected = factorial_scalar(m) * factorial_scalar(n) *
                                               pow(cond.lambda1, m) * pow(cond.lambda2, n);
                  if (val.coeff != expected) diag_match = false;
                }
              } else if (!val.coeff.is_zero()) {
                cross_all_zero = false;
              }
            }
      VerificationReport rep;
      rep.identity = "eqcond";
      rep.params = {{"g", gmatrix_to_json(g)}, {"h", gmatrix_to_json(h)}};
      if (cond.is_orthogonal_family) {
        rep.params["lambda1"] = to_string(cond.lambda1);
        rep.params["lambda2"] = to_string(cond.lambda2);
      }
      rep.lhs = cond.is_orthogonal_family ? "diagonal" : "non-diagonal";
      rep.rhs = cross_all_zero ? (diag_match ? "diagonal" : "diagonal, norms off")
                               : "non-diagonal";
      rep.pass = cond.is_orthogonal_family ? (cross_all_zero && diag_match) : !cross_all_zero;
      return rep;
    });
  }
}

void gen_moment_rep(const RunConfig& cfg, std::vector<Case>& cases) {
  const int bound = cfg.max_degree.value_or(4);
  for (const GMatrix& g : pick_g_set(cfg))
    for (int m = 0; m <= bound; ++m)
      for (int n = 0; n <= bound; ++n)
        for (const GaussianRational& pt : pick_points(cfg))
          cases.push_back([g, m, n, pt] { return verify_moment_rep(g, m, n, pt.re, pt.im); });
}

const std::vector<ExactScalar>& wigner_shifts() {
  static const std::vector<ExactScalar> shifts = {
      ExactScalar(0), ExactScalar(BigRational(1, 2)),
      ExactScalar(GaussianRational(BigRational(0), BigRational(1, 3)))};
  return shifts;
}

void gen_wigner(const RunConfig& cfg, std::vector<Case>& cases) {
  const int bound = cfg.max_degree.value_or(5);
  for (int m = 0; m <= bound; ++m)
    for (int n = 0; n <= bound; ++n)
      for (const ExactScalar& a : wigner_shifts())
        for (const GaussianRational& z : pick_points(cfg))
          cases.push_back([m, n, a, z] { return verify_wigner(m, n, a, z); });
}

void gen_wigner_deformed(const RunConfig& cfg, std::vector<Case>& cases) {
  const int bound = cfg.max_degree.value_or(4);
  const ExactScalar a(BigRational(1, 2));
  const auto& pts = pick_points(cfg);
  const std::size_t npts = std::min<std::size_t>(2, pts.size());
  for (const GMatrix& g : pick_g_set(cfg))
    for (int L = 0; L <= bound; ++L)
      for (int k = 0; k <= L; ++k)
        for (std::size_t zi = 0; zi < npts; ++zi) {
          const GaussianRational z = pts[zi];
          cases.push_back([g, k, L, a, z] { return verify_wigner_deformed(g, k, L, a, z); });
        }
}

void gen_translation(const RunConfig& cfg, std::vector<Case>& cases) {
  const int bound = cfg.max_degree.value_or(3);
  static const std::vector<GaussianRational> shifts = {
      GaussianRational(0), GaussianRational(1),
      GaussianRational(BigRational(1), BigRational(1)),
      GaussianRational(BigRational(1, 2), BigRational(-1, 3))};
  for (int m = 0; m <= bound; ++m)
    for (int n = 0; n <= bound; ++n)
      for (int p = 0; p <= bound; ++p)
        for (int q = 0; q <= bound; ++q)
          for (const GaussianRational& a : shifts)
            cases.push_back([m, n, p, q, a] { return verify_translation(m, n, p, q, a); });
}

void gen_real_basis(const RunConfig& cfg, std::vector<Case>& cases) {
  const int bound = cfg.max_degree.value_or(8);
  for (int L = 0; L <= bound; ++L) {
    auto M = std::make_shared<DeformationMatrix>(real_basis_matrix(L));
    for (int m = 0; m <= L; ++m) {
      cases.push_back([L, m, M] {
        const std::vector<ExactScalar> expansion = complex_to_real_expand(m, L - m);
        std::vector<ExactScalar> column(L + 1);
        for (int r = 0; r <= L; ++r) column[r] = M->at(r, m);
        VerificationReport rep;
        rep.identity = "comp-real-herm7";
        rep.params = {{"L", L}, {"m", m}};
        rep.lhs = render_column(expansion);
        rep.rhs = render_column(column);
        rep.pass = expansion == column;
        return rep;
      });
    }
  }
}

void gen_gram(const RunConfig& cfg, std::vector<Case>& cases) {
  const int bound = cfg.max_degree.value_or(8);
  for (int L = 0; L <= bound; ++L) {
    auto M = std::make_shared<DeformationMatrix>(real_basis_matrix(L));
    for (int m = 0; m <= L; ++m) {
      for (int mp = 0; mp <= L; ++mp) {
        cases.push_back([L, m, mp, M] {
          ExactScalar acc;
          for (int r = 0; r <= L; ++r) {
            const ExactScalar weight(BigRational(
                (BigInt(1) << L) * factorial(r) * factorial(L - r)));
            acc += M->at(r, m) * M->at(r, mp).conj() * weight;
          }
          const ExactScalar expected =
              m == mp ? factorial_scalar(m) * factorial_scalar(L - m) : ExactScalar(0);
          return scalar_case("gram", {{"L", L}, {"m", m}, {"mp", mp}}, acc, expected);
        });
      }
    }
  }
}

void gen_determinants(const RunConfig& cfg, std::vector<Case>& cases) {
  const int nmax = cfg.hankel_size.value_or(4);
  for (const GMatrix& g : hermitian_pair_g_set())
    for (int N = 1; N <= nmax; ++N)
      for (int s = 0; s <= 2; ++s)
        for (const GaussianRational& z : determinant_points()) {
          cases.push_back([g, N, s, z] {
            VerificationReport rep;
            rep.identity = "determinant-positivity";
            rep.params = {{"g", gmatrix_to_json(g)}, {"N", N}, {"s", s}, {"z", to_string(z)}};
            rep.rhs = "positive";
            rep.pi_power = N;
            try {
              const PositivityResult res = positivity_check({g, N, s, z.re, z.im});
              rep.lhs = to_string(res.value);
              rep.pass = res.positive;
            } catch (const NotRealError& e) {
              rep.lhs = std::string("not real: ") + e.what();
              rep.pass = false;
            }
            return rep;
          });
        }
}

void gen_determinant_oracle(const RunConfig& cfg, std::vector<Case>& cases) {
  const int nmax = std::min(cfg.hankel_size.value_or(2), 2);
  for (const GMatrix& g : hermitian_pair_g_set())
    for (int N = 1; N <= nmax; ++N)
      for (int s = 0; s <= 1; ++s)
        for (const GaussianRational& z : determinant_points()) {
          cases.push_back([g, N, s, z] {
            const HankelSpec spec{g, N, s, z.re, z.im};
            const ScaledExact det = exact_determinant(hankel_matrix(spec));
            const ScaledExact oracle = oracle_delta(spec);
            VerificationReport rep;
            rep.identity = "eqDeltaN";
            rep.params = {{"g", gmatrix_to_json(g)}, {"N", N}, {"s", s}, {"z", to_string(z)}};
            rep.lhs = to_string(det);
            rep.rhs = to_string(oracle);
            rep.pi_power = det.pi_power;
            rep.pass = det == oracle;
            return rep;
          });
        }
  // Closed values at the identity deformation, no index shift.
  for (int N = 1; N <= nmax; ++N)
    for (const GaussianRational& z : determinant_points()) {
      cases.push_back([N, z] {
        const HankelSpec spec{GMatrix::identity(), N, 0, z.re, z.im};
        const ScaledExact det = exact_determinant(hankel_matrix(spec));
        const ScaledExact expected(ExactScalar(1), N);
        VerificationReport rep;
        rep.identity = "eqDeltaN";
        rep.params = {{"closed", true}, {"N", N}, {"z", to_string(z)}};
        rep.lhs = to_string(det);
        rep.rhs = to_string(expected);
        rep.pi_power = N;
        rep.pass = det == expected;
        return rep;
      });
    }
}

void gen_real_hermite(const RunConfig& cfg, std::vector<Case>& cases) {
  const int bound = cfg.max_degree.value_or(12);
  for (int n = 0; n <= bound; ++n)
    cases.push_back([n] {
      return poly_case("real-herm", {{"n", n}}, real_hermite(n), real_hermite_rodrigues(n));
    });
}

void gen_at_zero(const RunConfig& cfg, std::vector<Case>& cases) {
  const int bound = cfg.max_degree.value_or(8);
  for (int m = 0; m <= bound; ++m)
    for (int n = 0; n <= bound; ++n)
      cases.push_back([m, n] {
        ExactScalar expected;
        if (m == n) {
          expected = factorial_scalar(n);
          if (n % 2 != 0) expected = -expected;
        }
        return scalar_case("at-zero", {{"m", m}, {"n", n}}, hermite_at_zero(m, n), expected);
      });
}

}  // namespace

std::vector<VerificationReport> run_suite(SuiteId id, const RunConfig& cfg) {
  if (cfg.max_degree && *cfg.max_degree < 0)
    throw std::invalid_argument("max degree must be nonnegative");
  if (cfg.hankel_size && *cfg.hankel_size < 1)
    throw std::invalid_argument("Hankel size must be >= 1");
  std::vector<Case> cases;
  switch (id) {
    case SuiteId::gf: gen_gf(cfg, cases); break;
    case SuiteId::rodrigues_routes: gen_rodrigues_routes(cfg, cases); break;
    case SuiteId::swap_index: gen_swap(cfg, cases); break;
    case SuiteId::orthogonality: gen_orthogonality(cfg, cases); break;
    case SuiteId::orthogonality_condition: gen_orthogonality_condition(cfg, cases); break;
    case SuiteId::moment_rep: gen_moment_rep(cfg, cases); break;
    case SuiteId::wigner: gen_wigner(cfg, cases); break;
    case SuiteId::wigner_deformed: gen_wigner_deformed(cfg, cases); break;
    case SuiteId::translation: gen_translation(cfg, cases); break;
    case SuiteId::real_basis: gen_real_basis(cfg, cases); break;
    case SuiteId::gram: gen_gram(cfg, cases); break;
    case SuiteId::determinants: gen_determinants(cfg, cases); break;
    case SuiteId::determinant_oracle: gen_determinant_oracle(cfg, cases); break;
    case SuiteId::real_hermite: gen_real_hermite(cfg, cases); break;
    case SuiteId::at_zero: gen_at_zero(cfg, cases); break;
  }
  return run_cases(cases, cfg.jobs);
}

}  // namespace hermite2d

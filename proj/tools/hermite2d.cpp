// Command-line front end: exact coefficients, deformation matrices,
// Hankel determinants, and the named verification suites.

#include "hermite2d/errors.hpp"
#include "hermite2d/json_io.hpp"
#include "hermite2d/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

using namespace hermite2d;

enum class Format { json, csv, pretty };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "pretty") return Format::pretty;
  throw ParseError("unknown format '" + s + "'");
}

// Stdout unless --output was given.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<GaussianRational> parse_points(const std::string& text) {
  std::vector<GaussianRational> pts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      if (i > start) pts.push_back(parse_gaussian(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (pts.empty()) throw ParseError("empty point list");
  return pts;
}

std::string poly_csv(int m, int n, const SparsePoly& p) {
  std::string out = "m,n,exp_z1,exp_z2,coeff\n";
  for (const auto& [e, c] : p.terms()) {
    out += std::to_string(m) + "," + std::to_string(n) + "," +
           std::to_string(exp_of(e, Var::z1)) + "," + std::to_string(exp_of(e, Var::z2)) +
           "," + to_string(c) + "\n";
  }
  return out;
}

struct CoeffsArgs {
  int m = 0, n = 0;
  std::string g;
  std::string format = "json";
  std::string output;
};

int run_coeffs(const CoeffsArgs& a) {
  const GMatrix g = a.g.empty() ? GMatrix::identity() : parse_gmatrix(a.g);
  const SparsePoly p = deformed_sum(g, a.m, a.n);
  Sink sink(a.output);
  switch (parse_format(a.format)) {
    case Format::json: sink.out() << poly_to_json(p).dump() << "\n"; break;
    case Format::csv: sink.out() << poly_csv(a.m, a.n, p); break;
    case Format::pretty: sink.out() << to_string(p) << "\n"; break;
  }
  return 0;
}

struct EvalArgs {
  int m = 0, n = 0;
  std::string g;
  std::string z1;
  std::string z2;
  std::string output;
};

int run_eval(const EvalArgs& a) {
  const GMatrix g = a.g.empty() ? GMatrix::identity() : parse_gmatrix(a.g);
  const ExactScalar z1v = parse_scalar(a.z1);
  const ExactScalar z2v = a.z2.empty() ? z1v.conj() : parse_scalar(a.z2);
  const ExactScalar value =
      evaluate(deformed_sum(g, a.m, a.n), {{Var::z1, z1v}, {Var::z2, z2v}});
  nlohmann::ordered_json j;
  j["m"] = a.m;
  j["n"] = a.n;
  j["g"] = gmatrix_to_json(g);
  j["z1"] = to_string(z1v);
  j["z2"] = to_string(z2v);
  j["value"] = to_string(value);
  const auto f = value.to_complex();
  j["value_float"] = {f.real(), f.imag()};
  Sink sink(a.output);
  sink.out() << j.dump() << "\n";
  return 0;
}

struct MatrixArgs {
  int L = 0;
  std::string kind;
  std::string g;
  std::string output;
};

int run_matrix(const MatrixArgs& a) {
  Sink sink(a.output);
  if (a.kind == "deformation") {
    if (a.g.empty()) {
      std::cerr << "error: --kind deformation requires --g\n";
      return 2;
    }
    const GMatrix g = parse_gmatrix(a.g);
    sink.out() << matrix_to_json(deformation_matrix(g, a.L), &g).dump() << "\n";
    return 0;
  }
  if (a.kind == "real-basis") {
    if (!a.g.empty()) {
      std::cerr << "error: --g is only meaningful with --kind deformation\n";
      return 2;
    }
    sink.out() << matrix_to_json(real_basis_matrix(a.L), nullptr).dump() << "\n";
    return 0;
  }
  std::cerr << "error: unknown matrix kind '" << a.kind << "'\n";
  return 2;
}

struct DetArgs {
  int N = 1;
  int s = 0;
  std::string z = "0";
  std::string g;
  std::string output;
};

int run_det(const DetArgs& a) {
  const GMatrix g = a.g.empty() ? GMatrix::identity() : parse_gmatrix(a.g);
  if (!g.hermitian_pair()) {
    std::cerr << "error: g violates the hermitian-pair condition: " << to_string(g) << "\n";
    return 2;
  }
  const GaussianRational z = parse_gaussian(a.z);
  const HankelSpec spec{g, a.N, a.s, z.re, z.im};
  PositivityResult res;
  try {
    res = positivity_check(spec);
  } catch (const NotRealError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  Sink sink(a.output);
  sink.out() << det_to_json(spec, res).dump() << "\n";
  return 0;
}

struct VerifyArgs {
  std::string suite;
  int max_degree = -1;  // -1: not set
  int hankel_size = 0;  // 0: not set
  int jobs = 0;
  std::vector<std::string> g;
  std::string points;
  std::string format = "json";
  std::string output;
};

int run_verify(const VerifyArgs& a) {
  RunConfig cfg;
  if (a.max_degree >= 0) cfg.max_degree = a.max_degree;
  if (a.hankel_size > 0) cfg.hankel_size = a.hankel_size;
  cfg.jobs = a.jobs;
  for (const std::string& gs : a.g) cfg.g_set.push_back(parse_gmatrix(gs));
  if (!a.points.empty()) cfg.points = parse_points(a.points);

  std::vector<SuiteId> suites;
  if (a.suite == "all") {
    suites = all_suites();
  } else {
    const auto id = suite_from_name(a.suite);
    if (!id) {
      std::cerr << "error: unknown suite '" << a.suite << "'\n";
      return 2;
    }
    suites.push_back(*id);
  }

  const Format format = parse_format(a.format);
  Sink sink(a.output);
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t total = 0;
  std::size_t failed = 0;
  if (format == Format::csv) sink.out() << "identity,params,lhs,rhs,pi_power,pass\n";
  for (SuiteId id : suites) {
    const auto reports = run_suite(id, cfg);
    for (const auto& rep : reports) {
      ++total;
      if (!rep.pass) ++failed;
      switch (format) {
        case Format::json: sink.out() << to_json_line(rep) << "\n"; break;
        case Format::csv: sink.out() << report_to_csv_line(rep) << "\n"; break;
        case Format::pretty: sink.out() << report_to_pretty_line(rep) << "\n"; break;
      }
    }
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  // Counts and wall time go to stderr so report streams stay
  // byte-reproducible run to run.
  std::cerr << "verified " << total << " cases, " << (total - failed) << " passed, " << failed
            << " failed in " << elapsed.count() << " ms\n";
  return failed == 0 ? 0 : 1;
}

struct BenchArgs {
  int m = 6, n = 6;
  std::string g = "2,i;-i,2";
  int reps = 5;
  std::string output;
};

int run_bench(const BenchArgs& a) {
  const GMatrix g = parse_gmatrix(a.g);
  Sink sink(a.output);
  auto time_op = [&](const char* name, auto&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int r = 0; r < a.reps; ++r) fn();
    const auto dt = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    nlohmann::ordered_json j;
    j["op"] = name;
    j["m"] = a.m;
    j["n"] = a.n;
    j["reps"] = a.reps;
    j["ms_per_call"] = dt / a.reps;
    sink.out() << j.dump() << "\n";
  };
  time_op("complex_hermite", [&] { complex_hermite(a.m, a.n); });
  time_op("deformed_sum", [&] { deformed_sum(g, a.m, a.n); });
  time_op("deformed_rodrigues", [&] { deformed_rodrigues(g, a.m, a.n); });
  time_op("sandwich_route", [&] { sandwich_route(g, a.m, a.n); });
  time_op("deformed_via_matrix", [&] { deformed_via_matrix(g, a.m, a.m + a.n); });
  time_op("gf_table", [&] { gf_table(g, a.m + a.n); });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for bivariate deformed complex Hermite polynomials"};
  app.require_subcommand(1);

  CoeffsArgs coeffs_args;
  auto* coeffs = app.add_subcommand("coeffs", "print one polynomial as JSON/CSV");
  coeffs->add_option("--m", coeffs_args.m, "first index")->required()->check(CLI::NonNegativeNumber);
  coeffs->add_option("--n", coeffs_args.n, "second index")->required()->check(CLI::NonNegativeNumber);
  coeffs->add_option("--g", coeffs_args.g, "deformation matrix 'a,b;c,d' (default identity)");
  coeffs->add_option("--format", coeffs_args.format, "json|csv|pretty");
  coeffs->add_option("--output", coeffs_args.output, "write to file instead of stdout");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate one polynomial at an exact point");
  eval->add_option("--m", eval_args.m, "first index")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--n", eval_args.n, "second index")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--g", eval_args.g, "deformation matrix (default identity)");
  eval->add_option("--z1", eval_args.z1, "value for z1, canonical scalar syntax")->required();
  eval->add_option("--z2", eval_args.z2, "value for z2 (default: conjugate of z1)");
  eval->add_option("--output", eval_args.output, "write to file instead of stdout");

  MatrixArgs matrix_args;
  auto* matrix = app.add_subcommand("matrix", "print a basis-change matrix as JSON");
  matrix->add_option("--L", matrix_args.L, "level (matrix size L+1)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  matrix->add_option("--kind", matrix_args.kind, "deformation|real-basis")->required();
  matrix->add_option("--g", matrix_args.g, "deformation matrix (deformation kind only)");
  matrix->add_option("--output", matrix_args.output, "write to file instead of stdout");

  DetArgs det_args;
  auto* det = app.add_subcommand("det", "Hankel determinant value and sign");
  det->add_option("--N", det_args.N, "matrix size")->required()->check(CLI::PositiveNumber);
  det->add_option("--s", det_args.s, "index shift")->check(CLI::NonNegativeNumber);
  det->add_option("--z", det_args.z, "evaluation point x0+y0i");
  det->add_option("--g", det_args.g, "hermitian-pair deformation matrix (default identity)");
  det->add_option("--output", det_args.output, "write to file instead of stdout");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", verify_args.suite, "suite name or 'all'")->required();
  verify->add_option("--max-degree", verify_args.max_degree, "override the suite's sweep bound")
      ->envname("HERMITE2D_MAX_DEGREE")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--N", verify_args.hankel_size, "override the largest Hankel size")
      ->check(CLI::PositiveNumber);
  verify->add_option("--jobs", verify_args.jobs, "worker threads (default: processors)");
  verify->add_option("--g", verify_args.g, "replace the default g set (repeatable)");
  verify->add_option("--points", verify_args.points, "';'-separated evaluation points");
  verify->add_option("--format", verify_args.format, "json|csv|pretty");
  verify->add_option("--output", verify_args.output, "write to file instead of stdout");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "time the construction routes");
  bench->add_option("--m", bench_args.m, "first index")->check(CLI::NonNegativeNumber);
  bench->add_option("--n", bench_args.n, "second index")->check(CLI::NonNegativeNumber);
  bench->add_option("--g", bench_args.g, "deformation matrix");
  bench->add_option("--reps", bench_args.reps, "repetitions per op")->check(CLI::PositiveNumber);
  bench->add_option("--output", bench_args.output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (coeffs->parsed()) return run_coeffs(coeffs_args);
    if (eval->parsed()) return run_eval(eval_args);
    if (matrix->parsed()) return run_matrix(matrix_args);
    if (det->parsed()) return run_det(det_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (bench->parsed()) return run_bench(bench_args);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotRealError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

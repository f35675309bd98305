#pragma once

#include "hermite2d/determinant.hpp"
#include "hermite2d/hermite.hpp"
#include "hermite2d/poly.hpp"
#include "hermite2d/report.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace hermite2d {

/// {"terms":[{"exp":{"z1":m,...},"coeff":"..."}]}; zero exponents are
/// omitted and terms appear in graded-lexicographic order.
nlohmann::ordered_json poly_to_json(const SparsePoly& p);
SparsePoly poly_from_json(const nlohmann::ordered_json& j);

/// Arrays-of-arrays of canonical scalar strings, row-major, with
/// {"kind","L"} metadata and "g" when the matrix depends on one.
nlohmann::ordered_json matrix_to_json(const DeformationMatrix& m, const GMatrix* g);

nlohmann::ordered_json det_to_json(const HankelSpec& spec, const PositivityResult& res);

nlohmann::ordered_json gmatrix_to_json(const GMatrix& g);

std::string report_to_csv_line(const VerificationReport& r);
std::string report_to_pretty_line(const VerificationReport& r);

}  // namespace hermite2d

#include "hermite2d/gmatrix.hpp"

#include "hermite2d/errors.hpp"

#include <stdexcept>
#include <vector>

namespace hermite2d {

GMatrix GMatrix::inverse() const {
  const ExactScalar d = det();
  if (d.is_zero()) throw std::domain_error("singular g-matrix: " + to_string(*this));
  const ExactScalar dinv = d.inverse();
  return {g22 * dinv, -g12 * dinv, -g21 * dinv, g11 * dinv};
}

std::string to_string(const GMatrix& g) {
  return to_string(g.g11) + "," + to_string(g.g12) + ";" + to_string(g.g21) + "," +
         to_string(g.g22);
}

GMatrix parse_gmatrix(std::string_view text) {
  std::vector<std::string_view> rows;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      rows.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (rows.size() != 2)
    throw ParseError("g-matrix needs two ';'-separated rows, got '" + std::string(text) + "'");
  ExactScalar e[4];
  for (int r = 0; r < 2; ++r) {
    const auto comma = rows[r].find(',');
    if (comma == std::string_view::npos || rows[r].find(',', comma + 1) != std::string_view::npos)
      throw ParseError("g-matrix row needs two ','-separated entries, got '" +
                       std::string(rows[r]) + "'");
    e[2 * r] = parse_scalar(rows[r].substr(0, comma));
    e[2 * r + 1] = parse_scalar(rows[r].substr(comma + 1));
  }
  return {e[0], e[1], e[2], e[3]};
}

}  // namespace hermite2d

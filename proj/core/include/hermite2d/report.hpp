#pragma once

#include <nlohmann/json.hpp>

#include <string>

namespace hermite2d {

/// One pass/fail record for one identity instance. Serialized as a
/// single JSON line; field order is fixed for byte-deterministic output.
struct VerificationReport {
  std::string identity;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::string lhs;
  std::string rhs;
  int pi_power = 0;
  bool pass = false;
};

std::string to_json_line(const VerificationReport& r);

}  // namespace hermite2d

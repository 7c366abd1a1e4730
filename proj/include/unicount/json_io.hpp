#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "unicount/polynomial.hpp"

namespace unicount {

// {"var":"q","coeffs":[c0,c1,...]}.  Coefficients that fit in 64 bits are
// JSON numbers; anything larger becomes an exact decimal string, so the
// round trip never loses precision.
nlohmann::json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const nlohmann::json& j);

// One verification comparison: a symbolic value against an independently
// computed one.  Aggregated checks put a case count in `parameters` and
// describe the first failing case on inequality.
struct CheckRecord {
  std::string check;
  nlohmann::json parameters;
  std::string symbolic;
  std::string oracle;
  bool equal = false;
};

nlohmann::json check_record_to_json(const CheckRecord& r);

}  // namespace unicount

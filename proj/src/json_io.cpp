#include "unicount/json_io.hpp"

#include "unicount/errors.hpp"

namespace unicount {

nlohmann::json poly_to_json(const Polynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const Int& c : p.coeffs()) {
    if (c.fits_slong_p())
      coeffs.push_back(static_cast<std::int64_t>(c.get_si()));
    else
      coeffs.push_back(c.get_str());
  }
  return nlohmann::json{{"var", "q"}, {"coeffs", std::move(coeffs)}};
}

Polynomial poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("var") || !j.contains("coeffs"))
    throw InvalidInputError("polynomial json: expected {var, coeffs}");
  if (j.at("var") != "q")
    throw InvalidInputError("polynomial json: variable must be \"q\"");
  const nlohmann::json& coeffs = j.at("coeffs");
  if (!coeffs.is_array())
    throw InvalidInputError("polynomial json: coeffs must be an array");
  std::vector<Int> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    if (c.is_number_integer()) {
      out.emplace_back(static_cast<long>(c.get<std::int64_t>()));
    } else if (c.is_string()) {
      const std::string s = c.get<std::string>();
      Int v;
      if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw InvalidInputError("polynomial json: bad integer string '" + s + "'");
      out.push_back(std::move(v));
    } else {
      throw InvalidInputError("polynomial json: coefficient must be int or string");
    }
  }
  return Polynomial(std::move(out));
}

nlohmann::json check_record_to_json(const CheckRecord& r) {
  return nlohmann::json{{"check", r.check},
                        {"parameters", r.parameters},
                        {"symbolic", r.symbolic},
                        {"oracle", r.oracle},
                        {"equal", r.equal}};
}

}  // namespace unicount

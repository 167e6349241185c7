#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polestrata/datum.hpp"
#include "polestrata/exact.hpp"

namespace polestrata {

using Json = nlohmann::ordered_json;

struct DatumFile {
  Datum datum;
  std::vector<Cx> zeta;
};

namespace detail {

inline Rational json_rational(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw Error(Errc::MalformedDatum, "zeta entries must be integers or \"p/q\" strings");
}

inline Json rational_json(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1 && boost::multiprecision::abs(numerator(q)) < BigInt(1) << 53)
    return numerator(q).convert_to<long long>();
  return to_string(q);
}

inline std::vector<int> int_array(const Json& j, const char* key) {
  if (!j.contains(key)) return {};
  const Json& v = j.at(key);
  if (!v.is_array()) throw Error(Errc::MalformedDatum, std::string(key) + " must be an array");
  std::vector<int> out;
  for (const Json& e : v) {
    if (!e.is_number_integer()) throw Error(Errc::MalformedDatum, std::string(key) + " entries must be integers");
    out.push_back(e.get<int>());
  }
  return out;
}

inline int int_field(const Json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) throw Error(Errc::MalformedDatum, std::string(key) + " must be an integer");
  return j.at(key).get<int>();
}

}  // namespace detail

// Missing zeta falls back to the default generic parameters.
inline DatumFile datum_from_json(const Json& j) {
  if (!j.is_object()) throw Error(Errc::MalformedDatum, "datum must be a JSON object");
  if (!j.contains("n")) throw Error(Errc::MalformedDatum, "missing field n");
  DatumFile f;
  Datum& x = f.datum;
  x.n = detail::int_field(j, "n", 0);
  x.pi_t = detail::int_array(j, "pi_t");
  x.pi_b = detail::int_array(j, "pi_b");
  x.nplus = detail::int_array(j, "nplus");
  x.nminus = detail::int_array(j, "nminus");
  x.d_breaks = j.contains("d_breaks") ? detail::int_array(j, "d_breaks") : std::vector<int>{0};
  x.splus = detail::int_field(j, "splus", 0);
  x.sminus = detail::int_field(j, "sminus", 0);
  if (j.contains("zeta")) {
    const Json& z = j.at("zeta");
    if (!z.is_array()) throw Error(Errc::MalformedDatum, "zeta must be an array");
    for (const Json& e : z) {
      if (!e.is_array() || e.size() != 2) throw Error(Errc::MalformedDatum, "zeta entries must be [re, im]");
      f.zeta.emplace_back(detail::json_rational(e[0]), detail::json_rational(e[1]));
    }
  } else {
    f.zeta = default_zeta(x.n);
  }
  return f;
}

inline DatumFile parse_datum(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::MalformedDatum, e.what());
  }
  try {
    return datum_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::MalformedDatum, e.what());
  }
}

inline DatumFile load_datum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::MalformedDatum, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_datum(ss.str());
}

inline Json datum_to_json(const Datum& x, const std::vector<Cx>& zeta) {
  Json j;
  j["n"] = x.n;
  j["pi_t"] = x.pi_t;
  j["pi_b"] = x.pi_b;
  j["nplus"] = x.nplus;
  j["nminus"] = x.nminus;
  j["d_breaks"] = x.d_breaks;
  j["splus"] = x.splus;
  j["sminus"] = x.sminus;
  Json z = Json::array();
  for (const Cx& c : zeta) z.push_back(Json::array({detail::rational_json(c.re), detail::rational_json(c.im)}));
  j["zeta"] = z;
  return j;
}

}  // namespace polestrata

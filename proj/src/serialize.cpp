#include "qcirc/serialize.hpp"

#include <cmath>
#include <sstream>

#include "qcirc/error.hpp"

namespace qcirc {

namespace {

[[noreturn]] void malformed(const std::string& why) {
  throw Error(ErrorCode::ParseError, "malformed JSON: " + why);
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump(), 10));
  malformed("rational must be a \"p/q\" string");
}

std::size_t index_key(const std::string& key) {
  if (key.empty() || key.size() > 9 ||
      key.find_first_not_of("0123456789") != std::string::npos) {
    malformed("component key '" + key + "' is not an index");
  }
  return std::stoul(key);
}

MultiIndex exponents_key(const std::string& key, std::size_t n) {
  std::vector<Exponent> alpha;
  std::istringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || part.size() > 9 ||
        part.find_first_not_of("0123456789") != std::string::npos) {
      malformed("exponent key '" + key + "'");
    }
    alpha.push_back(static_cast<Exponent>(std::stoul(part)));
  }
  if (alpha.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "exponent key '" + key + "' has wrong length");
  }
  return MultiIndex(std::move(alpha));
}

std::string exponents_key(const MultiIndex& alpha) {
  std::string key;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (j) key += ',';
    key += std::to_string(alpha[j]);
  }
  return key;
}

}  // namespace

Json to_json(const MultiIndex& alpha) {
  Json arr = Json::array();
  for (Exponent a : alpha) arr.push_back(a);
  return arr;
}

Json to_json(const WeightVector& m) {
  Json arr = Json::array();
  for (const auto& w : m.values()) {
    if (w.fits_slong_p()) {
      arr.push_back(w.get_si());
    } else {
      arr.push_back(w.get_str());
    }
  }
  return arr;
}

Json to_json(const LinearMap& l) {
  Json arr = Json::array();
  for (const auto& v : l.entries()) arr.push_back(to_string(v));
  return arr;
}

Json to_json(const TriangularResonantMap& s) {
  Json g = Json::object();
  for (std::size_t k = 0; k < s.dimension(); ++k) {
    const Polynomial& part = s.nonlinear_part(k);
    if (part.is_zero()) continue;
    Json terms = Json::object();
    for (const auto& [alpha, c] : part.terms()) terms[exponents_key(alpha)] = to_string(c);
    g[std::to_string(k + 1)] = std::move(terms);
  }
  Json out = Json::object();
  out["weights"] = to_json(s.weights());
  out["g"] = std::move(g);
  return out;
}

WeightVector weights_from_json(const Json& j) {
  if (!j.is_array()) malformed("weights must be an array");
  std::vector<Integer> raw;
  for (const auto& v : j) {
    if (v.is_number_integer()) {
      raw.emplace_back(v.dump(), 10);
    } else if (v.is_string()) {
      try {
        raw.emplace_back(v.get<std::string>(), 10);
      } catch (const std::invalid_argument&) {
        malformed("weight '" + v.get<std::string>() + "' is not an integer");
      }
    } else {
      malformed("weights must be integers");
    }
  }
  return WeightVector::create(std::move(raw));
}

LinearMap linear_map_from_json(const Json& j) {
  if (!j.is_array()) malformed("linear map must be an array");
  if (!j.empty() && j.front().is_array()) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : j) {
      if (!row.is_array()) malformed("mixed rows in linear map");
      auto& out = rows.emplace_back();
      for (const auto& v : row) out.push_back(rational_from_json(v));
    }
    return LinearMap::from_rows(rows);
  }
  std::vector<Rational> flat;
  for (const auto& v : j) flat.push_back(rational_from_json(v));
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(flat.size()))));
  if (n * n != flat.size()) {
    throw Error(ErrorCode::DimensionMismatch, "linear map entry count is not a square");
  }
  return LinearMap(n, std::move(flat));
}

TriangularResonantMap sigma_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("weights")) malformed("sigma needs \"weights\"");
  const WeightVector m = weights_from_json(j.at("weights"));
  TriangularResonantMap::Coefficients coeffs;
  if (j.contains("g")) {
    const Json& g = j.at("g");
    if (!g.is_object()) malformed("\"g\" must be an object");
    for (const auto& [key, terms] : g.items()) {
      const std::size_t i = index_key(key);
      if (!terms.is_object()) malformed("component " + key + " must be an object");
      for (const auto& [akey, c] : terms.items()) {
        auto [it, inserted] =
            coeffs.try_emplace({i, exponents_key(akey, m.size())}, rational_from_json(c));
        if (!inserted) malformed("duplicate term " + akey);
      }
    }
  }
  return make_sigma(m, coeffs);
}

}  // namespace qcirc

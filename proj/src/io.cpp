#include "monores/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace monores {

MonomialIdeal parse_ideal_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw InputError("ideal file must be a JSON object");
  if (!doc.contains("gens") || !doc["gens"].is_array())
    throw InputError("ideal file needs a \"gens\" array");
  std::vector<std::string> names;
  if (doc.contains("vars")) {
    if (!doc["vars"].is_array())
      throw InputError("\"vars\" must be an array of strings");
    for (const auto& v : doc["vars"]) {
      if (!v.is_string() || v.get<std::string>().empty())
        throw InputError("\"vars\" must be an array of non-empty strings");
      names.push_back(v.get<std::string>());
    }
  }
  std::vector<Multidegree> gens;
  for (const auto& g : doc["gens"]) {
    if (!g.is_array())
      throw InputError("each generator must be an array of exponents");
    std::vector<Exponent> exps;
    for (const auto& e : g) {
      if (!e.is_number_integer() || e.get<long long>() < 0 ||
          e.get<long long>() > std::numeric_limits<Exponent>::max())
        throw InputError("exponents must be non-negative integers");
      exps.push_back(static_cast<Exponent>(e.get<long long>()));
    }
    gens.emplace_back(std::move(exps));
  }
  std::size_t n = names.size();
  if (names.empty()) {
    if (gens.empty())
      throw InputError("an ideal without generators needs a \"vars\" list");
    n = gens.front().size();
  }
  if (n == 0)
    throw InputError("the ring needs at least one variable");
  if (n > 64)
    throw InputError("at most 64 variables are supported");
  for (const auto& g : gens)
    if (g.is_zero())
      throw InputError("the unit monomial generates the whole ring");
  return MonomialIdeal::minimalize(std::move(gens), n, std::move(names));
}

MonomialIdeal load_ideal(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_ideal_json(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json ideal_to_json(const MonomialIdeal& ideal) {
  Json j;
  j["vars"] = ideal.var_names();
  Json gens = Json::array();
  for (const auto& g : ideal.generators())
    gens.push_back(g.vec());
  j["gens"] = gens;
  return j;
}

Json integer_to_json(const mpz_class& v) {
  if (v.fits_slong_p())
    return Json(v.get_si());
  return Json(v.get_str());
}

Json series_to_json(const BigradedSeries& s) {
  Json j;
  j["tmax"] = s.tmax();
  j["ybound"] = s.ybound().vec();
  Json terms = Json::array();
  for (const auto& [key, c] : s.terms()) {
    Json t;
    t["t"] = key.t;
    t["y"] = key.y.vec();
    t["c"] = integer_to_json(c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

std::map<std::pair<std::size_t, Multidegree>, std::size_t> generator_table(const FreeComplex& c) {
  std::map<std::pair<std::size_t, Multidegree>, std::size_t> t;
  for (std::size_t i = 0; i < c.num_modules(); ++i)
    for (const auto& g : c.module(i))
      ++t[{i, g}];
  return t;
}

} // namespace monores

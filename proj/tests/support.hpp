#pragma once

#include <fstream>
#include <random>
#include <string>

#include "capelli/knop_sahi.hpp"
#include "json.hpp"

namespace capelli::test {

// Reference values produced by tests/oracle/oracle.py.
inline const nlohmann::json& frozen() {
  static const nlohmann::json doc = [] {
    std::ifstream in(CAPELLI_FROZEN_JSON);
    if (!in) throw std::runtime_error("cannot open " CAPELLI_FROZEN_JSON);
    return nlohmann::json::parse(in);
  }();
  return doc;
}

inline Rat R(const std::string& s) { return parse_rat(s); }

inline Pair2 pair_of(const nlohmann::json& j) { return Pair2::make(j[0].get<int>(), j[1].get<int>()); }

inline UniPoly uni_of(const nlohmann::json& coeffs) {
  std::vector<Rat> c;
  for (const auto& v : coeffs) c.push_back(R(v.get<std::string>()));
  return UniPoly(c);
}

inline RatFunc ratfunc_of(const nlohmann::json& j) { return RatFunc(uni_of(j["num"]), uni_of(j["den"])); }

// [[i, j, "p/q"], ...]
inline QPoly qpoly_of(const nlohmann::json& terms) {
  QPoly f;
  for (const auto& t : terms) f.add_term(t[0].get<int>(), t[1].get<int>(), R(t[2].get<std::string>()));
  return f;
}

// [[i, j, {num, den}], ...]
inline KPoly kpoly_of(const nlohmann::json& terms) {
  KPoly f;
  for (const auto& t : terms) f.add_term(t[0].get<int>(), t[1].get<int>(), ratfunc_of(t[2]));
  return f;
}

inline Rat random_rat(std::mt19937& rng, int range = 9) {
  std::uniform_int_distribution<int> num(-range, range), den(1, range);
  return make_rat(num(rng), den(rng));
}

inline UniPoly random_uni(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<Rat> c(deg(rng) + 1);
  for (auto& v : c) v = random_rat(rng);
  return UniPoly(c);
}

inline QPoly random_qpoly(std::mt19937& rng, int max_deg, int terms) {
  std::uniform_int_distribution<int> e(0, max_deg);
  QPoly f;
  for (int n = 0; n < terms; ++n) {
    int i = e(rng), j = e(rng);
    if (i + j <= max_deg) f.add_term(i, j, random_rat(rng));
  }
  return f;
}

}  // namespace capelli::test

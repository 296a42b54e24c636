#include "arthur/json_io.hpp"

#include <stdexcept>

namespace arthur::json_io {

namespace {

void require_keys(const Json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object() || j.size() != keys.size())
    throw std::invalid_argument(std::string(what) + ": expected an object with " +
                                std::to_string(keys.size()) + " keys");
  for (const char* k : keys)
    if (!j.contains(k)) throw std::invalid_argument(std::string(what) + ": missing key " + k);
}

int positive_int(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1 || j.get<std::int64_t>() > 1'000'000)
    throw std::invalid_argument(std::string(what) + ": expected a positive integer");
  return j.get<int>();
}

std::vector<SpehDatum> terms_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
  std::vector<SpehDatum> out;
  for (const auto& e : j) out.push_back(term_from_json(e));
  return out;
}

MoveFamily family_from_string(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    for (MoveFamily f : kStrongFamilies)
      if (family_name(f) == s) return f;
  }
  throw std::invalid_argument("family: expected one of F1, F2, F3, F4");
}

}  // namespace

Json term_to_json(const SpehDatum& s) {
  Json rho;
  rho["id"] = s.rho.id;
  rho["degree"] = s.rho.degree;
  Json j;
  j["rho"] = std::move(rho);
  j["deligne"] = s.deligne;
  j["arthur"] = s.arthur;
  return j;
}

Json terms_to_json(std::span<const SpehDatum> terms) {
  Json arr = Json::array();
  for (const auto& s : terms) arr.push_back(term_to_json(s));
  return arr;
}

Json matching_to_json(const Matching& m) {
  Json pairs = Json::array();
  for (const auto& p : m.pairs) {
    Json e;
    e["left"] = term_to_json(p.left);
    e["right"] = term_to_json(p.right);
    e["family"] = std::string(family_name(p.family));
    pairs.push_back(std::move(e));
  }
  Json j;
  j["pairs"] = std::move(pairs);
  j["dropped_left"] = terms_to_json(m.dropped_left);
  j["dropped_right"] = terms_to_json(m.dropped_right);
  return j;
}

SpehDatum term_from_json(const Json& j) {
  require_keys(j, {"rho", "deligne", "arthur"}, "term");
  const Json& rho = j.at("rho");
  require_keys(rho, {"id", "degree"}, "rho");
  if (!rho.at("id").is_string() || rho.at("id").get<std::string>().empty())
    throw std::invalid_argument("rho.id: expected a non-empty string");
  CuspidalSymbol sym{rho.at("id").get<std::string>(), positive_int(rho.at("degree"), "rho.degree")};
  return SpehDatum{sym, positive_int(j.at("deligne"), "deligne"),
                   positive_int(j.at("arthur"), "arthur")};
}

Matching matching_from_json(const Json& j) {
  require_keys(j, {"pairs", "dropped_left", "dropped_right"}, "matching");
  Matching m;
  if (!j.at("pairs").is_array()) throw std::invalid_argument("pairs: expected an array");
  for (const auto& e : j.at("pairs")) {
    require_keys(e, {"left", "right", "family"}, "pair");
    m.pairs.push_back({term_from_json(e.at("left")), term_from_json(e.at("right")),
                       family_from_string(e.at("family"))});
  }
  m.dropped_left = terms_from_json(j.at("dropped_left"), "dropped_left");
  m.dropped_right = terms_from_json(j.at("dropped_right"), "dropped_right");
  return m;
}

}  // namespace arthur::json_io

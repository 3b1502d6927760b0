#include "barbell/report.hpp"

#include <sstream>

#include "barbell/errors.hpp"

namespace barbell {

Params& Params::set(const std::string& name, const std::string& value) {
  values_[name] = value;
  return *this;
}

Params& Params::set(const std::string& name, std::int64_t value) { return set(name, std::to_string(value)); }

const std::string& Params::get(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw InvalidArgument("missing parameter '" + name + "'");
  return it->second;
}

std::string Params::get(const std::string& name, const std::string& fallback) const {
  auto it = values_.find(name);
  return it == values_.end() ? fallback : it->second;
}

std::int64_t Params::getInt(const std::string& name) const {
  const std::string& text = get(name);
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    throw InvalidArgument("parameter '" + name + "' must be an integer, got '" + text + "'");
  return v;
}

std::int64_t Params::getInt(const std::string& name, std::int64_t fallback) const {
  return has(name) ? getInt(name) : fallback;
}

std::string Params::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : values_) {
    if (!first) out << ' ';
    first = false;
    out << k << '=' << v;
  }
  return out.str();
}

void Report::check(const std::string& name, const std::string& expected, const std::string& actual) {
  check(name, expected, actual, expected == actual);
}

void Report::check(const std::string& name, const std::string& expected, const std::string& actual, bool pass) {
  checks.push_back({name, expected, actual, pass});
}

bool Report::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::ordered_json reportToJson(const Report& r) {
  nlohmann::ordered_json j;
  j["theorem"] = r.theorem;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params.values()) j["params"][k] = v;
  j["values"] = nlohmann::ordered_json::array();
  for (const auto& [k, v] : r.values) j["values"].push_back({k, v});
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  j["notes"] = r.notes;
  j["passed"] = r.passed();
  j["raw"] = r.raw;
  return j;
}

Report reportFromJson(const nlohmann::ordered_json& j) {
  try {
    Report r;
    r.theorem = j.at("theorem").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) r.params.set(k, v.get<std::string>());
    for (const auto& v : j.at("values")) r.value(v.at(0).get<std::string>(), v.at(1).get<std::string>());
    for (const auto& c : j.at("checks"))
      r.checks.push_back({c.at("name").get<std::string>(), c.at("expected").get<std::string>(),
                          c.at("actual").get<std::string>(), c.at("pass").get<bool>()});
    for (const auto& n : j.at("notes")) r.note(n.get<std::string>());
    if (j.contains("raw")) r.raw = j.at("raw");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed report record: ") + e.what());
  }
}

}  // namespace barbell

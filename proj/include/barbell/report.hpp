#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace barbell {

/// Named run parameters. Values are kept as text so reports round-trip exactly.
class Params {
 public:
  Params() = default;
  Params(std::initializer_list<std::pair<const std::string, std::string>> init) : values_(init) {}

  Params& set(const std::string& name, const std::string& value);
  Params& set(const std::string& name, std::int64_t value);
  bool has(const std::string& name) const { return values_.count(name) > 0; }
  const std::string& get(const std::string& name) const;
  std::string get(const std::string& name, const std::string& fallback) const;
  std::int64_t getInt(const std::string& name) const;
  std::int64_t getInt(const std::string& name, std::int64_t fallback) const;
  const std::map<std::string, std::string>& values() const { return values_; }

  // "k=2 l=3"
  std::string str() const;
  bool operator==(const Params&) const = default;

 private:
  std::map<std::string, std::string> values_;
};

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;

  bool operator==(const Check&) const = default;
};

struct Report {
  std::string theorem;
  Params params;
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  // Machine-only payload: raw matrices, term lists, scenario echo.
  nlohmann::ordered_json raw = nlohmann::ordered_json::object();

  void value(const std::string& name, const std::string& v) { values.emplace_back(name, v); }
  // Passes when expected == actual.
  void check(const std::string& name, const std::string& expected, const std::string& actual);
  void check(const std::string& name, const std::string& expected, const std::string& actual, bool pass);
  void note(const std::string& text) { notes.push_back(text); }
  bool passed() const;

  bool operator==(const Report&) const = default;
};

/// Machine record; reportFromJson(reportToJson(r)) == r.
nlohmann::ordered_json reportToJson(const Report& r);
Report reportFromJson(const nlohmann::ordered_json& j);

}  // namespace barbell

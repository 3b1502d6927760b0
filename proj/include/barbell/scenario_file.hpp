#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "barbell/equivariant.hpp"
#include "barbell/geometries.hpp"
#include "barbell/presentations.hpp"
#include "barbell/report.hpp"

namespace barbell {

/// Barbell entry of a scenario file; the holonomy is resolved against the geometry's group.
struct ScenarioBarbell {
  std::string name;
  std::string cuff1;
  std::string cuff2;
  nlohmann::ordered_json holonomy;
  // Negative counts apply the inverse barbell.
  std::int64_t iterate = 1;
  std::pair<int, int> signs{1, 1};

  bool operator==(const ScenarioBarbell&) const = default;
};

struct Scenario {
  std::string name;
  std::string geometry;
  Params geometryParams;
  std::optional<std::string> field;
  std::vector<ScenarioBarbell> barbells;
  // Empty lists fall back to the geometry's handle data.
  std::vector<std::string> attaching;
  std::vector<std::string> disks;
  // Further labels whose image under the barbells is reported.
  std::vector<std::string> track;
  Params params;
  nlohmann::ordered_json expected;  // null when absent

  bool operator==(const Scenario&) const = default;
};

Scenario parseScenario(const nlohmann::ordered_json& j);
Scenario loadScenario(const std::string& path);
nlohmann::ordered_json scenarioToJson(const Scenario& s);

/// Integers for Z and Z/m, exponent arrays for Z^r, strings ("t^3", "x1 x2^-1") otherwise.
DeckElement deckFromJson(const DeckGroup& group, const nlohmann::ordered_json& j);
nlohmann::ordered_json deckToJson(const DeckElement& g);

nlohmann::ordered_json termsToJson(const RingElement& r);
RingElement termsFromJson(const DeckGroup& group, Coefficients coeffs, const nlohmann::ordered_json& j);
nlohmann::ordered_json matrixToJson(const PresentationMatrix& m);
nlohmann::ordered_json classToJson(const EquivClass& x);

Geometry scenarioGeometry(const Scenario& s);
std::vector<BarbellSpec> scenarioBarbells(const Scenario& s, const Geometry& g);
Report runScenario(const Scenario& s);

}  // namespace barbell

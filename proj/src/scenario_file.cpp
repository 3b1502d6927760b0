#include "barbell/scenario_file.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "barbell/errors.hpp"

namespace barbell {

namespace {

using Json = nlohmann::ordered_json;

std::string text(const Json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  throw InvalidArgument(what + " must be a string or an integer");
}

Params paramsFrom(const Json& j, const std::string& what) {
  Params p;
  if (j.is_null()) return p;
  if (!j.is_object()) throw InvalidArgument(what + " must be an object");
  for (const auto& [k, v] : j.items()) p.set(k, text(v, what + "." + k));
  return p;
}

Json paramsTo(const Params& p) {
  Json j = Json::object();
  for (const auto& [k, v] : p.values()) j[k] = v;
  return j;
}

std::vector<std::string> labels(const Json& j, const std::string& what) {
  std::vector<std::string> out;
  if (j.is_null()) return out;
  if (!j.is_array()) throw InvalidArgument(what + " must be a list of labels");
  for (const auto& v : j) {
    if (!v.is_string()) throw InvalidArgument(what + " must be a list of labels");
    out.push_back(v.get<std::string>());
  }
  return out;
}

Integer integerFrom(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw InvalidArgument("bad coefficient '" + j.get<std::string>() + "'");
    return v;
  }
  throw InvalidArgument("coefficient must be an integer");
}

Json integerTo(const Integer& c) {
  if (c.fits_slong_p()) return c.get_si();
  return c.get_str();
}

std::string joined(const std::vector<std::string>& parts) {
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out + "]";
}

std::vector<std::string> strings(const Json& j, const std::string& what) {
  std::vector<std::string> out;
  if (!j.is_array()) throw InvalidArgument(what + " must be a list of strings");
  for (const auto& v : j) out.push_back(text(v, what));
  return out;
}

}  // namespace

DeckElement deckFromJson(const DeckGroup& group, const Json& j) {
  if (j.is_number_integer()) {
    const std::int64_t e = j.get<std::int64_t>();
    if (group.kind() == DeckGroup::Kind::Cyclic) return DeckElement::fromResidue(group, e);
    if (group.kind() == DeckGroup::Kind::FreeAbelian && group.rank() == 1) return DeckElement::generator(group, 1, e);
    throw InvalidArgument("an integer deck element needs the group Z or Z/m, not " + group.str());
  }
  if (j.is_array()) {
    if (group.kind() != DeckGroup::Kind::FreeAbelian || j.size() != static_cast<std::size_t>(group.rank()))
      throw InvalidArgument("an exponent vector needs the group Z^" + std::to_string(j.size()));
    std::vector<Integer> exps;
    for (const auto& v : j) exps.push_back(integerFrom(v));
    return DeckElement::fromExponents(group, exps);
  }
  if (j.is_string()) return DeckElement::parse(group, j.get<std::string>());
  throw InvalidArgument("deck element must be an integer, a list or a string");
}

Json deckToJson(const DeckElement& g) {
  const DeckGroup& group = g.group();
  switch (group.kind()) {
    case DeckGroup::Kind::Cyclic:
      return g.residue();
    case DeckGroup::Kind::FreeAbelian:
      if (group.rank() == 1) return integerTo(g.exponents()[0]);
      {
        Json out = Json::array();
        for (const auto& e : g.exponents()) out.push_back(integerTo(e));
        return out;
      }
    case DeckGroup::Kind::Free:
      return g.str();
  }
  return g.str();
}

Json termsToJson(const RingElement& r) {
  Json out = Json::array();
  for (const auto& [g, c] : r.terms()) out.push_back({g.str(), integerTo(c)});
  return out;
}

RingElement termsFromJson(const DeckGroup& group, Coefficients coeffs, const Json& j) {
  if (!j.is_array()) throw InvalidArgument("term list must be an array of [element, coefficient]");
  RingElement r(group, coeffs);
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw InvalidArgument("term must be [element, coefficient]");
    r.addTerm(deckFromJson(group, t[0]), integerFrom(t[1]));
  }
  return r;
}

Json matrixToJson(const PresentationMatrix& m) {
  Json j;
  j["group"] = m.group.str();
  j["field"] = toString(m.coeffs);
  j["rows"] = m.rowLabels;
  j["cols"] = m.colLabels;
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(termsToJson(m.at(r, c)));
    entries.push_back(row);
  }
  j["entries"] = entries;
  return j;
}

Json classToJson(const EquivClass& x) {
  Json out = Json::array();
  for (const auto& t : x.sortedTerms()) out.push_back({t.label, t.element.str(), integerTo(t.coefficient)});
  return out;
}

Scenario parseScenario(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("scenario must be a JSON object");
  static const std::set<std::string> known = {"name",  "geometry", "field",  "barbells",
                                              "attaching", "disks", "track", "params", "expected"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) throw InvalidArgument("unknown scenario field '" + k + "'");
  Scenario s;
  try {
    s.name = j.value("name", std::string());
    if (!j.contains("geometry")) throw InvalidArgument("scenario needs a geometry");
    const Json& g = j.at("geometry");
    if (g.is_string()) {
      s.geometry = g.get<std::string>();
    } else if (g.is_object()) {
      s.geometry = g.at("name").get<std::string>();
      if (g.contains("params")) s.geometryParams = paramsFrom(g.at("params"), "geometry.params");
    } else {
      throw InvalidArgument("geometry must be a name or {name, params}");
    }
    if (j.contains("field")) s.field = toString(parseCoefficients(j.at("field").get<std::string>()));
    if (j.contains("barbells")) {
      if (!j.at("barbells").is_array()) throw InvalidArgument("barbells must be a list");
      std::size_t i = 0;
      for (const auto& b : j.at("barbells")) {
        ++i;
        ScenarioBarbell sb;
        sb.name = b.value("name", "beta_" + std::to_string(i));
        sb.cuff1 = b.at("cuff1").get<std::string>();
        sb.cuff2 = b.at("cuff2").get<std::string>();
        sb.holonomy = b.at("holonomy");
        sb.iterate = b.value("iterate", std::int64_t{1});
        if (sb.iterate == 0 || sb.iterate > 1000000 || sb.iterate < -1000000)
          throw InvalidArgument("barbell iterate must be a nonzero integer of moderate size");
        if (b.contains("signs")) {
          const Json& sg = b.at("signs");
          if (!sg.is_array() || sg.size() != 2) throw InvalidArgument("signs must be [s1, s2]");
          sb.signs = {sg[0].get<int>(), sg[1].get<int>()};
          for (int v : {sb.signs.first, sb.signs.second})
            if (v != 1 && v != -1) throw InvalidArgument("signs must be +1 or -1");
        }
        s.barbells.push_back(sb);
      }
    }
    s.attaching = labels(j.value("attaching", Json()), "attaching");
    s.disks = labels(j.value("disks", Json()), "disks");
    s.track = labels(j.value("track", Json()), "track");
    s.params = paramsFrom(j.value("params", Json()), "params");
    if (j.contains("expected")) s.expected = j.at("expected");
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed scenario: ") + e.what());
  }
  return s;
}

Scenario loadScenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open scenario file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("scenario file '" + path + "' is not valid JSON: " + e.what());
  }
  return parseScenario(j);
}

Json scenarioToJson(const Scenario& s) {
  Json j;
  j["name"] = s.name;
  j["geometry"] = {{"name", s.geometry}, {"params", paramsTo(s.geometryParams)}};
  if (s.field) j["field"] = *s.field;
  Json bs = Json::array();
  for (const auto& b : s.barbells)
    bs.push_back({{"name", b.name},
                  {"cuff1", b.cuff1},
                  {"cuff2", b.cuff2},
                  {"holonomy", b.holonomy},
                  {"iterate", b.iterate},
                  {"signs", {b.signs.first, b.signs.second}}});
  j["barbells"] = bs;
  j["attaching"] = s.attaching;
  j["disks"] = s.disks;
  j["track"] = s.track;
  j["params"] = paramsTo(s.params);
  if (!s.expected.is_null()) j["expected"] = s.expected;
  return j;
}

Geometry scenarioGeometry(const Scenario& s) {
  Params gp = s.geometryParams;
  if (s.field) gp.set("field", *s.field);
  Geometry g = builtinGeometry(s.geometry, gp);
  if (s.field) {
    const Coefficients c = parseCoefficients(*s.field);
    if (c != g.coeffs()) g.table = std::make_shared<PairingTable>(g.table->withCoefficients(c));
  }
  if (!s.attaching.empty()) g.attaching = s.attaching;
  if (!s.disks.empty()) g.disks = s.disks;
  for (const auto& lab : g.attaching) g.table->indexOf(lab);
  for (const auto& lab : g.disks) g.table->indexOf(lab);
  return g;
}

std::vector<BarbellSpec> scenarioBarbells(const Scenario& s, const Geometry& g) {
  std::vector<BarbellSpec> out;
  for (const auto& b : s.barbells) {
    BarbellSpec spec{b.name, b.cuff1, b.cuff2, deckFromJson(g.group(), b.holonomy), b.signs.first, b.signs.second,
                     1, {}};
    validateBarbell(*g.table, spec);
    if (b.iterate < 0) spec = spec.inverse();
    spec.iterate = static_cast<int>(b.iterate < 0 ? -b.iterate : b.iterate);
    out.push_back(spec);
  }
  return out;
}

Report runScenario(const Scenario& s) {
  const Geometry g = scenarioGeometry(s);
  const auto specs = scenarioBarbells(s, g);
  Report r{s.name.empty() ? "scenario" : "scenario:" + s.name, s.params, {}, {}, {}, {}};
  r.value("geometry", g.name);
  r.value("group", g.group().str());
  r.value("field", toString(g.coeffs()));
  std::map<std::string, std::string> classes;
  std::vector<std::string> reported = g.attaching;
  for (const auto& t : s.track)
    if (std::find(reported.begin(), reported.end(), t) == reported.end()) reported.push_back(t);
  for (const auto& a : reported) {
    const EquivClass x = actionSequence(g.gen(a), specs);
    classes[a] = x.str();
    r.value("class " + a, x.str());
  }
  std::optional<PresentationMatrix> pm;
  if (!g.attaching.empty() && !g.disks.empty()) pm = presentFromScenario(g.table, specs, g.attaching, g.disks);
  const PresentationMatrix m = pm ? *pm : PresentationMatrix{g.group(), g.coeffs(), {}, {}, {}};
  if (pm) r.value("matrix", m.str());

  std::optional<std::string> f, dim, cokernel, fitting;
  const bool laurent = g.group().kind() == DeckGroup::Kind::FreeAbelian && g.group().rank() == 1;
  if (m.rows() == 1 && m.cols() == 1) {
    f = m.at(0, 0).str();
    r.value("f", *f);
    if (laurent && g.coeffs() == Coefficients::F2) {
      const auto d = f2QuotientDim(m);
      dim = d ? d->get_str() : "infinite";
      r.value("dim", *dim);
    }
  }
  if (laurent && g.coeffs() == Coefficients::Integers && m.rows() == 2 && m.cols() == 2 &&
      m.at(0, 0).isZero() && m.at(1, 1).isZero()) {
    std::vector<std::string> parts;
    for (const auto& c : antidiagonalCokernel(m)) parts.push_back(factorString(c));
    cokernel = joined(parts);
    r.value("cokernel", *cokernel);
  }
  if (g.group().isCommutative() && m.rows() > 0 && m.cols() > 0 && m.rows() <= 6 && m.cols() <= 6) {
    std::vector<std::string> parts;
    for (const auto& c : fittingGenerators(m, 0)) parts.push_back(factorString(c));
    fitting = joined(parts);
    r.value("Fitt_0", *fitting);
  }

  if (s.expected.is_object()) {
    for (const auto& [key, want] : s.expected.items()) {
      if (key == "matrix") {
        if (want.is_string()) {
          r.check("matrix", want.get<std::string>(), m.str());
        } else {
          PresentationMatrix e{g.group(), g.coeffs(), m.rowLabels, m.colLabels, {}};
          if (!want.is_array()) throw InvalidArgument("expected.matrix must be a string or nested term lists");
          for (const auto& row : want) {
            std::vector<RingElement> entries;
            if (!row.is_array()) throw InvalidArgument("expected.matrix rows must be arrays");
            for (const auto& cell : row) entries.push_back(termsFromJson(g.group(), g.coeffs(), cell));
            e.entries.push_back(entries);
          }
          r.check("matrix", e.str(), m.str());
        }
      } else if (key == "f") {
        r.check("f", text(want, "expected.f"), f.value_or("(not 1x1)"));
      } else if (key == "dim") {
        r.check("dim", text(want, "expected.dim"), dim.value_or("(unavailable)"));
      } else if (key == "cokernel") {
        r.check("cokernel", joined(strings(want, "expected.cokernel")), cokernel.value_or("(unavailable)"));
      } else if (key == "fitting0") {
        r.check("Fitt_0", joined(strings(want, "expected.fitting0")), fitting.value_or("(unavailable)"));
      } else if (key == "classes") {
        if (!want.is_object()) throw InvalidArgument("expected.classes must map labels to classes");
        for (const auto& [label, cls] : want.items()) {
          auto it = classes.find(label);
          r.check("class " + label, text(cls, "expected.classes"), it == classes.end() ? "(not tracked)" : it->second);
        }
      } else {
        throw InvalidArgument("unknown expectation '" + key + "'");
      }
    }
  } else if (!s.expected.is_null()) {
    throw InvalidArgument("expected must be an object");
  }
  r.raw["scenario"] = scenarioToJson(s);
  if (pm) r.raw["matrix"] = matrixToJson(m);
  return r;
}

}  // namespace barbell

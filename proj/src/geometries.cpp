#include "barbell/geometries.hpp"

#include "barbell/errors.hpp"

namespace barbell {

namespace {

GeneratorLabel sphere(const std::string& name) { return {name, LabelKind::Sphere}; }
GeneratorLabel disk(const std::string& name) { return {name, LabelKind::Disk}; }

// sum of c * t^e in a one-generator group
RingElement poly(const DeckGroup& g, Coefficients coeffs, const std::vector<std::pair<std::int64_t, long>>& terms) {
  RingElement r(g, coeffs);
  for (const auto& [e, c] : terms) r.addTerm(DeckElement::generator(g, 1, e), c);
  return r;
}

RingElement one(const DeckGroup& g, Coefficients coeffs) { return RingElement::one(g, coeffs); }

std::string idx(const std::string& base, int i) { return base + "_" + std::to_string(i); }

}  // namespace

Geometry torusComplement(Coefficients coeffs) {
  const DeckGroup z = DeckGroup::freeAbelian(1);
  auto t = std::make_shared<PairingTable>(
      z, coeffs, std::vector<GeneratorLabel>{sphere("S_h"), sphere("S_v"), disk("D_h"), disk("D_v")});
  // <S_h~, t^i S_v~> is nonzero for i = 0, 1; the two points have opposite signs over Z.
  const long second = coeffs == Coefficients::F2 ? 1 : -1;
  t->set("S_h", "S_v", poly(z, coeffs, {{0, 1}, {1, second}}));
  t->set("D_v", "S_v", one(z, coeffs));
  t->set("D_h", "S_h", one(z, coeffs));
  Geometry g{"torus", Params{}.set("field", toString(coeffs)), t, {"S_v"}, {"D_v"}, {}};
  return g;
}

Geometry genusComplement(int genus, Coefficients coeffs) {
  if (genus < 1) throw InvalidArgument("genus must be >= 1");
  const DeckGroup z = DeckGroup::freeAbelian(1);
  std::vector<GeneratorLabel> labels;
  for (int s = 1; s <= genus; ++s) labels.push_back(sphere(idx("S_h", s)));
  for (int s = 1; s <= genus; ++s) labels.push_back(sphere(idx("S_v", s)));
  for (int s = 1; s <= genus; ++s) labels.push_back(disk(idx("D_h", s)));
  auto t = std::make_shared<PairingTable>(z, coeffs, labels);
  const long second = coeffs == Coefficients::F2 ? 1 : -1;
  Geometry g{"genus", Params{}.set("g", genus).set("field", toString(coeffs)), t, {}, {}, {}};
  for (int s = 1; s <= genus; ++s) {
    t->set(idx("S_h", s), idx("S_v", s), poly(z, coeffs, {{0, 1}, {1, second}}));
    t->set(idx("D_h", s), idx("S_h", s), one(z, coeffs));
    g.attaching.push_back(idx("S_v", s));
    g.disks.push_back(idx("D_h", s));
  }
  return g;
}

Geometry sphereTorusLink(int n) {
  if (n < 2) throw InvalidArgument("sphere-torus link needs n >= 2");
  const DeckGroup f = DeckGroup::free(n);
  const Coefficients f2 = Coefficients::F2;
  auto t = std::make_shared<PairingTable>(f, f2, std::vector<GeneratorLabel>{sphere("S_h"), sphere("S_v"), disk("D_v")});
  t->set("S_h", "S_v", one(f, f2) + RingElement::monomial(DeckElement::generator(f, n), f2));
  t->set("D_v", "S_v", one(f, f2));
  return {"sphere-torus-link", Params{}.set("n", n), t, {"S_v"}, {"D_v"}, {}};
}

Geometry circlesComplement() {
  const DeckGroup e = DeckGroup::trivial();
  const Coefficients z = Coefficients::Integers;
  auto t = std::make_shared<PairingTable>(
      e, z, std::vector<GeneratorLabel>{sphere("S_L"), sphere("S_R"), disk("D_L"), disk("D_R")});
  t->set("D_L", "S_L", one(e, z));
  t->set("D_R", "S_R", one(e, z));
  return {"circles", Params{}, t, {}, {}, {}};
}

Geometry splitSurfacesComplement(int gl, int gr) {
  if (gl < 1 || gr < 1) throw InvalidArgument("split surfaces need genera >= 1");
  const DeckGroup e = DeckGroup::trivial();
  const Coefficients z = Coefficients::Integers;
  std::vector<GeneratorLabel> labels;
  auto side = [&](const std::string& s, int genus) {
    labels.push_back(sphere("S_" + s));
    for (int i = 2; i <= genus; ++i) labels.push_back(sphere("S_" + s + "_h" + std::to_string(i)));
    for (int i = 1; i <= genus; ++i) labels.push_back(sphere("S_" + s + "_v" + std::to_string(i)));
  };
  side("L", gl);
  side("R", gr);
  labels.push_back(disk("D_R"));
  auto t = std::make_shared<PairingTable>(e, z, labels);
  t->set("D_R", "S_R", one(e, z));
  return {"split-surfaces", Params{}.set("gl", gl).set("gr", gr), t, {}, {}, {}};
}

Geometry handlebodyComplement(int genus) {
  if (genus < 2) throw InvalidArgument("the knotted handlebody construction needs genus >= 2");
  const DeckGroup e = DeckGroup::trivial();
  const Coefficients z = Coefficients::Integers;
  std::vector<GeneratorLabel> labels;
  for (int s = 1; s <= genus; ++s) labels.push_back(sphere(idx("S_h", s)));
  for (int s = 1; s <= genus; ++s) labels.push_back(sphere(idx("S_v", s)));
  labels.push_back(disk("D_h"));
  auto t = std::make_shared<PairingTable>(e, z, labels);
  t->set("D_h", "S_h_1", one(e, z));
  return {"handlebody", Params{}.set("g", genus), t, {}, {}, {}};
}

Geometry knotCircleComplement() {
  const DeckGroup z = DeckGroup::freeAbelian(1);
  const Coefficients c = Coefficients::Integers;
  auto t = std::make_shared<PairingTable>(z, c, std::vector<GeneratorLabel>{sphere("S"), sphere("S'"), disk("D")});
  t->set("D", "S", one(z, c));
  t->set("D", "S'", one(z, c));
  return {"knot-circle", Params{}, t, {}, {}, {}};
}

Geometry splitKnotComplement() {
  const DeckGroup z2 = DeckGroup::freeAbelian(2);
  const Coefficients c = Coefficients::Integers;
  auto t = std::make_shared<PairingTable>(z2, c, std::vector<GeneratorLabel>{sphere("S"), sphere("S'"), disk("D")});
  t->set("D", "S", one(z2, c));
  t->set("D", "S'", one(z2, c));
  return {"split-knot", Params{}, t, {}, {}, {}};
}

Geometry cyclicCover(const Geometry& base, std::int64_t m, const std::vector<std::int64_t>& weights) {
  if (m < 1) throw InvalidArgument("cover degree must be >= 1");
  const GroupHom hom = GroupHom::cyclic(base.group(), weights, m);
  auto t = std::make_shared<PairingTable>(base.table->pushforward(hom));
  Geometry g{"cyclic-cover", base.params, t, base.attaching, base.disks, {}};
  g.params.set("m", m).set("base", base.name);
  return g;
}

Geometry branchedCover(std::int64_t m) {
  if (m < 1) throw InvalidArgument("cover degree must be >= 1");
  const DeckGroup cm = DeckGroup::cyclic(m);
  const Coefficients f2 = Coefficients::F2;
  auto t = std::make_shared<PairingTable>(
      cm, f2,
      std::vector<GeneratorLabel>{sphere("S"), sphere("S'"), disk("D"), {"mu", LabelKind::Meridian}});
  // |D~ cap rho^i S~| = |D~ cap rho^i S'~| = 1 iff i = 0 mod m.
  t->set("D", "S", one(cm, f2));
  t->set("D", "S'", one(cm, f2));
  // mu is the meridian of the boundary of D~.
  t->set("mu", "D", one(cm, f2));
  Geometry g{"branched", Params{}.set("m", m), t, {}, {}, {}};
  g.kernel.push_back(g.gen("mu"));
  return g;
}

Geometry higherDimTorus(int n) {
  if (n < 2) throw InvalidArgument("higher-dimensional torus needs n >= 2");
  const DeckGroup z = DeckGroup::freeAbelian(1);
  const Coefficients f2 = Coefficients::F2;
  // The middle-dimensional form is (-1)^n symmetric; over F2 the sign is invisible.
  auto t = std::make_shared<PairingTable>(z, f2, std::vector<GeneratorLabel>{sphere("S_h"), sphere("S_v"), disk("D_v")},
                                          n % 2 == 0 ? 1 : -1);
  t->set("S_h", "S_v", poly(z, f2, {{0, 1}, {1, 1}}));
  t->set("D_v", "S_v", one(z, f2));
  return {"higher-dim-torus", Params{}.set("n", n), t, {"S_v"}, {"D_v"}, {}};
}

std::vector<std::string> builtinGeometryNames() {
  return {"branched",         "circles",    "cyclic-cover", "genus",          "handlebody", "higher-dim-torus",
          "knot-circle",      "split-knot", "split-surfaces", "sphere-torus-link", "torus"};
}

Geometry builtinGeometry(const std::string& name, const Params& p) {
  auto field = [&](Coefficients fallback) {
    return p.has("field") ? parseCoefficients(p.get("field")) : fallback;
  };
  auto narrow = [&](const std::string& key, std::int64_t fallback) {
    const std::int64_t v = p.getInt(key, fallback);
    if (v < -1000000 || v > 1000000) throw InvalidArgument("parameter '" + key + "' out of range");
    return static_cast<int>(v);
  };
  if (name == "torus") return torusComplement(field(Coefficients::F2));
  if (name == "genus") return genusComplement(narrow("g", 2), field(Coefficients::Integers));
  if (name == "sphere-torus-link") return sphereTorusLink(narrow("n", 2));
  if (name == "circles") return circlesComplement();
  if (name == "split-surfaces") return splitSurfacesComplement(narrow("gl", 1), narrow("gr", 1));
  if (name == "handlebody") return handlebodyComplement(narrow("g", 2));
  if (name == "knot-circle") return knotCircleComplement();
  if (name == "split-knot") return splitKnotComplement();
  if (name == "branched") return branchedCover(p.getInt("m"));
  if (name == "higher-dim-torus") return higherDimTorus(narrow("n", 3));
  if (name == "cyclic-cover") {
    const std::string base = p.get("base", "knot-circle");
    if (base == "knot-circle") return cyclicCover(knotCircleComplement(), p.getInt("m"), {1});
    if (base == "split-knot") return cyclicCover(splitKnotComplement(), p.getInt("m"), {1, 0});
    throw InvalidArgument("cyclic-cover base must be knot-circle or split-knot");
  }
  throw InvalidArgument("unknown geometry '" + name + "'");
}

}  // namespace barbell

#include "barbell/equivariant.hpp"

#include <sstream>

#include "barbell/errors.hpp"
#include "barbell/linalg.hpp"

namespace barbell {

std::string toString(LabelKind kind) {
  switch (kind) {
    case LabelKind::Sphere:
      return "sphere";
    case LabelKind::Disk:
      return "disk";
    case LabelKind::Meridian:
      return "meridian";
  }
  return "?";
}

LabelKind parseLabelKind(const std::string& text) {
  if (text == "sphere") return LabelKind::Sphere;
  if (text == "disk") return LabelKind::Disk;
  if (text == "meridian") return LabelKind::Meridian;
  throw InvalidArgument("unknown label kind '" + text + "'");
}

// -------------------------------------------------------- PairingTable

PairingTable::PairingTable(DeckGroup group, Coefficients coeffs, std::vector<GeneratorLabel> labels, int symmetrySign)
    : group_(group), coeffs_(coeffs), symmetrySign_(symmetrySign) {
  if (symmetrySign != 1 && symmetrySign != -1) throw InvalidArgument("symmetry sign must be +1 or -1");
  for (const auto& l : labels) addLabel(l);
}

void PairingTable::addLabel(const GeneratorLabel& label) {
  if (label.name.empty()) throw InvalidArgument("empty label name");
  if (index_.count(label.name)) throw InvalidArgument("duplicate label '" + label.name + "'");
  index_[label.name] = labels_.size();
  labels_.push_back(label);
}

bool PairingTable::hasLabel(const std::string& name) const { return index_.count(name) > 0; }

std::size_t PairingTable::indexOf(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw InvalidArgument("unknown label '" + name + "'");
  return it->second;
}

void PairingTable::set(const std::string& a, const std::string& b, const RingElement& p) {
  const std::size_t ia = indexOf(a);
  const std::size_t ib = indexOf(b);
  if (labels_[ia].kind == LabelKind::Disk && labels_[ib].kind == LabelKind::Disk)
    throw InvalidArgument("disk-disk pairings are not part of the model");
  if (!(p.group() == group_) || p.coeffs() != coeffs_)
    throw InvalidArgument("pairing " + a + "," + b + " lives in the wrong ring");
  RingElement reverse = p.conjugate().scaled(symmetrySign_);
  if (ia == ib && !(reverse == p))
    throw InvalidArgument("self pairing of " + a + " violates the symmetry of the form");
  entries_.insert_or_assign({ia, ib}, p);
  entries_.insert_or_assign({ib, ia}, reverse);
  for (auto it = declared_.begin(); it != declared_.end();) {
    const auto& [x, y, q] = *it;
    if ((x == a && y == b) || (x == b && y == a))
      it = declared_.erase(it);
    else
      ++it;
  }
  declared_.emplace_back(a, b, p);
}

RingElement PairingTable::pairing(std::size_t a, std::size_t b) const {
  if (labels_.at(a).kind == LabelKind::Disk && labels_.at(b).kind == LabelKind::Disk)
    throw InvalidArgument("pairing of disks " + labels_[a].name + " and " + labels_[b].name + " is undefined");
  auto it = entries_.find({a, b});
  if (it == entries_.end()) return RingElement::zero(group_, coeffs_);
  return it->second;
}

RingElement PairingTable::pairing(const std::string& a, const std::string& b) const {
  return pairing(indexOf(a), indexOf(b));
}

PairingTable PairingTable::pushforward(const GroupHom& hom) const {
  if (!(hom.source() == group_)) throw InvalidArgument("homomorphism source does not match the deck group");
  PairingTable t(hom.target(), coeffs_, labels_, symmetrySign_);
  for (const auto& [a, b, p] : declared_) t.set(a, b, applyHom(p, hom));
  return t;
}

PairingTable PairingTable::withCoefficients(Coefficients coeffs) const {
  PairingTable t(group_, coeffs, labels_, symmetrySign_);
  for (const auto& [a, b, p] : declared_) {
    RingElement q(group_, coeffs);
    for (const auto& [g, c] : p.terms()) q.addTerm(g, c);
    t.set(a, b, q);
  }
  return t;
}

// ---------------------------------------------------------- EquivClass

EquivClass::EquivClass(TablePtr table) : table_(std::move(table)) {
  if (!table_) throw InvalidArgument("class needs a pairing table");
}

EquivClass EquivClass::generator(TablePtr table, const std::string& label) {
  const DeckElement e = DeckElement::identity(table->group());
  return lift(std::move(table), label, e);
}

EquivClass EquivClass::lift(TablePtr table, const std::string& label, const DeckElement& g, const Integer& c) {
  EquivClass x(std::move(table));
  x.addTerm(label, g, c);
  return x;
}

Integer EquivClass::coefficient(const std::string& label, const DeckElement& g) const {
  auto it = terms_.find({table_->indexOf(label), g});
  return it == terms_.end() ? Integer(0) : it->second;
}

void EquivClass::addTerm(std::size_t label, const DeckElement& g, const Integer& c) {
  if (label >= table_->labels().size()) throw InvalidArgument("label index out of range");
  if (!(g.group() == table_->group()))
    throw InvalidArgument("deck element from " + g.group().str() + " in a " + table_->group().str() + " cover");
  Integer v = c;
  if (table_->coeffs() == Coefficients::F2) {
    v %= 2;
    if (v < 0) v += 2;
  }
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace({label, g}, v);
  if (inserted) return;
  it->second += v;
  if (table_->coeffs() == Coefficients::F2) it->second %= 2;
  if (it->second == 0) terms_.erase(it);
}

void EquivClass::addTerm(const std::string& label, const DeckElement& g, const Integer& c) {
  addTerm(table_->indexOf(label), g, c);
}

void EquivClass::requireSameTable(const EquivClass& other) const {
  if (table_ != other.table_) throw InvalidArgument("classes live in different geometries");
}

EquivClass EquivClass::operator+(const EquivClass& other) const {
  requireSameTable(other);
  EquivClass r = *this;
  for (const auto& [k, c] : other.terms_) r.addTerm(k.first, k.second, c);
  return r;
}

EquivClass EquivClass::operator-(const EquivClass& other) const { return *this + other.scaled(-1); }

EquivClass EquivClass::scaled(const Integer& c) const {
  EquivClass r(table_);
  for (const auto& [k, a] : terms_) r.addTerm(k.first, k.second, a * c);
  return r;
}

EquivClass EquivClass::translated(const DeckElement& g) const {
  EquivClass r(table_);
  for (const auto& [k, a] : terms_) r.addTerm(k.first, multiply(g, k.second), a);
  return r;
}

std::vector<EquivClass::Term> EquivClass::sortedTerms() const {
  std::vector<Term> out;
  for (const auto& [k, c] : terms_) out.push_back({table_->label(k.first).name, k.second, c});
  return out;
}

std::string EquivClass::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (mag != 1) out << mag.get_str() << '*';
    if (!k.second.isIdentity()) {
      const std::string g = k.second.str();
      out << (g.find(' ') == std::string::npos ? g : "(" + g + ")") << ' ';
    }
    out << table_->label(k.first).name;
  }
  return out.str();
}

bool EquivClass::operator==(const EquivClass& other) const {
  return table_ == other.table_ && terms_ == other.terms_;
}

// ------------------------------------------------------------- barbells

BarbellSpec BarbellSpec::inverse() const {
  BarbellSpec b = *this;
  b.sign1 = -sign1;
  b.sign2 = -sign2;
  if (offset) b.offset = invert(*offset);
  if (!name.empty()) b.name = name + "^-1";
  return b;
}

void validateBarbell(const PairingTable& table, const BarbellSpec& spec) {
  const std::size_t c1 = table.indexOf(spec.cuff1);
  const std::size_t c2 = table.indexOf(spec.cuff2);
  if (table.label(c1).kind != LabelKind::Sphere || table.label(c2).kind != LabelKind::Sphere)
    throw InvalidArgument("barbell cuffs must be sphere labels");
  if (!(spec.holonomy.group() == table.group()))
    throw InvalidArgument("holonomy lies in " + spec.holonomy.group().str() + ", cover has deck group " +
                          table.group().str());
  if (spec.offset && !(spec.offset->group() == table.group()))
    throw InvalidArgument("offset lies in the wrong deck group");
  if ((spec.sign1 != 1 && spec.sign1 != -1) || (spec.sign2 != 1 && spec.sign2 != -1))
    throw InvalidArgument("cuff signs must be +1 or -1");
  if (spec.iterate < 1) throw InvalidArgument("iterate must be a positive integer");
  if (!table.pairing(c1, c1).isZero() || !table.pairing(c2, c2).isZero() || !table.pairing(c1, c2).isZero())
    throw InvalidArgument("lifted cuffs of " + spec.cuff1 + "/" + spec.cuff2 + " intersect each other");
}

namespace {

// One application without validation or offset.
void collect(const EquivClass& x, const BarbellSpec& spec, std::vector<Contribution>& out) {
  const PairingTable& t = *x.table();
  const std::size_t c1 = t.indexOf(spec.cuff1);
  const std::size_t c2 = t.indexOf(spec.cuff2);
  const DeckElement& c = spec.holonomy;
  const DeckElement cinv = invert(c);
  for (const auto& [key, alpha] : x.terms()) {
    const auto& [a, v] = key;
    // <v a~, u cuff1~> = alpha P_{a,cuff1}(v^-1 u): u = v g, adds (u c) cuff2~.
    const RingElement p1 = t.pairing(a, c1);
    const RingElement p2 = t.pairing(a, c2);
    for (const auto& [g, p] : p1.terms())
      out.push_back({spec.cuff2, multiply(multiply(v, g), c), alpha * p * spec.sign1});
    // <v a~, u c cuff2~> = alpha P_{a,cuff2}(v^-1 u c): u = v g c^-1, subtracts u cuff1~.
    for (const auto& [g, p] : p2.terms())
      out.push_back({spec.cuff1, multiply(multiply(v, g), cinv), -(alpha * p * spec.sign2)});
  }
}

EquivClass applyOnce(const EquivClass& x, const BarbellSpec& spec) {
  std::vector<Contribution> raw;
  collect(x, spec, raw);
  EquivClass y = x;
  for (const auto& r : raw) y.addTerm(r.label, r.element, r.coefficient);
  if (spec.offset) y = y.translated(*spec.offset);
  return y;
}

}  // namespace

std::vector<Contribution> barbellContributions(const EquivClass& x, const BarbellSpec& spec) {
  validateBarbell(*x.table(), spec);
  std::vector<Contribution> raw;
  collect(x, spec, raw);
  return raw;
}

EquivClass barbellAction(const EquivClass& x, const BarbellSpec& spec) {
  validateBarbell(*x.table(), spec);
  EquivClass y = x;
  for (int i = 0; i < spec.iterate; ++i) y = applyOnce(y, spec);
  return y;
}

EquivClass actionSequence(const EquivClass& x, const std::vector<BarbellSpec>& specs) {
  EquivClass y = x;
  for (const auto& s : specs) y = barbellAction(y, s);
  return y;
}

// ------------------------------------------------------------- pairings

RingElement equivariantPairing(const EquivClass& x, const std::string& label) {
  const PairingTable& t = *x.table();
  const std::size_t b = t.indexOf(label);
  RingElement r = RingElement::zero(t.group(), t.coeffs());
  for (const auto& [key, alpha] : x.terms()) {
    const auto& [a, v] = key;
    const RingElement pab = t.pairing(a, b);
    for (const auto& [g, p] : pab.terms()) r.addTerm(multiply(v, g), alpha * p);
  }
  return r;
}

std::vector<RingElement> intersectionPolynomial(const EquivClass& x, const std::vector<std::string>& disks) {
  std::vector<RingElement> row;
  row.reserve(disks.size());
  for (const auto& d : disks) row.push_back(equivariantPairing(x, d));
  return row;
}

Integer pairClasses(const EquivClass& x, const EquivClass& y) {
  if (x.table() != y.table()) throw InvalidArgument("classes live in different geometries");
  const PairingTable& t = *x.table();
  Integer s = 0;
  for (const auto& [kx, alpha] : x.terms()) {
    for (const auto& [ky, beta] : y.terms()) {
      const RingElement p = t.pairing(kx.first, ky.first);
      if (p.isZero()) continue;
      s += alpha * beta * p.coefficient(multiply(invert(kx.second), ky.second));
    }
  }
  if (t.coeffs() == Coefficients::F2) {
    s %= 2;
    if (s < 0) s += 2;
  }
  return s;
}

// ----------------------------------------------------------- membership

bool AllowedSet::contains(const std::string& label, const DeckElement& g) const {
  return labels.count(label) > 0 || lifts.count({label, g}) > 0;
}

bool summandMembership(const EquivClass& x, const AllowedSet& allowed, const std::vector<EquivClass>& kernelGens) {
  const PairingTable& t = *x.table();
  std::map<EquivClass::Key, std::size_t> rows;
  auto note = [&](const EquivClass& c) {
    if (c.table() != x.table()) throw InvalidArgument("kernel generator from a different geometry");
    for (const auto& [k, v] : c.terms())
      if (!allowed.contains(t.label(k.first).name, k.second)) rows.try_emplace(k, rows.size());
  };
  note(x);
  for (const auto& k : kernelGens) note(k);
  if (rows.empty()) return true;

  linalg::Matrix a(rows.size(), linalg::Vector(kernelGens.size()));
  linalg::Vector b(rows.size());
  for (const auto& [k, v] : x.terms()) {
    auto it = rows.find(k);
    if (it != rows.end()) b[it->second] = v;
  }
  for (std::size_t j = 0; j < kernelGens.size(); ++j) {
    for (const auto& [k, v] : kernelGens[j].terms()) {
      auto it = rows.find(k);
      if (it != rows.end()) a[it->second][j] = v;
    }
  }
  return linalg::solve(a, b, kernelGens.size(), t.coeffs()).has_value();
}

bool refutedByPairings(const EquivClass& x, const std::vector<EquivClass>& kernelGens,
                       const std::vector<EquivClass>& witnesses) {
  linalg::Matrix a(witnesses.size(), linalg::Vector(kernelGens.size()));
  linalg::Vector b(witnesses.size());
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    b[i] = pairClasses(x, witnesses[i]);
    for (std::size_t j = 0; j < kernelGens.size(); ++j) a[i][j] = pairClasses(kernelGens[j], witnesses[i]);
  }
  return !linalg::solve(a, b, kernelGens.size(), x.table()->coeffs()).has_value();
}

}  // namespace barbell

#include "barbell/groupring.hpp"

#include <algorithm>
#include <sstream>

#include "barbell/errors.hpp"

namespace barbell {

std::string toString(Coefficients c) { return c == Coefficients::F2 ? "f2" : "int"; }

Coefficients parseCoefficients(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (t == "f2" || t == "gf2" || t == "z2") return Coefficients::F2;
  if (t == "int" || t == "z" || t == "integers") return Coefficients::Integers;
  throw InvalidArgument("unknown field '" + text + "' (expected f2 or int)");
}

// --------------------------------------------------------- RingElement

RingElement RingElement::one(const DeckGroup& group, Coefficients coeffs) {
  return monomial(DeckElement::identity(group), coeffs);
}

RingElement RingElement::monomial(const DeckElement& g, Coefficients coeffs, const Integer& c) {
  RingElement r(g.group(), coeffs);
  r.addTerm(g, c);
  return r;
}

RingElement RingElement::fromTerms(const DeckGroup& group, Coefficients coeffs,
                                   const std::vector<std::pair<std::string, Integer>>& terms) {
  RingElement r(group, coeffs);
  for (const auto& [g, c] : terms) r.addTerm(DeckElement::parse(group, g), c);
  return r;
}

Integer RingElement::normalize(const Integer& c) const {
  if (coeffs_ == Coefficients::Integers) return c;
  Integer r = c % 2;
  if (r < 0) r += 2;
  return r;
}

Integer RingElement::coefficient(const DeckElement& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Integer(0) : it->second;
}

void RingElement::addTerm(const DeckElement& g, const Integer& c) {
  if (!(g.group() == group_)) throw InvalidArgument("term from " + g.group().str() + " added to " + group_.str());
  Integer v = normalize(c);
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, v);
  if (!inserted) {
    it->second = normalize(it->second + v);
    if (it->second == 0) terms_.erase(it);
  }
}

void RingElement::requireCompatible(const RingElement& other) const {
  if (!(group_ == other.group_)) throw InvalidArgument("group mismatch: " + group_.str() + " vs " + other.group_.str());
  if (coeffs_ != other.coeffs_) throw InvalidArgument("coefficient mismatch");
}

RingElement& RingElement::operator+=(const RingElement& other) {
  requireCompatible(other);
  for (const auto& [g, c] : other.terms_) addTerm(g, c);
  return *this;
}

RingElement RingElement::operator+(const RingElement& other) const {
  RingElement r = *this;
  r += other;
  return r;
}

RingElement RingElement::operator-() const { return scaled(-1); }

RingElement RingElement::operator-(const RingElement& other) const { return *this + (-other); }

RingElement RingElement::operator*(const RingElement& other) const {
  requireCompatible(other);
  RingElement r(group_, coeffs_);
  for (const auto& [g, a] : terms_)
    for (const auto& [h, b] : other.terms_) r.addTerm(multiply(g, h), a * b);
  return r;
}

RingElement RingElement::scaled(const Integer& c) const {
  RingElement r(group_, coeffs_);
  for (const auto& [g, a] : terms_) r.addTerm(g, a * c);
  return r;
}

RingElement RingElement::conjugate() const {
  RingElement r(group_, coeffs_);
  for (const auto& [g, a] : terms_) r.addTerm(invert(g), a);
  return r;
}

RingElement RingElement::shifted(const DeckElement& h) const {
  RingElement r(group_, coeffs_);
  for (const auto& [g, a] : terms_) r.addTerm(multiply(h, g), a);
  return r;
}

std::vector<std::pair<std::string, Integer>> RingElement::toTerms() const {
  std::vector<std::pair<std::string, Integer>> out;
  for (const auto& [g, c] : terms_) out.emplace_back(g.str(), c);
  return out;
}

std::string RingElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    const std::string mono = g.str();
    if (mono == "1")
      out << mag.get_str();
    else if (mag == 1)
      out << mono;
    else
      out << mag.get_str() << '*' << (mono.find(' ') == std::string::npos ? mono : "(" + mono + ")");
  }
  return out.str();
}

bool RingElement::operator==(const RingElement& other) const {
  return group_ == other.group_ && coeffs_ == other.coeffs_ && terms_ == other.terms_;
}

RingElement add(const RingElement& a, const RingElement& b) { return a + b; }
RingElement mul(const RingElement& a, const RingElement& b) { return a * b; }
RingElement scale(const Integer& c, const RingElement& a) { return a.scaled(c); }

// ------------------------------------------------------------ GroupHom

GroupHom GroupHom::abelianize(const DeckGroup& source, int targetRank,
                              std::vector<std::vector<std::int64_t>> weights) {
  if (source.kind() == DeckGroup::Kind::Cyclic && source.modulus() > 1)
    throw InvalidArgument("no nontrivial homomorphism from a finite cyclic group to Z^r");
  if (static_cast<int>(weights.size()) != source.generatorCount())
    throw InvalidArgument("abelianization needs one weight vector per generator");
  for (const auto& w : weights)
    if (static_cast<int>(w.size()) != targetRank) throw InvalidArgument("weight vector length must equal target rank");
  GroupHom h(Kind::Abelianize, source, DeckGroup::freeAbelian(targetRank));
  h.weights_ = std::move(weights);
  return h;
}

GroupHom GroupHom::cyclic(const DeckGroup& source, std::vector<std::int64_t> weights, std::int64_t m) {
  if (static_cast<int>(weights.size()) != source.generatorCount())
    throw InvalidArgument("cyclic projection needs one weight per generator");
  if (source.kind() == DeckGroup::Kind::Cyclic && (source.modulus() * weights[0]) % m != 0)
    throw InvalidArgument("weights do not define a homomorphism " + source.str() + " -> Z/" + std::to_string(m));
  GroupHom h(Kind::Cyclic, source, DeckGroup::cyclic(m));
  h.weights_ = {std::move(weights)};
  return h;
}

GroupHom GroupHom::brunnianCenter(int n) {
  return GroupHom(Kind::BrunnianCenter, DeckGroup::free(n), DeckGroup::freeAbelian(2));
}

DeckElement GroupHom::apply(const DeckElement& g) const {
  if (!(g.group() == source_)) throw InvalidArgument("homomorphism applied outside its source " + source_.str());
  // Exponent of each source generator, as a list of (generator, exponent) contributions.
  std::vector<std::pair<int, Integer>> parts;
  switch (source_.kind()) {
    case DeckGroup::Kind::Free:
      for (const auto& l : g.word().letters()) parts.emplace_back(l.gen, Integer(static_cast<long>(l.exp)));
      break;
    case DeckGroup::Kind::FreeAbelian:
      for (std::size_t i = 0; i < g.exponents().size(); ++i) parts.emplace_back(static_cast<int>(i + 1), g.exponents()[i]);
      break;
    case DeckGroup::Kind::Cyclic:
      parts.emplace_back(1, Integer(static_cast<long>(g.residue())));
      break;
  }
  switch (kind_) {
    case Kind::Abelianize: {
      std::vector<Integer> e(static_cast<std::size_t>(target_.rank()));
      for (const auto& [gen, x] : parts)
        for (std::size_t j = 0; j < e.size(); ++j)
          e[j] += x * static_cast<long>(weights_[static_cast<std::size_t>(gen - 1)][j]);
      return DeckElement::fromExponents(target_, std::move(e));
    }
    case Kind::Cyclic: {
      const long m = static_cast<long>(target_.modulus());
      Integer s = 0;
      for (const auto& [gen, x] : parts) s += x * static_cast<long>(weights_[0][static_cast<std::size_t>(gen - 1)]);
      Integer r = s % m;
      if (r < 0) r += m;
      return DeckElement::fromResidue(target_, r.get_si());
    }
    case Kind::BrunnianCenter: {
      const int n = source_.rank();
      auto img = nilpotentTimesZ(g.word(), n);
      if (!img.matrix.isCentral())
        throw InvalidArgument("element " + g.str() + " does not lie in the subgroup generated by w and x" +
                              std::to_string(n));
      return DeckElement::fromExponents(target_, {img.matrix.at(1, n), img.zExponent});
    }
  }
  throw InvalidArgument("unknown homomorphism");
}

RingElement applyHom(const RingElement& a, const GroupHom& hom) {
  RingElement r(hom.target(), a.coeffs());
  for (const auto& [g, c] : a.terms()) r.addTerm(hom.apply(g), c);
  return r;
}

// -------------------------------------------------- units and associates

namespace {

void requireCommutative(const RingElement& a) {
  if (!a.group().isCommutative()) throw InvalidArgument("operation needs a commutative group ring");
}

}  // namespace

bool isMonomialUnit(const RingElement& a) {
  requireCommutative(a);
  if (a.size() != 1) return false;
  const Integer& c = a.terms().begin()->second;
  return c == 1 || c == -1;
}

RingElement associateNormalForm(const RingElement& a) {
  requireCommutative(a);
  if (a.isZero()) throw InvalidArgument("zero has no associate normal form");
  RingElement best(a.group(), a.coeffs());
  if (a.group().kind() == DeckGroup::Kind::FreeAbelian) {
    std::vector<Integer> lo = a.terms().begin()->first.exponents();
    for (const auto& [g, c] : a.terms())
      for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = std::min(lo[i], g.exponents()[i]);
    for (auto& x : lo) x = -x;
    best = a.shifted(DeckElement::fromExponents(a.group(), lo));
  } else {
    // Finite cyclic: pick the smallest translate.
    bool have = false;
    for (std::int64_t i = 0; i < a.group().modulus(); ++i) {
      RingElement cand = a.shifted(DeckElement::fromResidue(a.group(), i));
      if (!have || cand.terms() < best.terms()) {
        best = cand;
        have = true;
      }
    }
  }
  if (best.terms().begin()->second < 0) best = -best;
  return best;
}

bool areAssociates(const RingElement& a, const RingElement& b) {
  if (a.isZero() || b.isZero()) throw InvalidArgument("associate test needs nonzero inputs");
  if (!(a.group() == b.group()) || a.coeffs() != b.coeffs()) throw InvalidArgument("ring mismatch");
  if (a.size() != b.size()) return false;
  return associateNormalForm(a) == associateNormalForm(b);
}

namespace {

void requireLaurent(const RingElement& a) {
  if (a.group().kind() != DeckGroup::Kind::FreeAbelian || a.group().rank() != 1)
    throw InvalidArgument("expected a one-variable Laurent polynomial, got group " + a.group().str());
}

}  // namespace

Integer minDegree(const RingElement& a) {
  requireLaurent(a);
  if (a.isZero()) throw InvalidArgument("zero has no degree");
  return a.terms().begin()->first.exponents()[0];
}

Integer maxDegree(const RingElement& a) {
  requireLaurent(a);
  if (a.isZero()) throw InvalidArgument("zero has no degree");
  return a.terms().rbegin()->first.exponents()[0];
}

std::optional<Integer> laurentSpan(const RingElement& a) {
  requireLaurent(a);
  if (a.coeffs() != Coefficients::F2) throw InvalidArgument("laurentSpan is an F2 dimension");
  if (a.isZero()) return std::nullopt;
  return maxDegree(a) - minDegree(a);
}

}  // namespace barbell

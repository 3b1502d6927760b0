#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "barbell/deckgroup.hpp"
#include "barbell/groupring.hpp"

namespace barbell {

enum class LabelKind { Sphere, Disk, Meridian };

std::string toString(LabelKind kind);
LabelKind parseLabelKind(const std::string& text);

struct GeneratorLabel {
  std::string name;
  LabelKind kind = LabelKind::Sphere;

  bool operator==(const GeneratorLabel&) const = default;
};

/// Equivariant intersection data: P_{A,B} = sum_g <A~, g B~> g.
///
/// Only one orientation of each pair needs to be given; the other one is
/// P_{B,A}(g) = sign * P_{A,B}(g^-1), where sign is the symmetry sign of the
/// middle-dimensional form.
class PairingTable {
 public:
  PairingTable(DeckGroup group, Coefficients coeffs, std::vector<GeneratorLabel> labels, int symmetrySign = 1);

  const DeckGroup& group() const { return group_; }
  Coefficients coeffs() const { return coeffs_; }
  int symmetrySign() const { return symmetrySign_; }
  const std::vector<GeneratorLabel>& labels() const { return labels_; }

  bool hasLabel(const std::string& name) const;
  std::size_t indexOf(const std::string& name) const;
  const GeneratorLabel& label(std::size_t index) const { return labels_.at(index); }
  const GeneratorLabel& label(const std::string& name) const { return labels_[indexOf(name)]; }

  void set(const std::string& a, const std::string& b, const RingElement& p);
  RingElement pairing(std::size_t a, std::size_t b) const;
  RingElement pairing(const std::string& a, const std::string& b) const;

  // Entries in the order they were set.
  const std::vector<std::tuple<std::string, std::string, RingElement>>& declared() const { return declared_; }

  // Table of the intermediate cover obtained by pushing deck elements through hom.
  PairingTable pushforward(const GroupHom& hom) const;
  // Same data with a different coefficient ring (integer entries reduced mod 2).
  PairingTable withCoefficients(Coefficients coeffs) const;
  // Adds a label with no pairings yet.
  void addLabel(const GeneratorLabel& label);

 private:
  DeckGroup group_;
  Coefficients coeffs_;
  int symmetrySign_;
  std::vector<GeneratorLabel> labels_;
  std::map<std::string, std::size_t> index_;
  std::map<std::pair<std::size_t, std::size_t>, RingElement> entries_;
  std::vector<std::tuple<std::string, std::string, RingElement>> declared_;
};

using TablePtr = std::shared_ptr<const PairingTable>;

/// A class in the lifted basis: sum of c * g * label~.
class EquivClass {
 public:
  using Key = std::pair<std::size_t, DeckElement>;
  using Terms = std::map<Key, Integer>;

  explicit EquivClass(TablePtr table);
  static EquivClass generator(TablePtr table, const std::string& label);
  static EquivClass lift(TablePtr table, const std::string& label, const DeckElement& g, const Integer& c = 1);

  const TablePtr& table() const { return table_; }
  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const std::string& label, const DeckElement& g) const;

  void addTerm(std::size_t label, const DeckElement& g, const Integer& c);
  void addTerm(const std::string& label, const DeckElement& g, const Integer& c);

  EquivClass operator+(const EquivClass& other) const;
  EquivClass operator-(const EquivClass& other) const;
  EquivClass scaled(const Integer& c) const;
  // Left translation by a deck element.
  EquivClass translated(const DeckElement& g) const;

  struct Term {
    std::string label;
    DeckElement element;
    Integer coefficient;
  };
  std::vector<Term> sortedTerms() const;
  // "S_v + t^-2 S_h + t^-1 S_h"
  std::string str() const;

  bool operator==(const EquivClass& other) const;

 private:
  void requireSameTable(const EquivClass& other) const;
  TablePtr table_;
  Terms terms_;
};

struct BarbellSpec {
  std::string name;
  std::string cuff1;
  std::string cuff2;
  // Lifted cuff pairs are (u cuff1~, u c cuff2~) with c the holonomy.
  DeckElement holonomy;
  int sign1 = 1;
  int sign2 = 1;
  int iterate = 1;
  // Post-composition with a deck translation; selects a different lift.
  std::optional<DeckElement> offset;

  // Valid because lifted cuffs pair trivially, so the correction squares to zero.
  BarbellSpec inverse() const;
};

/// Raw terms added by one application of the barbell, before collisions.
struct Contribution {
  std::string label;
  DeckElement element;
  Integer coefficient;
};

void validateBarbell(const PairingTable& table, const BarbellSpec& spec);

std::vector<Contribution> barbellContributions(const EquivClass& x, const BarbellSpec& spec);
EquivClass barbellAction(const EquivClass& x, const BarbellSpec& spec);
// Applies specs in order: specs[0] acts first.
EquivClass actionSequence(const EquivClass& x, const std::vector<BarbellSpec>& specs);

RingElement equivariantPairing(const EquivClass& x, const std::string& label);
std::vector<RingElement> intersectionPolynomial(const EquivClass& x, const std::vector<std::string>& disks);
Integer pairClasses(const EquivClass& x, const EquivClass& y);

/// Labels allowed in every lift, plus individually allowed lifts.
struct AllowedSet {
  std::set<std::string> labels;
  std::set<std::pair<std::string, DeckElement>> lifts;

  bool contains(const std::string& label, const DeckElement& g) const;
};

bool summandMembership(const EquivClass& x, const AllowedSet& allowed, const std::vector<EquivClass>& kernelGens);

/// True if the pairings of x against the witnesses differ from those of every
/// element in the span of kernelGens, so x is not in that span.
bool refutedByPairings(const EquivClass& x, const std::vector<EquivClass>& kernelGens,
                       const std::vector<EquivClass>& witnesses);

}  // namespace barbell

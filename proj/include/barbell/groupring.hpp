#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "barbell/deckgroup.hpp"

namespace barbell {

enum class Coefficients { F2, Integers };

std::string toString(Coefficients c);
// Accepts "f2", "F2", "int", "Z", "integers".
Coefficients parseCoefficients(const std::string& text);

/// Finite formal sum of deck elements with F2 or Z coefficients.
class RingElement {
 public:
  using Terms = std::map<DeckElement, Integer>;

  RingElement(DeckGroup group, Coefficients coeffs) : group_(group), coeffs_(coeffs) {}

  static RingElement zero(const DeckGroup& group, Coefficients coeffs) { return {group, coeffs}; }
  static RingElement one(const DeckGroup& group, Coefficients coeffs);
  static RingElement monomial(const DeckElement& g, Coefficients coeffs, const Integer& c = 1);
  static RingElement fromTerms(const DeckGroup& group, Coefficients coeffs,
                               const std::vector<std::pair<std::string, Integer>>& terms);

  const DeckGroup& group() const { return group_; }
  Coefficients coeffs() const { return coeffs_; }
  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const DeckElement& g) const;

  // Adds c*g in place.
  void addTerm(const DeckElement& g, const Integer& c);

  RingElement operator+(const RingElement& other) const;
  RingElement operator-(const RingElement& other) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& other) const;
  RingElement& operator+=(const RingElement& other);

  RingElement scaled(const Integer& c) const;
  // sum c_g g  ->  sum c_g g^-1
  RingElement conjugate() const;
  // Left multiplication by a deck element.
  RingElement shifted(const DeckElement& g) const;

  std::vector<std::pair<std::string, Integer>> toTerms() const;
  // Increasing deck-element order: "t^-3 + t^-1 + 1 + t + t^3".
  std::string str() const;

  bool operator==(const RingElement& other) const;

 private:
  Integer normalize(const Integer& c) const;
  void requireCompatible(const RingElement& other) const;

  DeckGroup group_;
  Coefficients coeffs_;
  Terms terms_;
};

RingElement add(const RingElement& a, const RingElement& b);
RingElement mul(const RingElement& a, const RingElement& b);
RingElement scale(const Integer& c, const RingElement& a);

/// Group homomorphism descriptors used to push ring elements forward.
class GroupHom {
 public:
  enum class Kind { Abelianize, Cyclic, BrunnianCenter };

  // weights[i] is the image exponent vector of rho_{i+1}, each of length targetRank.
  static GroupHom abelianize(const DeckGroup& source, int targetRank,
                             std::vector<std::vector<std::int64_t>> weights);
  // rho_i -> weights[i-1] mod m.
  static GroupHom cyclic(const DeckGroup& source, std::vector<std::int64_t> weights, std::int64_t m);
  // F_n -> Z^2 through phi, (coefficient of E_{1,n}, rho_n exponent) = (s, t).
  static GroupHom brunnianCenter(int n);

  Kind kind() const { return kind_; }
  const DeckGroup& source() const { return source_; }
  const DeckGroup& target() const { return target_; }
  DeckElement apply(const DeckElement& g) const;

 private:
  GroupHom(Kind kind, DeckGroup source, DeckGroup target) : kind_(kind), source_(source), target_(target) {}
  Kind kind_;
  DeckGroup source_;
  DeckGroup target_;
  std::vector<std::vector<std::int64_t>> weights_;
};

RingElement applyHom(const RingElement& a, const GroupHom& hom);

bool isMonomialUnit(const RingElement& a);
bool areAssociates(const RingElement& a, const RingElement& b);

/// Canonical associate: support translated so its componentwise minimum is 0,
/// and over Z the first coefficient made positive.
RingElement associateNormalForm(const RingElement& a);

/// max deg - min deg for a one-variable F2 Laurent polynomial; nullopt stands for
/// the infinite quotient of the zero polynomial.
std::optional<Integer> laurentSpan(const RingElement& a);

Integer minDegree(const RingElement& a);
Integer maxDegree(const RingElement& a);

}  // namespace barbell

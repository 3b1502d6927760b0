#pragma once

#include <string>

#include "barbell/deckgroup.hpp"

namespace barbell {

/// Action (a b; c d) of a torus diffeomorphism on H_1 in the basis [mu], [lambda].
/// Columns are images: psi(mu) = a mu + c lambda.
class GluingMatrix {
 public:
  GluingMatrix(Integer a, Integer b, Integer c, Integer d);
  static GluingMatrix identity() { return {1, 0, 0, 1}; }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }
  Integer det() const { return a_ * d_ - b_ * c_; }
  std::string str() const;

  bool operator==(const GluingMatrix&) const = default;

 private:
  Integer a_, b_, c_, d_;
};

/// Genus one manifold H_h cup psi(H_h): S^3, S^1 x S^2 or a lens space L(p, q).
struct ManifoldTag {
  enum class Kind { S3, S1xS2, Lens };
  Kind kind = Kind::S3;
  Integer p = 1;
  Integer q = 0;

  std::string str() const;
  bool operator==(const ManifoldTag&) const = default;
};

/// L(p, q) with q reduced to its smallest representative among +-q^{+-1} mod p.
ManifoldTag lensSpace(const Integer& p, const Integer& q);

/// True iff psi extends over S^4.
bool montesinosParity(const GluingMatrix& m);
/// A det 1 matrix with even entry sum whose gluing gives L(p, q).
GluingMatrix montesinosMatrixFor(const Integer& p, const Integer& q);
ManifoldTag classifyGluing(const GluingMatrix& m);

}  // namespace barbell

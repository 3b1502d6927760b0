#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "barbell/equivariant.hpp"
#include "barbell/groupring.hpp"

namespace barbell {

/// Rows are relations (attaching spheres), columns are generators (belt disks).
struct PresentationMatrix {
  DeckGroup group;
  Coefficients coeffs = Coefficients::F2;
  std::vector<std::string> rowLabels;
  std::vector<std::string> colLabels;
  std::vector<std::vector<RingElement>> entries;

  std::size_t rows() const { return entries.size(); }
  std::size_t cols() const { return colLabels.size(); }
  const RingElement& at(std::size_t r, std::size_t c) const { return entries.at(r).at(c); }
  // "[[0, -2*t^-1 + 2], [2*t^-1 - 2, 0]]"
  std::string str() const;
};

PresentationMatrix presentFromScenario(const TablePtr& table, const std::vector<BarbellSpec>& barbells,
                                       const std::vector<std::string>& attaching,
                                       const std::vector<std::string>& disks);

struct ModuleInvariant {
  enum class Kind { F2LaurentDim, CyclicFactors, FittingGens, NontrivialityWitness };
  Kind kind = Kind::F2LaurentDim;
  std::optional<Integer> dimension;  // nullopt: infinite
  std::vector<RingElement> elements;
  int level = 0;
  std::string witness;

  std::string str() const;
};

/// dim over F2 of F2[t,t^-1]/(f) for a 1x1 presentation [f].
std::optional<Integer> f2QuotientDim(const PresentationMatrix& m);

/// Factors of the cokernel of a zero-diagonal 2x2 matrix over Z[t,t^-1].
std::vector<RingElement> antidiagonalCokernel(const PresentationMatrix& m);

/// Lowest degree 0 and positive leading coefficient, e.g. k t^-1 - k -> k t - k.
RingElement normalizeFactor(const RingElement& a);
/// "3*(-1 + t)" style rendering with the integer content pulled out.
std::string factorString(const RingElement& a);

RingElement determinant(const std::vector<std::vector<RingElement>>& square);
/// Generators of the i-th Fitting ideal, normalized and without duplicates.
std::vector<RingElement> fittingGenerators(const PresentationMatrix& m, int level);

/// f_{k,l} = 1 + (x_n^-1 + 1)(w^-k + w^k)(1 + x_n)(w^-l + w^l) in F2[F_n].
RingElement brunnianRelator(int k, int l, int n);
/// Image of f_{k,l} in F2[s^{+-1}, t^{+-1}] with s = phi(w), t = phi(x_n).
RingElement brunnianRelatorImage(int k, int l, int n);

/// True means the two modules are provably not isomorphic; false means the
/// associate test could not tell them apart.
bool distinguishBrunnianModules(int k, int l, int k2, int l2, int n);

/// Vanishing sets produced by deleting each component k = 2..n.
std::vector<std::set<int>> brunnianVanishingSets(int n);
/// True when the constraints force every coordinate a_2..a_n to vanish.
bool brunnianDiskObstruction(int n, const std::vector<std::set<int>>& vanishingSets);

}  // namespace barbell

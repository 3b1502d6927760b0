#pragma once

#include <string>
#include <vector>

#include "barbell/equivariant.hpp"
#include "barbell/report.hpp"

namespace barbell {

/// A cover of a surface complement: pairing data plus handle roles.
struct Geometry {
  std::string name;
  Params params;
  TablePtr table;
  // Attaching spheres of the 3-handles and belt disks of the 2-handles.
  std::vector<std::string> attaching;
  std::vector<std::string> disks;
  // Classes that die in the relative homology used by an obstruction.
  std::vector<EquivClass> kernel;

  const DeckGroup& group() const { return table->group(); }
  Coefficients coeffs() const { return table->coeffs(); }
  EquivClass gen(const std::string& label) const { return EquivClass::generator(table, label); }
  EquivClass lift(const std::string& label, const DeckElement& g) const { return EquivClass::lift(table, label, g); }
};

// Universal abelian cover of the complement of the unknotted torus.
Geometry torusComplement(Coefficients coeffs = Coefficients::F2);
// Infinite cyclic cover of the complement of the unknotted genus g surface.
Geometry genusComplement(int g, Coefficients coeffs = Coefficients::Integers);
// Cover of the sphere-torus unlink complement with deck group F_n.
Geometry sphereTorusLink(int n);
// Two unlinked circles in S^4; no cover.
Geometry circlesComplement();
// Unlink of unknotted surfaces of genus gl and gr; no cover.
Geometry splitSurfacesComplement(int gl, int gr);
// Unknotted genus g surface bounding H_h; no cover.
Geometry handlebodyComplement(int g);
// Split link of a knotted surface and a circle, infinite cyclic cover over mu_K.
Geometry knotCircleComplement();
// Split link of a knotted surface and an unknotted surface, Z^2 cover over both meridians.
Geometry splitKnotComplement();
// Intermediate cyclic cover of a base geometry, rho_i -> weights[i-1] mod m.
Geometry cyclicCover(const Geometry& base, std::int64_t m, const std::vector<std::int64_t>& weights);
// m-fold cyclic branched cover of S^4 along the unknotted torus.
Geometry branchedCover(std::int64_t m);
// Torus complement data for the 2n-dimensional analogue.
Geometry higherDimTorus(int n);

std::vector<std::string> builtinGeometryNames();
Geometry builtinGeometry(const std::string& name, const Params& params = {});

}  // namespace barbell

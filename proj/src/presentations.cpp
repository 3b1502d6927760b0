#include "barbell/presentations.hpp"

#include <algorithm>
#include <sstream>

#include "barbell/errors.hpp"
#include "barbell/linalg.hpp"

namespace barbell {

std::string PresentationMatrix::str() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < entries.size(); ++r) {
    if (r > 0) out << ", ";
    out << '[';
    for (std::size_t c = 0; c < entries[r].size(); ++c) {
      if (c > 0) out << ", ";
      out << entries[r][c].str();
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

PresentationMatrix presentFromScenario(const TablePtr& table, const std::vector<BarbellSpec>& barbells,
                                       const std::vector<std::string>& attaching,
                                       const std::vector<std::string>& disks) {
  PresentationMatrix m;
  m.group = table->group();
  m.coeffs = table->coeffs();
  m.rowLabels = attaching;
  m.colLabels = disks;
  for (const auto& d : disks)
    if (table->label(d).kind != LabelKind::Disk) throw InvalidArgument("'" + d + "' is not a disk label");
  for (const auto& s : attaching) {
    if (table->label(s).kind != LabelKind::Sphere) throw InvalidArgument("'" + s + "' is not a sphere label");
    const EquivClass x = actionSequence(EquivClass::generator(table, s), barbells);
    m.entries.push_back(intersectionPolynomial(x, disks));
  }
  return m;
}

std::string ModuleInvariant::str() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::F2LaurentDim:
      out << "dim_F2 = " << (dimension ? dimension->get_str() : std::string("infinite"));
      break;
    case Kind::CyclicFactors:
    case Kind::FittingGens: {
      out << (kind == Kind::FittingGens ? "Fitt_" + std::to_string(level) + " = (" : std::string("factors ["));
      for (std::size_t i = 0; i < elements.size(); ++i) out << (i ? ", " : "") << factorString(elements[i]);
      out << (kind == Kind::FittingGens ? ")" : "]");
      break;
    }
    case Kind::NontrivialityWitness:
      out << "nontrivial: " << witness;
      break;
  }
  return out.str();
}

std::optional<Integer> f2QuotientDim(const PresentationMatrix& m) {
  if (m.rows() != 1 || m.cols() != 1) throw ShapeError("f2QuotientDim needs a 1x1 presentation");
  if (m.coeffs != Coefficients::F2) throw InvalidArgument("f2QuotientDim needs F2 coefficients");
  // F2[t,t^-1] is a Euclidean domain, so the quotient by (f) has dimension deg span f.
  return laurentSpan(m.at(0, 0));
}

RingElement normalizeFactor(const RingElement& a) {
  if (a.isZero()) return a;
  if (a.group().kind() == DeckGroup::Kind::FreeAbelian && a.group().rank() == 1) {
    const Integer lo = minDegree(a);
    RingElement r = a.shifted(DeckElement::fromExponents(a.group(), {Integer(-lo)}));
    if (r.terms().rbegin()->second < 0) r = -r;
    return r;
  }
  return associateNormalForm(a);
}

std::string factorString(const RingElement& a) {
  if (a.isZero() || a.coeffs() == Coefficients::F2 || a.size() == 1) return a.str();
  Integer content = 0;
  for (const auto& [g, c] : a.terms()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content == 1) return a.str();
  RingElement prim(a.group(), a.coeffs());
  for (const auto& [g, c] : a.terms()) prim.addTerm(g, c / content);
  return content.get_str() + "*(" + prim.str() + ")";
}

std::vector<RingElement> antidiagonalCokernel(const PresentationMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw ShapeError("antidiagonalCokernel needs a 2x2 matrix");
  if (m.group.kind() != DeckGroup::Kind::FreeAbelian || m.group.rank() != 1 || m.coeffs != Coefficients::Integers)
    throw InvalidArgument("antidiagonalCokernel works over Z[t,t^-1]");
  if (!m.at(0, 0).isZero() || !m.at(1, 1).isZero())
    throw ShapeError("expected a zero diagonal, got " + m.str());
  if (m.at(0, 1).isZero() || m.at(1, 0).isZero()) throw ShapeError("expected a nonzero antidiagonal, got " + m.str());
  // Generator j is killed exactly by the antidiagonal entry in column j.
  return {normalizeFactor(m.at(1, 0)), normalizeFactor(m.at(0, 1))};
}

RingElement determinant(const std::vector<std::vector<RingElement>>& a) {
  const std::size_t n = a.size();
  if (n == 0) throw InvalidArgument("determinant of an empty matrix");
  for (const auto& row : a)
    if (row.size() != n) throw ShapeError("determinant needs a square matrix");
  if (!a[0][0].group().isCommutative()) throw InvalidArgument("determinant needs a commutative ring");
  if (n == 1) return a[0][0];
  RingElement det = RingElement::zero(a[0][0].group(), a[0][0].coeffs());
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].isZero()) continue;
    std::vector<std::vector<RingElement>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<RingElement> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[r][c]);
      minor.push_back(std::move(row));
    }
    RingElement term = a[0][j] * determinant(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, k, 0, cur, out);
  return out;
}

}  // namespace

std::vector<RingElement> fittingGenerators(const PresentationMatrix& m, int level) {
  if (level < 0) throw InvalidArgument("Fitting level must be >= 0");
  if (!m.group.isCommutative()) throw InvalidArgument("Fitting ideals need a commutative ring");
  const RingElement one = RingElement::one(m.group, m.coeffs);
  const auto cols = static_cast<std::ptrdiff_t>(m.cols());
  const std::ptrdiff_t size = cols - level;
  if (size <= 0) return {one};
  if (static_cast<std::size_t>(size) > m.rows()) return {RingElement::zero(m.group, m.coeffs)};
  std::vector<RingElement> gens;
  const auto k = static_cast<std::size_t>(size);
  for (const auto& rs : subsets(m.rows(), k)) {
    for (const auto& cs : subsets(m.cols(), k)) {
      std::vector<std::vector<RingElement>> sub;
      for (auto r : rs) {
        std::vector<RingElement> row;
        for (auto c : cs) row.push_back(m.at(r, c));
        sub.push_back(std::move(row));
      }
      RingElement d = determinant(sub);
      if (d.isZero()) continue;
      d = normalizeFactor(d);
      if (std::find(gens.begin(), gens.end(), d) == gens.end()) gens.push_back(d);
    }
  }
  if (gens.empty()) gens.push_back(RingElement::zero(m.group, m.coeffs));
  return gens;
}

// ---------------------------------------------------------- Brunnian

namespace {

void requireBrunnianParams(int k, int l, int n) {
  if (k < 1 || l < 1) throw InvalidArgument("k and l must be >= 1");
  if (n < 2) throw InvalidArgument("n must be >= 2");
}

}  // namespace

RingElement brunnianRelator(int k, int l, int n) {
  requireBrunnianParams(k, l, n);
  const DeckGroup g = DeckGroup::free(n);
  const Coefficients f2 = Coefficients::F2;
  const Word w = brunnianWord(n);
  auto mono = [&](const Word& word) { return RingElement::monomial(DeckElement::fromWord(g, word), f2); };
  const RingElement one = RingElement::one(g, f2);
  const RingElement rho = mono(Word::generator(n));
  const RingElement rhoInv = mono(Word::generator(n, -1));
  const RingElement wk = mono(w.pow(-k)) + mono(w.pow(k));
  const RingElement wl = mono(w.pow(-l)) + mono(w.pow(l));
  return one + (rhoInv + one) * wk * (one + rho) * wl;
}

RingElement brunnianRelatorImage(int k, int l, int n) {
  return applyHom(brunnianRelator(k, l, n), GroupHom::brunnianCenter(n));
}

bool distinguishBrunnianModules(int k, int l, int k2, int l2, int n) {
  requireBrunnianParams(k, l, n);
  requireBrunnianParams(k2, l2, n);
  return !areAssociates(brunnianRelatorImage(k, l, n), brunnianRelatorImage(k2, l2, n));
}

std::vector<std::set<int>> brunnianVanishingSets(int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  std::vector<std::set<int>> sets;
  for (int k = 2; k <= n; ++k) {
    std::set<int> s;
    for (int j = 2; j <= n; ++j)
      if (j != k) s.insert(j);
    sets.push_back(std::move(s));
  }
  return sets;
}

bool brunnianDiskObstruction(int n, const std::vector<std::set<int>>& vanishingSets) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  const std::size_t dim = static_cast<std::size_t>(n - 1);
  if (dim == 0) return true;
  linalg::Matrix rows;
  for (const auto& s : vanishingSets) {
    for (int j : s) {
      if (j < 2 || j > n) throw InvalidArgument("coordinate a_" + std::to_string(j) + " does not exist");
      linalg::Vector e(dim);
      e[static_cast<std::size_t>(j - 2)] = 1;
      rows.push_back(std::move(e));
    }
  }
  return linalg::rank(rows, dim, Coefficients::Integers) == dim;
}

}  // namespace barbell

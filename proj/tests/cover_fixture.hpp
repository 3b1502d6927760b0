#pragma once

// Random pairing tables over Cyclic(m), built twice: once as a library
// PairingTable and once as the dense oracle model.

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "barbell/equivariant.hpp"
#include "oracles.hpp"

namespace fixture {

struct RandomCover {
  int m = 1;
  int labels = 0;
  barbell::Coefficients coeffs = barbell::Coefficients::F2;
  std::shared_ptr<barbell::PairingTable> table;
  oracle::DenseCover dense;
  // Cuff labels are 0 and 1; they pair trivially with each other and themselves.
  long long holonomy = 0;

  static std::string name(int i) { return "L" + std::to_string(i); }
  barbell::DeckElement residue(long long r) const {
    return barbell::DeckElement::fromResidue(table->group(), r);
  }
};

inline RandomCover makeRandomCover(std::mt19937& rng, barbell::Coefficients coeffs) {
  using namespace barbell;
  RandomCover rc;
  rc.m = std::uniform_int_distribution<int>(1, 12)(rng);
  rc.labels = std::uniform_int_distribution<int>(3, 5)(rng);
  rc.coeffs = coeffs;
  const DeckGroup cm = DeckGroup::cyclic(rc.m);
  std::vector<GeneratorLabel> labels;
  for (int i = 0; i < rc.labels; ++i) labels.push_back({RandomCover::name(i), LabelKind::Sphere});
  rc.table = std::make_shared<PairingTable>(cm, coeffs, labels);
  rc.dense.m = rc.m;
  rc.dense.labels = rc.labels;
  rc.dense.mod2 = coeffs == Coefficients::F2;
  rc.dense.form.assign(rc.labels * rc.m, std::vector<long long>(rc.labels * rc.m, 0));
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<int> val(-2, 2);
  std::uniform_int_distribution<long long> res(0, rc.m - 1);
  for (int a = 0; a < rc.labels; ++a)
    for (int b = a + 1; b < rc.labels; ++b) {
      if (a <= 1 && b <= 1) continue;
      if (coin(rng) == 0) continue;
      RingElement p(cm, coeffs);
      const int terms = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int i = 0; i < terms; ++i) {
        const long long g = res(rng);
        long long c = rc.dense.mod2 ? 1 : val(rng);
        if (c == 0) c = 1;
        p.addTerm(DeckElement::fromResidue(cm, g), Integer(static_cast<long>(c)));
        rc.dense.declare(a, b, g, c, 1);
      }
      rc.table->set(RandomCover::name(a), RandomCover::name(b), p);
    }
  if (rc.dense.mod2)
    for (auto& row : rc.dense.form)
      for (auto& v : row) v = oracle::modPos(v, 2);
  rc.holonomy = res(rng);
  return rc;
}

/// Random class with small coefficients, as a library class and a dense vector.
inline std::pair<barbell::EquivClass, std::vector<long long>> randomClass(std::mt19937& rng, const RandomCover& rc) {
  barbell::EquivClass x(rc.table);
  std::vector<long long> v(rc.dense.size(), 0);
  std::uniform_int_distribution<int> val(-3, 3);
  const int terms = std::uniform_int_distribution<int>(1, 6)(rng);
  for (int i = 0; i < terms; ++i) {
    const int label = std::uniform_int_distribution<int>(0, rc.labels - 1)(rng);
    const long long r = std::uniform_int_distribution<long long>(0, rc.m - 1)(rng);
    long long c = val(rng);
    if (rc.dense.mod2) c = oracle::modPos(c, 2);
    if (c == 0) continue;
    x.addTerm(RandomCover::name(label), rc.residue(r), barbell::Integer(static_cast<long>(c)));
    v[rc.dense.index(label, r)] += c;
  }
  rc.dense.reduce(v);
  return {x, v};
}

inline std::vector<long long> toDense(const barbell::EquivClass& x, const RandomCover& rc) {
  std::vector<long long> v(rc.dense.size(), 0);
  for (const auto& t : x.sortedTerms()) {
    const int label = std::stoi(t.label.substr(1));
    v[rc.dense.index(label, t.element.residue())] += t.coefficient.get_si();
  }
  rc.dense.reduce(v);
  return v;
}

}  // namespace fixture

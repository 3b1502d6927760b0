#include <gtest/gtest.h>

#include <random>

#include "barbell/deckgroup.hpp"
#include "barbell/equivariant.hpp"
#include "barbell/groupring.hpp"
#include "barbell/presentations.hpp"
#include "cover_fixture.hpp"
#include "oracles.hpp"

using namespace barbell;

namespace {

constexpr int kCases = 300;

std::vector<int> randomLetters(std::mt19937& rng, int gens, int maxLen) {
  std::uniform_int_distribution<int> len(0, maxLen);
  std::uniform_int_distribution<int> gen(1, gens);
  std::vector<int> out(static_cast<std::size_t>(len(rng)));
  for (int& x : out) x = gen(rng) * (rng() % 2 ? 1 : -1);
  return out;
}

Word toWord(const std::vector<int>& xs) {
  std::vector<Letter> ls;
  for (int x : xs) ls.push_back({x > 0 ? x : -x, x > 0 ? 1 : -1});
  return Word::reduce(ls);
}

DeckElement randomElement(std::mt19937& rng, const DeckGroup& g) {
  switch (g.kind()) {
    case DeckGroup::Kind::Cyclic:
      return DeckElement::fromResidue(g, static_cast<std::int64_t>(rng() % 97));
    case DeckGroup::Kind::FreeAbelian: {
      std::vector<Integer> e;
      for (int i = 0; i < g.rank(); ++i) e.emplace_back(static_cast<long>(rng() % 7) - 3);
      return DeckElement::fromExponents(g, e);
    }
    case DeckGroup::Kind::Free:
      return DeckElement::fromWord(g, toWord(randomLetters(rng, g.rank(), 4)));
    default:
      return DeckElement::identity(g);
  }
}

RingElement randomRing(std::mt19937& rng, const DeckGroup& g, Coefficients c, int maxTerms = 5) {
  RingElement r(g, c);
  const int n = static_cast<int>(rng() % (maxTerms + 1));
  for (int i = 0; i < n; ++i) r.addTerm(randomElement(rng, g), Integer(static_cast<long>(rng() % 7) - 3));
  return r;
}

struct RingCase {
  DeckGroup group;
  Coefficients coeffs;
};

const std::vector<RingCase>& ringCases() {
  static const std::vector<RingCase> cases = {
      {DeckGroup::freeAbelian(1), Coefficients::F2}, {DeckGroup::freeAbelian(1), Coefficients::Integers},
      {DeckGroup::freeAbelian(2), Coefficients::F2}, {DeckGroup::free(2), Coefficients::F2},
      {DeckGroup::free(3), Coefficients::Integers},  {DeckGroup::cyclic(6), Coefficients::Integers},
  };
  return cases;
}

}  // namespace

TEST(RingProperties, Axioms) {
  std::mt19937 rng(1);
  for (const auto& rc : ringCases())
    for (int i = 0; i < kCases; ++i) {
      const RingElement a = randomRing(rng, rc.group, rc.coeffs);
      const RingElement b = randomRing(rng, rc.group, rc.coeffs);
      const RingElement c = randomRing(rng, rc.group, rc.coeffs);
      const RingElement zero = RingElement::zero(rc.group, rc.coeffs);
      const RingElement one = RingElement::one(rc.group, rc.coeffs);
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ(a + b, b + a);
      ASSERT_EQ(a + zero, a);
      ASSERT_TRUE((a - a).isZero());
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ((a + b) * c, a * c + b * c);
      ASSERT_EQ(a * one, a);
      ASSERT_EQ(one * a, a);
      if (rc.group.isCommutative()) ASSERT_EQ(a * b, b * a);
      ASSERT_EQ((a * b).conjugate(), b.conjugate() * a.conjugate());
    }
}

TEST(RingProperties, CyclicHomIsMultiplicative) {
  std::mt19937 rng(2);
  const DeckGroup f3 = DeckGroup::free(3);
  for (int i = 0; i < kCases; ++i) {
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 12);
    const GroupHom h = GroupHom::cyclic(f3, {static_cast<std::int64_t>(rng() % 5), static_cast<std::int64_t>(rng() % 5), 1}, m);
    const RingElement a = randomRing(rng, f3, Coefficients::Integers);
    const RingElement b = randomRing(rng, f3, Coefficients::Integers);
    ASSERT_EQ(applyHom(a * b, h), applyHom(a, h) * applyHom(b, h));
    ASSERT_EQ(applyHom(a + b, h), applyHom(a, h) + applyHom(b, h));
  }
}

TEST(RingProperties, CenterHomIsMultiplicative) {
  std::mt19937 rng(3);
  for (int n = 2; n <= 4; ++n) {
    const DeckGroup fn = DeckGroup::free(n);
    const Word w = brunnianWord(n);
    const Word rn = Word::generator(n);
    const GroupHom phi = GroupHom::brunnianCenter(n);
    auto centerElement = [&]() {
      RingElement r(fn, Coefficients::F2);
      for (int t = 0; t < 4; ++t) {
        const Word g = w.pow(static_cast<int>(rng() % 5) - 2) * rn.pow(static_cast<int>(rng() % 5) - 2);
        r.addTerm(DeckElement::fromWord(fn, g), 1);
      }
      return r;
    };
    for (int i = 0; i < 100; ++i) {
      const RingElement a = centerElement();
      const RingElement b = centerElement();
      ASSERT_EQ(applyHom(a * b, phi), applyHom(a, phi) * applyHom(b, phi));
    }
  }
}

TEST(RingProperties, AssociatesUnderMonomialShift) {
  std::mt19937 rng(4);
  const DeckGroup z2 = DeckGroup::freeAbelian(2);
  for (int i = 0; i < kCases; ++i) {
    RingElement a = randomRing(rng, z2, Coefficients::F2);
    if (a.isZero()) a = RingElement::one(z2, Coefficients::F2);
    const DeckElement g = randomElement(rng, z2);
    const RingElement b = a.shifted(g);
    ASSERT_TRUE(areAssociates(a, b));
    ASSERT_EQ(associateNormalForm(a), associateNormalForm(b));
    ASSERT_TRUE(isMonomialUnit(RingElement::monomial(g, Coefficients::F2)));
  }
}

TEST(RingProperties, SpanIsAdditiveOverF2) {
  std::mt19937 rng(5);
  const DeckGroup z = DeckGroup::freeAbelian(1);
  for (int i = 0; i < kCases; ++i) {
    const RingElement a = randomRing(rng, z, Coefficients::F2, 6);
    const RingElement b = randomRing(rng, z, Coefficients::F2, 6);
    if (a.isZero() || b.isZero()) continue;
    ASSERT_EQ(*laurentSpan(a * b), *laurentSpan(a) + *laurentSpan(b));
  }
}

TEST(WordProperties, ReductionAgreesWithStack) {
  std::mt19937 rng(6);
  for (int i = 0; i < 10000; ++i) {
    const auto letters = randomLetters(rng, 3, 20);
    const Word w = toWord(letters);
    const auto ref = oracle::freeReduce(letters);
    ASSERT_EQ(w, toWord(ref));
    ASSERT_EQ(Word::reduce(w.letters()), w);
    int len = 0;
    for (const auto& l : w.letters()) len += l.exp > 0 ? l.exp : -l.exp;
    ASSERT_EQ(len, static_cast<int>(ref.size()));
    ASSERT_TRUE((w * w.inverse()).isIdentity());
    ASSERT_TRUE((w.inverse() * w).isIdentity());
  }
}

TEST(WordProperties, PsiIsHomomorphism) {
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const auto u = randomLetters(rng, n - 1, 12);
    const auto v = randomLetters(rng, n - 1, 12);
    const auto pu = unitriangularRep(toWord(u), n);
    const auto pv = unitriangularRep(toWord(v), n);
    ASSERT_EQ(unitriangularRep(toWord(u) * toWord(v), n), pu * pv);
    const auto ref = oracle::psi(oracle::concat(u, v), n);
    const auto got = pu * pv;
    for (int r = 1; r <= n; ++r)
      for (int c = r + 1; c <= n; ++c) ASSERT_EQ(got.at(r, c), Integer(static_cast<long>(ref[r - 1][c - 1])));
  }
}

TEST(ActionProperties, LinearityAndInverse) {
  std::mt19937 rng(8);
  for (int i = 0; i < kCases; ++i) {
    const Coefficients coeffs = i % 2 ? Coefficients::Integers : Coefficients::F2;
    const auto rc = fixture::makeRandomCover(rng, coeffs);
    const BarbellSpec spec{"b", "L0", "L1", rc.residue(rc.holonomy), 1, coeffs == Coefficients::F2 ? 1 : -1,
                           1 + static_cast<int>(rng() % 2), {}};
    const EquivClass x = fixture::randomClass(rng, rc).first;
    const EquivClass y = fixture::randomClass(rng, rc).first;
    ASSERT_EQ(barbellAction(x + y, spec), barbellAction(x, spec) + barbellAction(y, spec));
    ASSERT_EQ(barbellAction(x.scaled(3), spec), barbellAction(x, spec).scaled(3));
    ASSERT_EQ(barbellAction(barbellAction(x, spec), spec.inverse()), x);
    const DeckElement g = rc.residue(static_cast<long long>(rng() % 12));
    ASSERT_EQ(barbellAction(x.translated(g), spec), barbellAction(x, spec).translated(g));
  }
}

TEST(ActionProperties, PairingIsEquivariant) {
  std::mt19937 rng(9);
  for (int i = 0; i < kCases; ++i) {
    const auto rc = fixture::makeRandomCover(rng, i % 2 ? Coefficients::Integers : Coefficients::F2);
    const EquivClass x = fixture::randomClass(rng, rc).first;
    const DeckElement g = rc.residue(static_cast<long long>(rng() % 12));
    for (int lab = 0; lab < rc.labels; ++lab) {
      const std::string name = fixture::RandomCover::name(lab);
      ASSERT_EQ(equivariantPairing(x.translated(g), name), equivariantPairing(x, name).shifted(g));
    }
  }
}

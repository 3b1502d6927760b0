#include <gtest/gtest.h>

#include "barbell/equivariant.hpp"
#include "barbell/errors.hpp"
#include "barbell/geometries.hpp"
#include "barbell/theorems.hpp"
#include "cover_fixture.hpp"

using namespace barbell;

namespace {

DeckElement tp(const Geometry& g, std::int64_t e) { return DeckElement::generator(g.group(), 1, e); }

// Right-hand side of the displayed two-barbell class, summed mod 2.
EquivClass twoBarbellClass(const Geometry& g, std::int64_t k, std::int64_t l) {
  EquivClass x(g.table);
  auto add = [&](const std::string& lab, std::int64_t e) { x.addTerm(lab, tp(g, e), 1); };
  add("S_v", 0);
  for (std::int64_t h : {-k - 1, -k, k - 1, k}) add("S_h", h);
  for (std::int64_t e : {-k - 1 - l, -k - l, -k - 1 + l, -k + l}) add("S_v", e);
  for (std::int64_t e : {-k - l, -k - l + 1, -k + l, -k + l + 1}) add("S_v", e);
  for (std::int64_t e : {k - 1 - l, k - l, k - 1 + l, k + l}) add("S_v", e);
  for (std::int64_t e : {k - l, k - l + 1, k + l, k + l + 1}) add("S_v", e);
  return x;
}

}  // namespace

TEST(Pairing, TorusTable) {
  const Geometry g = torusComplement();
  EXPECT_EQ(equivariantPairing(g.gen("S_v"), "D_v").str(), "1");
  EXPECT_TRUE(equivariantPairing(g.gen("S_h"), "D_v").isZero());
  const EquivClass x = g.lift("S_v", tp(g, 2)) + g.lift("S_v", tp(g, 3));
  EXPECT_EQ(equivariantPairing(x, "D_v").str(), "t^2 + t^3");
  EXPECT_EQ(g.table->pairing("S_h", "S_v").str(), "1 + t");
  EXPECT_EQ(g.table->pairing("S_v", "S_h").str(), "t^-1 + 1");
}

TEST(Pairing, LabelLookup) {
  const Geometry g = torusComplement();
  EXPECT_THROW(g.gen("S_x"), InvalidArgument);
  EXPECT_THROW(equivariantPairing(g.gen("S_v"), "nope"), InvalidArgument);
}

TEST(Action, SingleBarbellFiveSpheres) {
  const Geometry g = torusComplement();
  const BarbellSpec bh = windingBarbell(g, "beta_h", "S_h", tp(g, 1));
  const EquivClass y = barbellAction(g.gen("S_v"), bh);
  EquivClass expected = g.gen("S_v");
  for (std::int64_t e : {-2, -1, 0, 1}) expected.addTerm("S_h", tp(g, e), 1);
  EXPECT_EQ(y, expected);
  EXPECT_EQ(y.size(), 5u);
}

TEST(Action, BarbellLeavesCuffSpheresAlone) {
  const Geometry g = torusComplement();
  for (int k = 1; k <= 4; ++k) {
    const BarbellSpec bh = windingBarbell(g, "beta_h", "S_h", tp(g, k));
    EXPECT_EQ(barbellAction(g.gen("S_h"), bh), g.gen("S_h"));
    const BarbellSpec bv = windingBarbell(g, "beta_v", "S_v", tp(g, k));
    EXPECT_EQ(actionSequence(g.gen("S_v"), {bv}), g.gen("S_v"));
  }
}

TEST(Action, TwoBarbellClassMatchesDisplayedFormula) {
  const Geometry g = torusComplement();
  for (int k = 1; k <= 6; ++k)
    for (int l = 1; l <= 6; ++l) {
      const BarbellSpec bh = windingBarbell(g, "beta_h", "S_h", tp(g, k));
      const BarbellSpec bv = windingBarbell(g, "beta_v", "S_v", tp(g, l));
      const EquivClass y = actionSequence(g.gen("S_v"), {bh, bv});
      EXPECT_EQ(y, twoBarbellClass(g, k, l)) << k << "," << l;
      // Four of the listed sphere terms appear twice and cancel mod 2; the raw count is sixteen.
      EXPECT_EQ(barbellContributions(barbellAction(g.gen("S_v"), bh), bv).size(), 16u) << k << "," << l;
    }
}

TEST(Action, TwoBarbellIntersectionPolynomial) {
  const Geometry g = torusComplement();
  const BarbellSpec bh = windingBarbell(g, "beta_h", "S_h", tp(g, 1));
  const BarbellSpec bv = windingBarbell(g, "beta_v", "S_v", tp(g, 1));
  const auto f = intersectionPolynomial(actionSequence(g.gen("S_v"), {bh, bv}), {"D_v"});
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].str(), "t^-3 + t^-1 + 1 + t + t^3");
  EXPECT_EQ(intersectionPolynomial(g.gen("S_v"), {"D_v"})[0].str(), "1");
}

TEST(Action, EmptySequenceIsIdentity) {
  const Geometry g = torusComplement();
  const EquivClass x = g.gen("S_v") + g.lift("S_h", tp(g, 3));
  EXPECT_EQ(actionSequence(x, {}), x);
}

TEST(Action, Genus2IterateOverIntegers) {
  const Geometry g = genusComplement(2, Coefficients::Integers);
  for (int k = 0; k <= 5; ++k) {
    const BarbellSpec beta{"beta", "S_h_1", "S_h_2", DeckElement::identity(g.group()), 1, 1, 1, {}};
    const EquivClass y = actionSequence(g.gen("S_v_1"), barbellPower(beta, k));
    EquivClass expected = g.gen("S_v_1");
    expected.addTerm("S_h_2", tp(g, -1), -k);
    expected.addTerm("S_h_2", tp(g, 0), k);
    EXPECT_EQ(y, expected) << "k=" << k;
    const auto f = intersectionPolynomial(y, {"D_h_1", "D_h_2"});
    ASSERT_EQ(f.size(), 2u);
    EXPECT_TRUE(f[0].isZero());
    RingElement want(g.group(), Coefficients::Integers);
    want.addTerm(DeckElement::identity(g.group()), k);
    want.addTerm(tp(g, -1), -k);
    EXPECT_EQ(f[1], want);
  }
}

TEST(Action, InverseUndoesBarbell) {
  const Geometry g = genusComplement(2, Coefficients::Integers);
  const BarbellSpec beta{"beta", "S_h_1", "S_h_2", tp(g, 2), 1, -1, 1, {}};
  const EquivClass x = g.gen("S_v_1") + g.lift("S_v_2", tp(g, -1)).scaled(3);
  EXPECT_EQ(barbellAction(barbellAction(x, beta), beta.inverse()), x);
  EXPECT_EQ(actionSequence(x, barbellPower(beta, -3)), actionSequence(x, {beta.inverse(), beta.inverse(), beta.inverse()}));
}

TEST(Action, RejectsBadSpecs) {
  const Geometry g = torusComplement();
  BarbellSpec b = windingBarbell(g, "b", "S_h", tp(g, 1));
  b.cuff2 = "S_v";  // S_h and S_v intersect
  EXPECT_THROW(barbellAction(g.gen("S_v"), b), InvalidArgument);
  BarbellSpec d = windingBarbell(g, "b", "S_h", tp(g, 1));
  d.cuff1 = "D_v";
  EXPECT_THROW(barbellAction(g.gen("S_v"), d), InvalidArgument);
  BarbellSpec s = windingBarbell(g, "b", "S_h", tp(g, 1));
  s.sign1 = 2;
  EXPECT_THROW(barbellAction(g.gen("S_v"), s), InvalidArgument);
  EXPECT_THROW(windingBarbell(g, "b", "S_h", DeckElement::fromResidue(DeckGroup::cyclic(3), 1)), InvalidArgument);
}

TEST(Classes, BranchedCoverPairings) {
  const std::int64_t m = 205;
  const int k = 1;
  const Geometry g = branchedCover(m);
  const DeckElement rk = DeckElement::generator(g.group(), 1, k);
  const EquivClass x = g.lift("S", rk) + g.lift("S'", invert(rk));
  EXPECT_EQ(pairClasses(x, g.lift("D", rk)), 1);
  EXPECT_EQ(pairClasses(x, g.gen("D")), 0);
  EXPECT_EQ(pairClasses(g.gen("mu"), g.gen("D")), 1);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      EXPECT_EQ(pairClasses(g.lift("S", DeckElement::fromResidue(g.group(), i)),
                            g.lift("S", DeckElement::fromResidue(g.group(), j))),
                0);
}

TEST(Classes, SummandMembership) {
  const Geometry g = cyclicCover(knotCircleComplement(), 110, {1});
  const DeckElement e = DeckElement::identity(g.group());
  const DeckElement rk = DeckElement::generator(g.group(), 1, 3);
  AllowedSet allowed;
  for (const std::string lab : {"D", "S", "S'"}) allowed.lifts.insert({lab, e});
  const EquivClass x = g.gen("D") + g.lift("S", rk) - g.lift("S'", invert(rk));
  EXPECT_FALSE(summandMembership(x, allowed, {}));
  EXPECT_TRUE(summandMembership(g.gen("D"), allowed, {}));
  AllowedSet labels;
  labels.labels = {"D", "S", "S'"};
  EXPECT_TRUE(summandMembership(x, labels, {}));
}

TEST(Classes, KernelRefutationByWitnesses) {
  const Geometry g = branchedCover(205);
  const DeckElement rk = DeckElement::generator(g.group(), 1, 2);
  const EquivClass x = g.lift("S", rk) + g.lift("S'", invert(rk));
  EXPECT_FALSE(summandMembership(x, {}, g.kernel));
  EXPECT_TRUE(refutedByPairings(x, g.kernel, {g.lift("D", rk), g.gen("D")}));
  EXPECT_TRUE(summandMembership(g.gen("mu").scaled(3), {}, g.kernel));
  EXPECT_FALSE(refutedByPairings(g.gen("mu"), g.kernel, {g.lift("D", rk), g.gen("D")}));
}

TEST(Classes, RendersSortedTerms) {
  const Geometry g = torusComplement();
  const EquivClass x = g.lift("S_h", tp(g, -2)) + g.gen("S_v") + g.lift("S_h", tp(g, -1));
  EXPECT_EQ(x.str(), "t^-2 S_h + t^-1 S_h + S_v");
}

TEST(DenseOracle, AgreesOnRandomCyclicCovers) {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 150; ++trial) {
    const Coefficients coeffs = trial % 2 ? Coefficients::Integers : Coefficients::F2;
    const auto rc = fixture::makeRandomCover(rng, coeffs);
    const int s1 = coeffs == Coefficients::F2 || rng() % 2 ? 1 : -1;
    const int s2 = coeffs == Coefficients::F2 || rng() % 2 ? 1 : -1;
    const int iterate = 1 + static_cast<int>(rng() % 3);
    const BarbellSpec spec{"b", "L0", "L1", rc.residue(rc.holonomy), s1, s2, iterate, {}};
    auto [x, v] = fixture::randomClass(rng, rc);
    std::vector<long long> want = v;
    for (int i = 0; i < iterate; ++i) want = rc.dense.barbellPerLift(want, 0, 1, rc.holonomy, s1, s2);
    EXPECT_EQ(fixture::toDense(barbellAction(x, spec), rc), want) << "trial " << trial;
    // Pairing polynomial against every label.
    for (int lab = 0; lab < rc.labels; ++lab) {
      const RingElement p = equivariantPairing(x, fixture::RandomCover::name(lab));
      for (int r = 0; r < rc.m; ++r) {
        long long c = rc.dense.pair(v, rc.dense.index(lab, r));
        if (rc.dense.mod2) c = oracle::modPos(c, 2);
        EXPECT_EQ(p.coefficient(rc.residue(r)), Integer(static_cast<long>(c))) << "trial " << trial;
      }
    }
  }
}

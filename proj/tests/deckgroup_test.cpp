#include <gtest/gtest.h>

#include "barbell/deckgroup.hpp"
#include "barbell/errors.hpp"
#include "oracles.hpp"

using namespace barbell;

namespace {

Word fromLetters(const std::vector<int>& xs) {
  std::vector<Letter> ls;
  for (int x : xs) ls.push_back({x > 0 ? x : -x, x > 0 ? 1 : -1});
  return Word::reduce(ls);
}

}  // namespace

TEST(Word, CancelsInversePair) {
  EXPECT_TRUE(Word::reduce({{1, 1}, {1, -1}}).isIdentity());
}

TEST(Word, MergesExponents) {
  const Word w = Word::reduce({{1, 1}, {2, 1}, {2, 1}});
  ASSERT_EQ(w.letters().size(), 2u);
  EXPECT_EQ(w.letters()[0], (Letter{1, 1}));
  EXPECT_EQ(w.letters()[1], (Letter{2, 2}));
}

TEST(Word, CommutatorIsFourLetters) {
  const Word c = commutator(Word::generator(1), Word::generator(2));
  EXPECT_EQ(c.letters().size(), 4u);
  EXPECT_EQ(c.str(), "x1^-1 x2^-1 x1 x2");
}

TEST(Word, ReduceIsIdempotent) {
  const Word w = Word::reduce({{1, 2}, {2, -1}, {2, 1}, {1, -1}, {3, 1}});
  EXPECT_EQ(Word::reduce(w.letters()), w);
  EXPECT_EQ(w.str(), "x1 x3");
}

TEST(Word, RangeCheck) {
  EXPECT_THROW(Word::reduce({{3, 1}}, 2), InvalidArgument);
  EXPECT_THROW(Word::parse("x4", 3), InvalidArgument);
  EXPECT_THROW(Word::parse("y1", 3), InvalidArgument);
}

TEST(Word, ParseRoundTrip) {
  const Word w = Word::parse("x1^-1 x2 x1 x1", 2);
  EXPECT_EQ(w.str(), "x1^-1 x2 x1^2");
  EXPECT_EQ(Word::parse(w.str(), 2), w);
  EXPECT_TRUE(Word::parse("1").isIdentity());
}

TEST(Word, PowAndInverse) {
  const Word w = Word::parse("x1 x2");
  EXPECT_EQ(w.pow(2).str(), "x1 x2 x1 x2");
  EXPECT_EQ(w.pow(-1), w.inverse());
  EXPECT_TRUE((w * w.inverse()).isIdentity());
  EXPECT_TRUE(w.pow(0).isIdentity());
}

TEST(BrunnianWord, SmallCases) {
  EXPECT_EQ(brunnianWord(2).str(), "x1");
  EXPECT_EQ(brunnianWord(3).str(), "x1^-1 x2^-1 x1 x2");
  EXPECT_THROW(brunnianWord(1), InvalidArgument);
}

TEST(BrunnianWord, MatchesIndependentReduction) {
  for (int n = 2; n <= 8; ++n) {
    const auto letters = oracle::brunnianLetters(n);
    EXPECT_EQ(brunnianWord(n), fromLetters(letters)) << "n=" << n;
    EXPECT_EQ(brunnianWord(n).maxGenerator(), n - 1);
  }
  EXPECT_EQ(brunnianWord(4).length(), 10);
}

TEST(DeckElement, FreeGroupLaw) {
  const DeckGroup f2 = DeckGroup::free(2);
  const DeckElement a = DeckElement::generator(f2, 1);
  EXPECT_TRUE(multiply(a, invert(a)).isIdentity());
  const DeckElement c = commutator(a, DeckElement::generator(f2, 2));
  EXPECT_EQ(c.word(), brunnianWord(3));
}

TEST(DeckElement, CyclicLaw) {
  const DeckGroup z5 = DeckGroup::cyclic(5);
  EXPECT_EQ(multiply(DeckElement::fromResidue(z5, 3), DeckElement::fromResidue(z5, 4)).residue(), 2);
  EXPECT_EQ(DeckElement::fromResidue(z5, -1).residue(), 4);
  EXPECT_EQ(invert(DeckElement::fromResidue(z5, 2)).residue(), 3);
  EXPECT_EQ(power(DeckElement::fromResidue(z5, 2), 7).residue(), 4);
}

TEST(DeckElement, FreeAbelianLaw) {
  const DeckGroup z2 = DeckGroup::freeAbelian(2);
  const DeckElement a = DeckElement::fromExponents(z2, {3, -2});
  EXPECT_EQ(a.str(), "s^3 t^-2");
  EXPECT_EQ(multiply(a, invert(a)), DeckElement::identity(z2));
  EXPECT_EQ(DeckElement::parse(z2, "s^3 t^-2"), a);
  const DeckGroup z1 = DeckGroup::freeAbelian(1);
  EXPECT_EQ(DeckElement::generator(z1, 1, -3).str(), "t^-3");
  EXPECT_EQ(DeckElement::identity(z1).str(), "1");
}

TEST(DeckElement, GroupMismatchThrows) {
  EXPECT_THROW(multiply(DeckElement::identity(DeckGroup::cyclic(3)), DeckElement::identity(DeckGroup::cyclic(4))),
               InvalidArgument);
  EXPECT_THROW(DeckElement::generator(DeckGroup::free(2), 3), InvalidArgument);
  EXPECT_THROW(DeckGroup::cyclic(0), InvalidArgument);
}

TEST(DeckElement, OrderIsNumericForExponents) {
  const DeckGroup z = DeckGroup::freeAbelian(1);
  EXPECT_LT(DeckElement::generator(z, 1, -3), DeckElement::generator(z, 1, -1));
  EXPECT_LT(DeckElement::generator(z, 1, -1), DeckElement::identity(z));
  EXPECT_LT(DeckElement::identity(z), DeckElement::generator(z, 1, 2));
}

TEST(UniTri, ElementaryImages) {
  UniTriMatrix e12(3);
  e12.set(1, 2, 1);
  EXPECT_EQ(unitriangularRep(Word::generator(1), 3), e12);
  EXPECT_TRUE(unitriangularRep(Word(), 3).isIdentity());
  UniTriMatrix e13(3);
  e13.set(1, 3, 1);
  EXPECT_EQ(unitriangularRep(brunnianWord(3), 3), e13);
  EXPECT_THROW(unitriangularRep(Word::generator(3), 3), InvalidArgument);
}

TEST(UniTri, BrunnianWordIsCentralForAllSizes) {
  for (int n = 2; n <= 8; ++n) {
    const auto m = unitriangularRep(brunnianWord(n), n);
    const auto ref = oracle::psi(oracle::brunnianLetters(n), n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) EXPECT_EQ(m.at(i, j), Integer(static_cast<long>(ref[i - 1][j - 1]))) << n << " " << i << "," << j;
    UniTriMatrix central(n);
    central.set(1, n, 1);
    EXPECT_EQ(m, central) << "n=" << n;
    EXPECT_TRUE(m.isCentral());
  }
}

TEST(UniTri, InverseAndPow) {
  const auto m = unitriangularRep(Word::parse("x1 x2^2 x1^-1"), 3);
  EXPECT_TRUE((m * m.inverse()).isIdentity());
  EXPECT_EQ(m.pow(3), m * m * m);
  EXPECT_EQ(m.pow(-2), m.inverse() * m.inverse());
}

TEST(Nilpotent, ImagesOfSpecialWords) {
  const int n = 4;
  const Word w = brunnianWord(n);
  const Word rn = Word::generator(n);
  auto zn = nilpotentTimesZ(rn, n);
  EXPECT_TRUE(zn.matrix.isIdentity());
  EXPECT_EQ(zn.zExponent, 1);
  auto zw = nilpotentTimesZ(w, n);
  UniTriMatrix central(n);
  central.set(1, n, 1);
  EXPECT_EQ(zw.matrix, central);
  EXPECT_EQ(zw.zExponent, 0);
  auto conj = nilpotentTimesZ(w * rn * w.inverse(), n);
  EXPECT_TRUE(conj.matrix.isIdentity());
  EXPECT_EQ(conj.zExponent, 1);
}

TEST(Nilpotent, CenterIsFreeAbelianOfRankTwo) {
  const int n = 3;
  const Word w = brunnianWord(n);
  const Word rn = Word::generator(n);
  for (int a = -20; a <= 20; ++a)
    for (int b = -20; b <= 20; ++b) {
      const auto img = nilpotentTimesZ(w.pow(a) * rn.pow(b), n);
      const bool trivial = img.matrix.isIdentity() && img.zExponent == 0;
      EXPECT_EQ(trivial, a == 0 && b == 0) << a << "," << b;
    }
}

TEST(CyclicProject, Examples) {
  EXPECT_EQ(cyclicProject(Word::generator(1, 3), {1}, 5).residue(), 3);
  EXPECT_EQ(cyclicProject(brunnianWord(3), {2, 7, 1}, 9).residue(), 0);
  EXPECT_EQ(cyclicProject(brunnianWord(2), {0, 1}, 4).residue(), 0);
  EXPECT_EQ(cyclicProject(Word::parse("x1 x2 x1"), {1, 0}, 2).residue(), 0);
}

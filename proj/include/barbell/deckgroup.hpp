#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace barbell {

using Integer = mpz_class;

/// One letter rho_gen^exp of a free group word. Generators are 1-based.
struct Letter {
  int gen = 1;
  std::int64_t exp = 1;

  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

/// Freely reduced word in a free group. The empty word is the identity.
class Word {
 public:
  Word() = default;

  // Reduces an arbitrary letter sequence. rank == 0 skips the range check.
  static Word reduce(const std::vector<Letter>& letters, int rank = 0);
  static Word generator(int gen, std::int64_t exp = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool isIdentity() const { return letters_.empty(); }
  // Total number of letters counted with multiplicity.
  std::int64_t length() const;
  int maxGenerator() const;
  std::int64_t exponentSum(int gen) const;

  Word operator*(const Word& other) const;
  Word inverse() const;
  Word pow(std::int64_t n) const;

  // "x1^-1 x2 x1"; the identity renders as "1".
  std::string str() const;
  static Word parse(const std::string& text, int rank = 0);

  bool operator==(const Word&) const = default;
  // Lexicographic on (gen, exp) letters; the identity sorts first.
  bool operator<(const Word& other) const { return letters_ < other.letters_; }

 private:
  std::vector<Letter> letters_;
};

// [a,b] = a^-1 b^-1 a b. Every commutator in the library goes through here.
Word commutator(const Word& a, const Word& b);

/// The word w_{n-1} in F_n with w_1 = rho_1 and w_{m+1} = [w_m, rho_{m+1}].
Word brunnianWord(int n);

class DeckGroup {
 public:
  enum class Kind { Free, FreeAbelian, Cyclic };

  DeckGroup() = default;
  static DeckGroup free(int rank);
  static DeckGroup freeAbelian(int rank);
  static DeckGroup cyclic(std::int64_t modulus);
  static DeckGroup trivial() { return cyclic(1); }

  Kind kind() const { return kind_; }
  int rank() const;
  std::int64_t modulus() const;
  // Number of generators rho_1..rho_g.
  int generatorCount() const;
  bool isCommutative() const { return kind_ != Kind::Free; }

  std::string str() const;

  bool operator==(const DeckGroup&) const = default;

 private:
  DeckGroup(Kind kind, std::int64_t param) : kind_(kind), param_(param) {}
  Kind kind_ = Kind::Cyclic;
  std::int64_t param_ = 1;
};

class DeckElement {
 public:
  using Value = std::variant<Word, std::vector<Integer>, std::int64_t>;

  // Identity of the trivial group.
  DeckElement() : value_(std::int64_t{0}) {}

  static DeckElement identity(const DeckGroup& group);
  // rho_gen raised to exp.
  static DeckElement generator(const DeckGroup& group, int gen, std::int64_t exp = 1);
  static DeckElement fromWord(const DeckGroup& group, const Word& word);
  static DeckElement fromExponents(const DeckGroup& group, std::vector<Integer> exps);
  static DeckElement fromResidue(const DeckGroup& group, std::int64_t residue);

  const DeckGroup& group() const { return group_; }
  const Word& word() const;
  const std::vector<Integer>& exponents() const;
  std::int64_t residue() const;
  bool isIdentity() const;

  // Rendering used inside polynomials: t^k, s^a t^b, x1^-1 x2.
  std::string str() const;
  static DeckElement parse(const DeckGroup& group, const std::string& text);

  bool operator==(const DeckElement& other) const;
  bool operator<(const DeckElement& other) const;

 private:
  DeckElement(DeckGroup group, Value value) : group_(group), value_(std::move(value)) {}
  DeckGroup group_ = DeckGroup::trivial();
  Value value_;
};

DeckElement multiply(const DeckElement& a, const DeckElement& b);
DeckElement invert(const DeckElement& a);
DeckElement power(const DeckElement& a, std::int64_t n);
DeckElement commutator(const DeckElement& a, const DeckElement& b);

/// Unipotent upper triangular integer matrix.
class UniTriMatrix {
 public:
  explicit UniTriMatrix(int n);

  int size() const { return n_; }
  const Integer& at(int i, int j) const { return entries_[index(i, j)]; }
  // 1-based (i, j) with i < j.
  void set(int i, int j, const Integer& value);
  bool isIdentity() const;
  // True if the only nonzero off-diagonal entry is possibly (1, n).
  bool isCentral() const;

  UniTriMatrix operator*(const UniTriMatrix& other) const;
  UniTriMatrix inverse() const;
  UniTriMatrix pow(std::int64_t e) const;

  // Right multiplication by I + e E_{g,g+1}.
  void applyElementary(int g, const Integer& e);

  bool operator==(const UniTriMatrix&) const = default;
  std::string str() const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>((i - 1) * n_ + (j - 1)); }
  int n_;
  std::vector<Integer> entries_;
};

/// psi: F_{n-1} -> U_n, rho_i -> I + E_{i,i+1}.
UniTriMatrix unitriangularRep(const Word& word, int n);

struct NilpotentImage {
  UniTriMatrix matrix;
  Integer zExponent;
};

/// phi: F_n -> F_{n-1} x Z -> U_n x Z.
NilpotentImage nilpotentTimesZ(const Word& word, int n);

/// Weighted exponent sum mod m.
DeckElement cyclicProject(const Word& word, const std::vector<std::int64_t>& weights, std::int64_t m);

}  // namespace barbell

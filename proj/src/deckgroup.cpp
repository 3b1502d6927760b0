#include "barbell/deckgroup.hpp"

#include <sstream>
#include <tuple>

#include "barbell/errors.hpp"

namespace barbell {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t parseInt(const std::string& text, const std::string& context) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("bad integer '" + text + "' in " + context);
  }
  if (used != text.size()) throw InvalidArgument("bad integer '" + text + "' in " + context);
  return value;
}

// Splits "name^exp" into name and exponent (default 1).
std::pair<std::string, std::int64_t> splitPower(const std::string& token) {
  auto caret = token.find('^');
  if (caret == std::string::npos) return {token, 1};
  return {token.substr(0, caret), parseInt(token.substr(caret + 1), token)};
}

std::vector<std::string> tokens(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

void appendPower(std::ostringstream& out, const std::string& name, const Integer& e, bool& first) {
  if (e == 0) return;
  if (!first) out << ' ';
  first = false;
  out << name;
  if (e != 1) out << '^' << e.get_str();
}

}  // namespace

// ---------------------------------------------------------------- Word

Word Word::reduce(const std::vector<Letter>& letters, int rank) {
  Word w;
  auto& out = w.letters_;
  for (const Letter& l : letters) {
    if (l.gen < 1 || (rank > 0 && l.gen > rank)) {
      throw InvalidArgument("generator index " + std::to_string(l.gen) + " out of range for rank " +
                            std::to_string(rank));
    }
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().gen == l.gen) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return w;
}

Word Word::generator(int gen, std::int64_t exp) { return reduce({{gen, exp}}); }

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const auto& l : letters_) n += l.exp < 0 ? -l.exp : l.exp;
  return n;
}

int Word::maxGenerator() const {
  int g = 0;
  for (const auto& l : letters_) g = std::max(g, l.gen);
  return g;
}

std::int64_t Word::exponentSum(int gen) const {
  std::int64_t s = 0;
  for (const auto& l : letters_)
    if (l.gen == gen) s += l.exp;
  return s;
}

Word Word::operator*(const Word& other) const {
  std::vector<Letter> all = letters_;
  all.insert(all.end(), other.letters_.begin(), other.letters_.end());
  return reduce(all);
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->gen, -it->exp});
  return w;
}

Word Word::pow(std::int64_t n) const {
  Word base = n < 0 ? inverse() : *this;
  if (n < 0) n = -n;
  Word result;
  for (std::int64_t i = 0; i < n; ++i) result = result * base;
  return result;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& l : letters_) appendPower(out, "x" + std::to_string(l.gen), Integer(static_cast<long>(l.exp)), first);
  return out.str();
}

Word Word::parse(const std::string& text, int rank) {
  std::vector<Letter> letters;
  for (const auto& tok : tokens(text)) {
    if (tok == "1") continue;
    auto [name, exp] = splitPower(tok);
    if (name.size() < 2 || name[0] != 'x') throw InvalidArgument("bad word token '" + tok + "'");
    letters.push_back({static_cast<int>(parseInt(name.substr(1), tok)), exp});
  }
  return reduce(letters, rank);
}

Word commutator(const Word& a, const Word& b) { return a.inverse() * b.inverse() * a * b; }

Word brunnianWord(int n) {
  if (n < 2) throw InvalidArgument("brunnianWord needs n >= 2");
  Word w = Word::generator(1);
  for (int m = 1; m < n - 1; ++m) w = commutator(w, Word::generator(m + 1));
  return w;
}

// ----------------------------------------------------------- DeckGroup

DeckGroup DeckGroup::free(int rank) {
  if (rank < 1) throw InvalidArgument("free group rank must be >= 1");
  return DeckGroup(Kind::Free, rank);
}

DeckGroup DeckGroup::freeAbelian(int rank) {
  if (rank < 1) throw InvalidArgument("free abelian rank must be >= 1");
  return DeckGroup(Kind::FreeAbelian, rank);
}

DeckGroup DeckGroup::cyclic(std::int64_t modulus) {
  if (modulus < 1) throw InvalidArgument("cyclic modulus must be >= 1");
  return DeckGroup(Kind::Cyclic, modulus);
}

int DeckGroup::rank() const {
  if (kind_ == Kind::Cyclic) throw InvalidArgument("cyclic group has no rank");
  return static_cast<int>(param_);
}

std::int64_t DeckGroup::modulus() const {
  if (kind_ != Kind::Cyclic) throw InvalidArgument("only cyclic groups have a modulus");
  return param_;
}

int DeckGroup::generatorCount() const { return kind_ == Kind::Cyclic ? 1 : static_cast<int>(param_); }

std::string DeckGroup::str() const {
  switch (kind_) {
    case Kind::Free:
      return "F" + std::to_string(param_);
    case Kind::FreeAbelian:
      return param_ == 1 ? "Z" : "Z^" + std::to_string(param_);
    case Kind::Cyclic:
      return "Z/" + std::to_string(param_);
  }
  return "?";
}

// ---------------------------------------------------------- DeckElement

DeckElement DeckElement::identity(const DeckGroup& group) {
  switch (group.kind()) {
    case DeckGroup::Kind::Free:
      return DeckElement(group, Word());
    case DeckGroup::Kind::FreeAbelian:
      return DeckElement(group, std::vector<Integer>(static_cast<std::size_t>(group.rank())));
    case DeckGroup::Kind::Cyclic:
      return DeckElement(group, std::int64_t{0});
  }
  throw InvalidArgument("unknown group kind");
}

DeckElement DeckElement::generator(const DeckGroup& group, int gen, std::int64_t exp) {
  if (gen < 1 || gen > group.generatorCount())
    throw InvalidArgument("generator " + std::to_string(gen) + " out of range for " + group.str());
  switch (group.kind()) {
    case DeckGroup::Kind::Free:
      return DeckElement(group, Word::generator(gen, exp));
    case DeckGroup::Kind::FreeAbelian: {
      std::vector<Integer> e(static_cast<std::size_t>(group.rank()));
      e[static_cast<std::size_t>(gen - 1)] = static_cast<long>(exp);
      return DeckElement(group, std::move(e));
    }
    case DeckGroup::Kind::Cyclic:
      return DeckElement(group, mod(exp, group.modulus()));
  }
  throw InvalidArgument("unknown group kind");
}

DeckElement DeckElement::fromWord(const DeckGroup& group, const Word& word) {
  if (word.maxGenerator() > group.generatorCount())
    throw InvalidArgument("word " + word.str() + " uses generators outside " + group.str());
  switch (group.kind()) {
    case DeckGroup::Kind::Free:
      return DeckElement(group, word);
    case DeckGroup::Kind::FreeAbelian: {
      std::vector<Integer> e(static_cast<std::size_t>(group.rank()));
      for (const auto& l : word.letters()) e[static_cast<std::size_t>(l.gen - 1)] += static_cast<long>(l.exp);
      return DeckElement(group, std::move(e));
    }
    case DeckGroup::Kind::Cyclic:
      return fromResidue(group, word.exponentSum(1) % group.modulus());
  }
  throw InvalidArgument("unknown group kind");
}

DeckElement DeckElement::fromExponents(const DeckGroup& group, std::vector<Integer> exps) {
  if (group.kind() != DeckGroup::Kind::FreeAbelian || exps.size() != static_cast<std::size_t>(group.rank()))
    throw InvalidArgument("exponent vector does not match " + group.str());
  return DeckElement(group, std::move(exps));
}

DeckElement DeckElement::fromResidue(const DeckGroup& group, std::int64_t residue) {
  if (group.kind() != DeckGroup::Kind::Cyclic) throw InvalidArgument("residue given for " + group.str());
  return DeckElement(group, mod(residue, group.modulus()));
}

const Word& DeckElement::word() const {
  if (!std::holds_alternative<Word>(value_)) throw InvalidArgument("not a free group element");
  return std::get<Word>(value_);
}

const std::vector<Integer>& DeckElement::exponents() const {
  if (!std::holds_alternative<std::vector<Integer>>(value_)) throw InvalidArgument("not a free abelian element");
  return std::get<std::vector<Integer>>(value_);
}

std::int64_t DeckElement::residue() const {
  if (!std::holds_alternative<std::int64_t>(value_)) throw InvalidArgument("not a cyclic group element");
  return std::get<std::int64_t>(value_);
}

bool DeckElement::isIdentity() const {
  switch (group_.kind()) {
    case DeckGroup::Kind::Free:
      return word().isIdentity();
    case DeckGroup::Kind::FreeAbelian:
      for (const auto& e : exponents())
        if (e != 0) return false;
      return true;
    case DeckGroup::Kind::Cyclic:
      return residue() == 0;
  }
  return false;
}

std::string DeckElement::str() const {
  if (isIdentity()) return "1";
  std::ostringstream out;
  bool first = true;
  switch (group_.kind()) {
    case DeckGroup::Kind::Free:
      return word().str();
    case DeckGroup::Kind::FreeAbelian: {
      const auto& e = exponents();
      if (e.size() == 1) {
        appendPower(out, "t", e[0], first);
      } else if (e.size() == 2) {
        appendPower(out, "s", e[0], first);
        appendPower(out, "t", e[1], first);
      } else {
        for (std::size_t i = 0; i < e.size(); ++i) appendPower(out, "t" + std::to_string(i + 1), e[i], first);
      }
      return out.str();
    }
    case DeckGroup::Kind::Cyclic:
      appendPower(out, "t", Integer(static_cast<long>(residue())), first);
      return out.str();
  }
  return "?";
}

DeckElement DeckElement::parse(const DeckGroup& group, const std::string& text) {
  if (group.kind() == DeckGroup::Kind::Free) return fromWord(group, Word::parse(text, group.rank()));
  std::vector<Integer> exps(static_cast<std::size_t>(group.generatorCount()));
  for (const auto& tok : tokens(text)) {
    if (tok == "1") continue;
    auto [name, exp] = splitPower(tok);
    std::size_t slot = 0;
    const int r = group.generatorCount();
    if (name == "t" && r == 1) {
      slot = 0;
    } else if (r == 2 && (name == "s" || name == "t")) {
      slot = name == "s" ? 0 : 1;
    } else if (name.size() > 1 && name[0] == 't') {
      auto i = parseInt(name.substr(1), tok);
      if (i < 1 || i > r) throw InvalidArgument("bad variable '" + name + "' for " + group.str());
      slot = static_cast<std::size_t>(i - 1);
    } else {
      throw InvalidArgument("bad monomial token '" + tok + "' for " + group.str());
    }
    exps[slot] += static_cast<long>(exp);
  }
  if (group.kind() == DeckGroup::Kind::Cyclic) return fromResidue(group, exps[0].get_si() % group.modulus());
  return fromExponents(group, std::move(exps));
}

bool DeckElement::operator==(const DeckElement& other) const {
  return group_ == other.group_ && value_ == other.value_;
}

bool DeckElement::operator<(const DeckElement& other) const {
  if (!(group_ == other.group_)) {
    auto key = [](const DeckGroup& g) {
      return std::make_tuple(g.kind(), g.kind() == DeckGroup::Kind::Cyclic ? g.modulus() : g.rank());
    };
    return key(group_) < key(other.group_);
  }
  return value_ < other.value_;
}

namespace {

void requireSameGroup(const DeckElement& a, const DeckElement& b) {
  if (!(a.group() == b.group()))
    throw InvalidArgument("deck group mismatch: " + a.group().str() + " vs " + b.group().str());
}

}  // namespace

DeckElement multiply(const DeckElement& a, const DeckElement& b) {
  requireSameGroup(a, b);
  const DeckGroup& g = a.group();
  switch (g.kind()) {
    case DeckGroup::Kind::Free:
      return DeckElement::fromWord(g, a.word() * b.word());
    case DeckGroup::Kind::FreeAbelian: {
      auto e = a.exponents();
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exponents()[i];
      return DeckElement::fromExponents(g, std::move(e));
    }
    case DeckGroup::Kind::Cyclic:
      return DeckElement::fromResidue(g, a.residue() + b.residue());
  }
  throw InvalidArgument("unknown group kind");
}

DeckElement invert(const DeckElement& a) {
  const DeckGroup& g = a.group();
  switch (g.kind()) {
    case DeckGroup::Kind::Free:
      return DeckElement::fromWord(g, a.word().inverse());
    case DeckGroup::Kind::FreeAbelian: {
      auto e = a.exponents();
      for (auto& x : e) x = -x;
      return DeckElement::fromExponents(g, std::move(e));
    }
    case DeckGroup::Kind::Cyclic:
      return DeckElement::fromResidue(g, -a.residue());
  }
  throw InvalidArgument("unknown group kind");
}

DeckElement power(const DeckElement& a, std::int64_t n) {
  const DeckGroup& g = a.group();
  switch (g.kind()) {
    case DeckGroup::Kind::Free:
      return DeckElement::fromWord(g, a.word().pow(n));
    case DeckGroup::Kind::FreeAbelian: {
      auto e = a.exponents();
      for (auto& x : e) x *= static_cast<long>(n);
      return DeckElement::fromExponents(g, std::move(e));
    }
    case DeckGroup::Kind::Cyclic: {
      const std::int64_t m = g.modulus();
      return DeckElement::fromResidue(g, static_cast<std::int64_t>((static_cast<__int128>(a.residue()) * mod(n, m)) % m));
    }
  }
  throw InvalidArgument("unknown group kind");
}

DeckElement commutator(const DeckElement& a, const DeckElement& b) {
  return multiply(multiply(invert(a), invert(b)), multiply(a, b));
}

// --------------------------------------------------------- UniTriMatrix

UniTriMatrix::UniTriMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
  if (n < 1) throw InvalidArgument("matrix size must be >= 1");
  for (int i = 1; i <= n; ++i) entries_[index(i, i)] = 1;
}

void UniTriMatrix::set(int i, int j, const Integer& value) {
  if (i < 1 || j > n_ || i >= j) throw InvalidArgument("only strictly upper entries can be set");
  entries_[index(i, j)] = value;
}

bool UniTriMatrix::isIdentity() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (at(i, j) != 0) return false;
  return true;
}

bool UniTriMatrix::isCentral() const {
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (!(i == 1 && j == n_) && at(i, j) != 0) return false;
  return true;
}

UniTriMatrix UniTriMatrix::operator*(const UniTriMatrix& other) const {
  if (n_ != other.n_) throw InvalidArgument("matrix size mismatch");
  UniTriMatrix r(n_);
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      Integer s = 0;
      for (int k = i; k <= j; ++k) s += at(i, k) * other.at(k, j);
      r.entries_[index(i, j)] = s;
    }
  }
  return r;
}

UniTriMatrix UniTriMatrix::inverse() const {
  // Solve A X = I column by column, back substitution on a unit triangle.
  UniTriMatrix x(n_);
  for (int j = 1; j <= n_; ++j) {
    for (int i = j - 1; i >= 1; --i) {
      Integer s = 0;
      for (int k = i + 1; k <= j; ++k) s += at(i, k) * x.at(k, j);
      x.entries_[index(i, j)] = -s;
    }
  }
  return x;
}

UniTriMatrix UniTriMatrix::pow(std::int64_t e) const {
  UniTriMatrix base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  UniTriMatrix result(n_);
  while (n > 0) {
    if (n & 1U) result = result * base;
    base = base * base;
    n >>= 1U;
  }
  return result;
}

void UniTriMatrix::applyElementary(int g, const Integer& e) {
  if (g < 1 || g >= n_) throw InvalidArgument("elementary index out of range");
  // Column g+1 += e * column g.
  for (int i = 1; i <= g; ++i) entries_[index(i, g + 1)] += e * at(i, g);
}

std::string UniTriMatrix::str() const {
  std::ostringstream out;
  out << '[';
  for (int i = 1; i <= n_; ++i) {
    if (i > 1) out << "; ";
    for (int j = 1; j <= n_; ++j) {
      if (j > 1) out << ' ';
      out << at(i, j).get_str();
    }
  }
  out << ']';
  return out.str();
}

UniTriMatrix unitriangularRep(const Word& word, int n) {
  if (n < 1) throw InvalidArgument("representation size must be >= 1");
  UniTriMatrix m(n);
  for (const auto& l : word.letters()) {
    if (l.gen >= n) throw InvalidArgument("psi is defined on F_{n-1}; got generator x" + std::to_string(l.gen));
    m.applyElementary(l.gen, Integer(static_cast<long>(l.exp)));
  }
  return m;
}

NilpotentImage nilpotentTimesZ(const Word& word, int n) {
  if (n < 1) throw InvalidArgument("rank must be >= 1");
  if (word.maxGenerator() > n) throw InvalidArgument("word " + word.str() + " is not in F_" + std::to_string(n));
  std::vector<Letter> rest;
  Integer z = 0;
  for (const auto& l : word.letters()) {
    if (l.gen == n)
      z += static_cast<long>(l.exp);
    else
      rest.push_back(l);
  }
  return {unitriangularRep(Word::reduce(rest), n), z};
}

DeckElement cyclicProject(const Word& word, const std::vector<std::int64_t>& weights, std::int64_t m) {
  const DeckGroup g = DeckGroup::cyclic(m);
  __int128 s = 0;
  for (const auto& l : word.letters()) {
    const auto idx = static_cast<std::size_t>(l.gen - 1);
    const std::int64_t w = idx < weights.size() ? weights[idx] : 0;
    s = (s + static_cast<__int128>(w) * l.exp) % m;
  }
  return DeckElement::fromResidue(g, static_cast<std::int64_t>(s));
}

}  // namespace barbell

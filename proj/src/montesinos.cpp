#include "barbell/montesinos.hpp"

#include <algorithm>

#include "barbell/errors.hpp"

namespace barbell {

namespace {

Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

}  // namespace

GluingMatrix::GluingMatrix(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (det() != 1) throw InvalidArgument("gluing matrix must have determinant 1, got " + det().get_str());
}

std::string GluingMatrix::str() const {
  return "(" + a_.get_str() + " " + b_.get_str() + "; " + c_.get_str() + " " + d_.get_str() + ")";
}

std::string ManifoldTag::str() const {
  switch (kind) {
    case Kind::S3:
      return "S3";
    case Kind::S1xS2:
      return "S1xS2";
    case Kind::Lens:
      return "L(" + p.get_str() + "," + q.get_str() + ")";
  }
  return "?";
}

ManifoldTag lensSpace(const Integer& p, const Integer& q) {
  const Integer ap = abs(p);
  if (ap == 0) return {ManifoldTag::Kind::S1xS2, 0, 1};
  if (ap == 1) return {ManifoldTag::Kind::S3, 1, 0};
  Integer g;
  mpz_gcd(g.get_mpz_t(), ap.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw InvalidArgument("lens space parameters must be coprime");
  Integer inv;
  mpz_invert(inv.get_mpz_t(), q.get_mpz_t(), ap.get_mpz_t());
  std::vector<Integer> reps = {mod(q, ap), mod(-q, ap), mod(inv, ap), mod(-inv, ap)};
  return {ManifoldTag::Kind::Lens, ap, *std::min_element(reps.begin(), reps.end())};
}

bool montesinosParity(const GluingMatrix& m) { return mod(m.a() + m.b() + m.c() + m.d(), 2) == 0; }

GluingMatrix montesinosMatrixFor(const Integer& p0, const Integer& q0) {
  if (p0 == 0 || q0 == 0) throw InvalidArgument("p and q must be nonzero");
  Integer g;
  mpz_gcd(g.get_mpz_t(), p0.get_mpz_t(), q0.get_mpz_t());
  if (g != 1) throw InvalidArgument("p and q must be coprime");
  Integer p = p0;
  Integer q = q0;
  // Both odd: L(p, q) = L(p, p + q) and p + (p + q) is odd.
  if (mod(p + q, 2) == 0) q = p + q;
  // psi(mu) = q mu + p lambda; complete to det 1 with q y - p x = 1.
  Integer s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  Integer x = -t * g;
  Integer y = s * g;
  if (mod(q + x + p + y, 2) != 0) {
    x += q;
    y += p;
  }
  return GluingMatrix(q, x, p, y);
}

ManifoldTag classifyGluing(const GluingMatrix& m) {
  // Heegaard curves mu and psi(mu) = a mu + c lambda meet |c| times.
  return lensSpace(m.c(), m.a());
}

}  // namespace barbell

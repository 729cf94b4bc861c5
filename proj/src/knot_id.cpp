#include "tbk/knot_id.hpp"

#include <algorithm>

#include "tbk/errors.hpp"

namespace tbk {

namespace {

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw InvalidArgument(a.get_str() + " is not invertible modulo " + m.get_str());
  return r;
}

void validate(const Integer& p, const Integer& q) {
  if (q < 3 || mpz_even_p(q.get_mpz_t()))
    throw InvalidArgument("knot denominator must be odd and at least 3, got " + q.get_str());
  if (p <= 0 || p >= q) throw InvalidArgument("knot numerator must satisfy 0 < p < q, got " + p.get_str());
  if (gcd(p, q) != 1) throw InvalidArgument(p.get_str() + "/" + q.get_str() + " is not in lowest terms");
}

}  // namespace

Integer canonical_residue(const Integer& p, const Integer& q, MirrorConvention convention) {
  validate(p, q);
  const Integer inv = inverse_mod(p, q);
  Integer best = std::min(p, inv);
  if (convention == MirrorConvention::identify) best = std::min({best, Integer(q - p), Integer(q - inv)});
  return best;
}

KnotId::KnotId(Integer p, Integer q, MirrorConvention convention)
    : p_(canonical_residue(p, q, convention)), q_(std::move(q)), convention_(convention) {}

std::string KnotId::to_string() const { return "K(" + p_.get_str() + "/" + q_.get_str() + ")"; }

bool knot_equivalent(const Integer& p, const Integer& q, const Integer& p2, const Integer& q2) {
  if (q != q2) return false;
  const Integer a = mod(p, q);
  const Integer b = mod(p2, q);
  if (a == b) return true;
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t()) == 0) return false;
  return inv == b;
}

bool knot_equivalent(const KnotId& a, const KnotId& b) { return knot_equivalent(a.p(), a.q(), b.p(), b.q()); }

DoubleTwistKnot double_twist_to_two_bridge(long k, long l, MirrorConvention convention) {
  const Integer kk(k);
  const Integer ll(l);
  const Integer kl = kk * ll;
  if (mpz_odd_p(kl.get_mpz_t()))
    throw InvalidArgument("J(" + std::to_string(k) + "," + std::to_string(l) + ") has k*l odd: it is a link");
  const Integer q = abs(Integer(1 - kl));
  if (q == 1) throw InvalidArgument("J(" + std::to_string(k) + "," + std::to_string(l) + ") is the unknot");
  const Integer p = mod(kk, q);
  KnotId id(p, q, convention);
  const bool torus = p == 1 || p == q - 1;
  return {std::move(id), !torus};
}

}  // namespace tbk

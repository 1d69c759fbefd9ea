#include "adicert/ideal.hpp"

#include <stdexcept>

namespace adicert {

Ideal Ideal::make(const RingPtr& ring, std::vector<RingElement> gens) {
  Ideal I;
  I.ring = ring;
  for (auto& g : gens) {
    if (!Ring::same(g.ring, ring)) throw std::invalid_argument("ideal generator over wrong ring");
    if (!g.is_zero()) I.gens.push_back(g);
  }
  return I;
}

Ideal Ideal::unit(const RingPtr& ring) { return make(ring, {ring->one()}); }
Ideal Ideal::zero(const RingPtr& ring) { return make(ring, {}); }

GroebnerBasis ideal_gb_with_defining(const Ideal& I) {
  if (!I.ring->is_polynomial()) throw std::logic_error("polynomial rings only");
  std::vector<MPoly> gens;
  for (const auto& g : I.gens) gens.push_back(g.p);
  for (const auto& d : I.ring->defining_basis()) gens.push_back(d);
  return compute_groebner(I.ring->coeff(), I.ring->order(), gens);
}

Ideal groebner_basis(const Ideal& I) {
  if (I.ring->is_euclidean()) {
    mpz_class g = 0;
    for (const auto& e : I.gens) g = gcd_z(g, e.z);
    if (I.ring->kind() == Ring::Kind::IntegersMod) g = gcd_z(g, I.ring->modulus());
    if (g == 0) return Ideal::zero(I.ring);
    auto e = I.ring->from_int(g);
    return e.is_zero() ? Ideal::zero(I.ring) : Ideal::make(I.ring, {e});
  }
  std::vector<MPoly> gens;
  for (const auto& g : I.gens) gens.push_back(g.p);
  auto G = compute_groebner(I.ring->coeff(), I.ring->order(), gens);
  std::vector<RingElement> out;
  for (const auto& b : G.basis) out.push_back(I.ring->from_mpoly(b));
  return Ideal::make(I.ring, out);
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  if (!Ring::same(I.ring, J.ring)) throw std::invalid_argument("ring mismatch");
  std::vector<RingElement> gens;
  for (const auto& a : I.gens)
    for (const auto& b : J.gens) gens.push_back(a * b);
  return Ideal::make(I.ring, gens);
}

Ideal ideal_power(const Ideal& I, unsigned n) {
  if (n == 0) return Ideal::unit(I.ring);
  Ideal r = I;
  for (unsigned k = 1; k < n; ++k) r = ideal_product(r, I);
  return r;
}

bool ideal_member(const RingElement& f, const Ideal& I) {
  if (!Ring::same(f.ring, I.ring)) throw std::invalid_argument("ring mismatch");
  if (f.is_zero()) return true;
  if (I.ring->is_euclidean()) {
    Ideal g = groebner_basis(I);
    if (g.gens.empty()) return false;
    return f.z % g.gens[0].z == 0;
  }
  auto G = ideal_gb_with_defining(I);
  return gb_reduce(G, f.p).rem.is_zero();
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
  if (!Ring::same(I.ring, J.ring)) throw std::invalid_argument("ring mismatch");
  if (I.ring->is_euclidean()) {
    for (const auto& g : J.gens)
      if (!ideal_member(g, I)) return false;
    return true;
  }
  auto G = ideal_gb_with_defining(I);
  for (const auto& g : J.gens)
    if (!gb_reduce(G, g.p).rem.is_zero()) return false;
  return true;
}

bool radical_member(const RingElement& f, const Ideal& I) {
  if (!Ring::same(f.ring, I.ring)) throw std::invalid_argument("ring mismatch");
  if (f.is_zero()) return true;
  if (I.ring->is_euclidean()) {
    mpz_class d = 0;
    for (const auto& e : I.gens) d = gcd_z(d, e.z);
    if (I.ring->kind() == Ring::Kind::IntegersMod) d = gcd_z(d, I.ring->modulus());
    if (d == 0) return f.is_zero();
    // strip every prime shared with f; member iff nothing else remains
    mpz_class rest = abs(d);
    while (true) {
      mpz_class g = gcd_z(rest, f.z);
      if (g == 1) break;
      while (rest % g == 0) rest /= g;
    }
    return rest == 1;
  }
  // Rabinowitsch: 1 in (I, defining, 1 - t*f) in an extended ring
  const auto& R = *I.ring;
  std::size_t nv = R.nvars();
  auto lift = [&](const MPoly& p) {
    MPoly q = p;
    for (auto& t : q.t) t.m.e.push_back(0);
    return q;
  };
  std::vector<MPoly> gens;
  for (const auto& g : I.gens) gens.push_back(lift(g.p));
  for (const auto& d : R.defining_basis()) gens.push_back(lift(d));
  // 1 - t*f
  MPoly tf = MPoly::mul_term(lift(f.p), 1, Monomial::var(nv + 1, nv), R.coeff());
  MPoly one = MPoly::term(0, Monomial(nv + 1), 1, R.coeff());
  gens.push_back(MPoly::sub(one, tf, R.coeff(), R.order()));
  TermOrder O;
  O.ord = MonomialOrder::Grevlex;
  auto G = compute_groebner(R.coeff(), O, gens);
  return gb_reduce(G, one).rem.is_zero();
}

} // namespace adicert

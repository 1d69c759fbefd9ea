#pragma once

#include "adicert/ring.hpp"

namespace adicert {

/// Finitely generated ideal, generators kept in normal form with zeros
/// dropped.
struct Ideal {
  RingPtr ring;
  std::vector<RingElement> gens;

  static Ideal make(const RingPtr& ring, std::vector<RingElement> gens);
  static Ideal unit(const RingPtr& ring);
  static Ideal zero(const RingPtr& ring);

  bool is_zero() const { return gens.empty(); }
};

/// Reduced generating set: reduced Groebner basis over polynomial rings,
/// single gcd generator over ZZ and ZZ/m.
Ideal groebner_basis(const Ideal& I);

Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, unsigned n);

/// Does I contain every generator of J?
bool ideal_contains(const Ideal& I, const Ideal& J);

/// Is f in the ideal generated by I?
bool ideal_member(const RingElement& f, const Ideal& I);

/// Is f in the radical of I?  Rabinowitsch trick over polynomial rings,
/// repeated gcd extraction over ZZ and ZZ/m.
bool radical_member(const RingElement& f, const Ideal& I);

/// Groebner basis of I joined with the ring's defining ideal, in the
/// ambient variables; utility shared by membership tests and quotients.
GroebnerBasis ideal_gb_with_defining(const Ideal& I);

} // namespace adicert

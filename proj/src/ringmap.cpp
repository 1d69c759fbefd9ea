#include "adicert/ringmap.hpp"

#include <stdexcept>

namespace adicert {

namespace {

/// Canonical image of a source coefficient in the target ring.
RingElement embed_coeff(const CoeffDomain& srcD, const mpq_class& c, const RingPtr& tgt) {
  switch (srcD.kind()) {
    case CoeffKind::Integer:
      return tgt->from_int(c.get_num());
    case CoeffKind::PrimeField: {
      if (tgt->is_polynomial() && tgt->coeff().kind() == CoeffKind::PrimeField &&
          tgt->coeff().char_p() == srcD.char_p())
        return tgt->from_int(c.get_num());
      if (tgt->kind() == Ring::Kind::IntegersMod && tgt->modulus() == mpz_class(srcD.char_p()))
        return tgt->from_int(c.get_num());
      throw std::invalid_argument("no coefficient map: characteristic mismatch");
    }
    case CoeffKind::Rational: {
      if (!tgt->is_polynomial() || tgt->coeff().kind() != CoeffKind::Rational)
        throw std::invalid_argument("no coefficient map: rational source needs rational target");
      return tgt->from_mpoly(MPoly::term(0, Monomial(tgt->nvars()), c, tgt->coeff()));
    }
  }
  throw std::logic_error("unreachable");
}

} // namespace

RingMap RingMap::make(const RingPtr& src, const RingPtr& tgt,
                      std::vector<RingElement> var_images) {
  RingMap m;
  m.src = src;
  m.tgt = tgt;
  m.var_images = std::move(var_images);
  if (src->is_polynomial()) {
    if (m.var_images.size() != src->nvars())
      throw std::invalid_argument("one image per source variable required");
    for (const auto& im : m.var_images)
      if (!Ring::same(im.ring, tgt)) throw std::invalid_argument("variable image over wrong ring");
    for (const auto& d : src->defining_basis()) {
      RingElement e;
      e.ring = src->ambient();
      e.p = d;
      // evaluate in the target; must vanish for the map to be well defined
      RingElement img = m.apply(e.ring->from_mpoly(d));
      if (!img.is_zero())
        throw std::invalid_argument("images fail the source's defining relations");
    }
  } else {
    if (!m.var_images.empty())
      throw std::invalid_argument("integer source rings take no variable images");
    if (src->kind() == Ring::Kind::IntegersMod) {
      if (!tgt->from_int(src->modulus()).is_zero())
        throw std::invalid_argument("modulus does not vanish in target");
    }
  }
  return m;
}

RingMap RingMap::identity(const RingPtr& r) {
  std::vector<RingElement> ims;
  if (r->is_polynomial())
    for (std::size_t i = 0; i < r->nvars(); ++i) ims.push_back(r->var(i));
  return make(r, r, ims);
}

RingElement RingMap::apply(const RingElement& e) const {
  if (!e.ring || !Ring::same(e.ring, src)) {
    // accept elements of the ambient polynomial ring of a quotient source
    if (!(src->kind() == Ring::Kind::Quotient && e.ring && e.ring->is_polynomial() &&
          e.ring->vars() == src->vars() && e.ring->coeff() == src->coeff()))
      throw std::invalid_argument("element not over the map's source");
  }
  if (!src->is_polynomial()) return embed_coeff(src->coeff(), mpq_class(e.z), tgt);
  RingElement acc = tgt->zero();
  for (const auto& t : e.p.t) {
    RingElement term = embed_coeff(src->coeff(), t.c, tgt);
    for (std::size_t i = 0; i < src->nvars(); ++i)
      if (t.m.e[i]) term = term * var_images[i].pow(t.m.e[i]);
    acc = acc + term;
  }
  return acc;
}

Ideal RingMap::apply(const Ideal& I) const {
  std::vector<RingElement> gens;
  for (const auto& g : I.gens) gens.push_back(apply(g));
  return Ideal::make(tgt, gens);
}

} // namespace adicert

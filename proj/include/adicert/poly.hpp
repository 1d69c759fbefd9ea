#pragma once

#include <algorithm>
#include <cassert>
#include <vector>

#include "adicert/monomial.hpp"
#include "adicert/numeric.hpp"

namespace adicert {

/// One term of a free-module element: coefficient * monomial * e_comp.
/// Plain ring polynomials use comp == 0 throughout.
struct Term {
  int comp = 0;
  Monomial m;
  mpq_class c;
};

struct TermOrder {
  MonomialOrder ord = MonomialOrder::Grevlex;
  std::size_t block = 0; // only for MonomialOrder::Block

  /// Position-over-term: smaller component index dominates.
  /// Returns <0,0,>0 as a < b, a == b, a > b.
  int cmp(const Term& a, const Term& b) const {
    if (a.comp != b.comp) return a.comp > b.comp ? -1 : 1;
    return mono_cmp(a.m, b.m, ord, block);
  }
};

/// Element of a free module R^k over a polynomial coefficient domain,
/// kept as a term list sorted strictly descending.  Immutable-by-habit:
/// all operations return fresh values.
class MPoly {
public:
  std::vector<Term> t;

  bool is_zero() const { return t.empty(); }
  const Term& lead() const { assert(!t.empty()); return t.front(); }

  static MPoly zero() { return MPoly{}; }

  static MPoly term(int comp, const Monomial& m, const mpq_class& c,
                    const CoeffDomain& D) {
    MPoly r;
    mpq_class cn = D.normalize(c);
    if (cn != 0) r.t.push_back(Term{comp, m, cn});
    return r;
  }

  /// Merge-add; also the canonicalizer for arbitrary term lists.
  static MPoly add(const MPoly& a, const MPoly& b, const CoeffDomain& D,
                   const TermOrder& O) {
    MPoly r;
    r.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
      int c = O.cmp(a.t[i], b.t[j]);
      if (c > 0) r.t.push_back(a.t[i++]);
      else if (c < 0) r.t.push_back(b.t[j++]);
      else {
        mpq_class s = D.add(a.t[i].c, b.t[j].c);
        if (s != 0) r.t.push_back(Term{a.t[i].comp, a.t[i].m, s});
        ++i; ++j;
      }
    }
    for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j) r.t.push_back(b.t[j]);
    return r;
  }

  static MPoly neg(const MPoly& a, const CoeffDomain& D) {
    MPoly r = a;
    for (auto& x : r.t) x.c = D.neg(x.c);
    return r;
  }

  static MPoly sub(const MPoly& a, const MPoly& b, const CoeffDomain& D,
                   const TermOrder& O) {
    return add(a, neg(b, D), D, O);
  }

  /// Multiply by the scalar term c * m (component-preserving).
  static MPoly mul_term(const MPoly& a, const mpq_class& c, const Monomial& m,
                        const CoeffDomain& D) {
    MPoly r;
    mpq_class cn = D.normalize(c);
    if (cn == 0) return r;
    r.t.reserve(a.t.size());
    for (const auto& x : a.t) {
      mpq_class p = D.mul(x.c, cn);
      if (p != 0) r.t.push_back(Term{x.comp, x.m * m, p});
    }
    return r;
  }

  static MPoly scale(const MPoly& a, const mpq_class& c, const CoeffDomain& D) {
    return mul_term(a, c, Monomial(a.t.empty() ? 0 : a.t.front().m.e.size()), D);
  }

  /// Ring-polynomial product (both arguments must have comp == 0 terms on
  /// one side; here: b is a scalar polynomial, multiplied into a).
  static MPoly mul_scalar_poly(const MPoly& a, const MPoly& b, const CoeffDomain& D,
                               const TermOrder& O) {
    MPoly r;
    for (const auto& x : b.t) {
      assert(x.comp == 0);
      r = add(r, mul_term(a, x.c, x.m, D), D, O);
    }
    return r;
  }

  bool operator==(const MPoly& o) const {
    if (t.size() != o.t.size()) return false;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i].comp != o.t[i].comp || t[i].m != o.t[i].m || t[i].c != o.t[i].c)
        return false;
    return true;
  }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  /// Extract the component-i scalar polynomial (terms re-tagged to comp 0).
  MPoly component(int i) const {
    MPoly r;
    for (const auto& x : t)
      if (x.comp == i) r.t.push_back(Term{0, x.m, x.c});
    return r;
  }

  /// Re-tag a scalar polynomial into component i.
  static MPoly into_component(const MPoly& a, int i) {
    MPoly r = a;
    for (auto& x : r.t) { assert(x.comp == 0); x.comp = i; }
    return r;
  }

  int max_component() const {
    int m = -1;
    for (const auto& x : t) m = std::max(m, x.comp);
    return m;
  }
};

} // namespace adicert

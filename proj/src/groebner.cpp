#include "adicert/groebner.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace adicert {

namespace {

struct WorkElem {
  MPoly p;
  MPoly expr; // over original generator indices
};

/// Full deterministic reduction of f by `basis`, optionally skipping one
/// index (used for inter-reduction).  Quotients are reported over basis
/// positions.
Reduction reduce_by(const CoeffDomain& D, const TermOrder& O,
                    const std::vector<MPoly>& basis, const MPoly& f,
                    int skip = -1) {
  Reduction res;
  res.quots.assign(basis.size(), MPoly::zero());
  MPoly w = f;
  std::vector<Term> remterms;
  while (!w.is_zero()) {
    const Term& T = w.lead();
    int pick = -1;
    mpq_class pq, pr;
    bool exact_found = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if ((int)i == skip || basis[i].is_zero()) continue;
      const Term& L = basis[i].lead();
      if (L.comp != T.comp || !L.m.divides(T.m)) continue;
      if (D.is_field()) { pick = (int)i; break; }
      mpq_class q, r;
      D.divmod(T.c, L.c, q, r);
      if (q == 0) continue;
      bool exact = (r == 0);
      if (pick < 0 || (exact && !exact_found) ||
          (exact == exact_found && abs(L.c) < abs(basis[pick].lead().c))) {
        pick = (int)i; pq = q; pr = r; exact_found = exact;
      }
    }
    if (pick < 0) {
      remterms.push_back(T);
      w.t.erase(w.t.begin());
      continue;
    }
    const Term& L = basis[pick].lead();
    Monomial mq = T.m.quotient(L.m);
    mpq_class q = D.is_field() ? D.div(T.c, L.c) : pq;
    res.quots[pick] = MPoly::add(res.quots[pick], MPoly::term(0, mq, q, D), D, O);
    w = MPoly::sub(w, MPoly::mul_term(basis[pick], q, mq, D), D, O);
  }
  res.rem.t = std::move(remterms);
  return res;
}

MPoly apply_quots(const CoeffDomain& D, const TermOrder& O,
                  const std::vector<MPoly>& exprs, const std::vector<MPoly>& quots) {
  MPoly acc;
  for (std::size_t i = 0; i < quots.size(); ++i)
    if (!quots[i].is_zero())
      acc = MPoly::add(acc, MPoly::mul_scalar_poly(exprs[i], quots[i], D, O), D, O);
  return acc;
}

struct Pair {
  std::size_t i, j;
  bool gpoly; // Z only: Bezout combination instead of S-polynomial
};

void push_pairs(const CoeffDomain& D, const std::vector<WorkElem>& B,
                std::size_t k, std::deque<Pair>& Q) {
  for (std::size_t i = 0; i < k; ++i) {
    if (B[i].p.is_zero()) continue;
    if (B[i].p.lead().comp != B[k].p.lead().comp) continue;
    Q.push_back(Pair{i, k, false});
    if (D.kind() == CoeffKind::Integer) {
      const mpq_class &a = B[i].p.lead().c, &b = B[k].p.lead().c;
      mpz_class g = gcd_z(a.get_num(), b.get_num());
      // a | b or b | a makes the G-combination redundant
      if (g != abs(a.get_num()) && g != abs(b.get_num()))
        Q.push_back(Pair{i, k, true});
    }
  }
}

void normalize_lead(const CoeffDomain& D, WorkElem& w) {
  if (w.p.is_zero()) return;
  if (D.is_field()) {
    mpq_class c = D.inv(w.p.lead().c);
    w.p = MPoly::scale(w.p, c, D);
    w.expr = MPoly::scale(w.expr, c, D);
  } else if (w.p.lead().c < 0) {
    w.p = MPoly::neg(w.p, D);
    w.expr = MPoly::neg(w.expr, D);
  }
}

} // namespace

GroebnerBasis compute_groebner(const CoeffDomain& D, const TermOrder& O,
                               const std::vector<MPoly>& gens) {
  GroebnerBasis G;
  G.D = D;
  G.O = O;
  G.gens = gens;

  std::vector<WorkElem> B;
  std::deque<Pair> Q;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    WorkElem w{gens[i], MPoly::term((int)i, Monomial(0), 1, D)};
    // expr monomials must share the ambient variable count
    if (!gens[i].t.empty())
      w.expr = MPoly::term((int)i, Monomial(gens[i].t[0].m.e.size()), 1, D);
    normalize_lead(D, w);
    B.push_back(w);
    push_pairs(D, B, B.size() - 1, Q);
  }

  while (!Q.empty()) {
    Pair pr = Q.front();
    Q.pop_front();
    const WorkElem &f = B[pr.i], &g = B[pr.j];
    const Term &lf = f.p.lead(), &lg = g.p.lead();
    Monomial L = Monomial::lcm(lf.m, lg.m);
    Monomial mf = L.quotient(lf.m), mg = L.quotient(lg.m);
    MPoly cand, cexpr;
    if (D.is_field()) {
      // leads are monic
      cand = MPoly::sub(MPoly::mul_term(f.p, 1, mf, D), MPoly::mul_term(g.p, 1, mg, D), D, O);
      cexpr = MPoly::sub(MPoly::mul_term(f.expr, 1, mf, D), MPoly::mul_term(g.expr, 1, mg, D), D, O);
    } else if (!pr.gpoly) {
      mpz_class c = lcm_z(lf.c.get_num(), lg.c.get_num());
      mpq_class ca(c / lf.c.get_num()), cb(c / lg.c.get_num());
      cand = MPoly::sub(MPoly::mul_term(f.p, ca, mf, D), MPoly::mul_term(g.p, cb, mg, D), D, O);
      cexpr = MPoly::sub(MPoly::mul_term(f.expr, ca, mf, D), MPoly::mul_term(g.expr, cb, mg, D), D, O);
    } else {
      mpz_class d, u, v;
      gcdext_z(lf.c.get_num(), lg.c.get_num(), d, u, v);
      cand = MPoly::add(MPoly::mul_term(f.p, mpq_class(u), mf, D),
                        MPoly::mul_term(g.p, mpq_class(v), mg, D), D, O);
      cexpr = MPoly::add(MPoly::mul_term(f.expr, mpq_class(u), mf, D),
                         MPoly::mul_term(g.expr, mpq_class(v), mg, D), D, O);
    }
    std::vector<MPoly> bare;
    bare.reserve(B.size());
    for (auto& w : B) bare.push_back(w.p);
    Reduction red = reduce_by(D, O, bare, cand);
    if (red.rem.is_zero()) continue;
    std::vector<MPoly> exprs;
    for (auto& w : B) exprs.push_back(w.expr);
    WorkElem nw{red.rem, MPoly::sub(cexpr, apply_quots(D, O, exprs, red.quots), D, O)};
    normalize_lead(D, nw);
    B.push_back(nw);
    push_pairs(D, B, B.size() - 1, Q);
  }

  // inter-reduce to the reduced (strong) basis
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<MPoly> bare;
    for (auto& w : B) bare.push_back(w.p);
    for (std::size_t i = 0; i < B.size(); ++i) {
      if (B[i].p.is_zero()) continue;
      Reduction red = reduce_by(D, O, bare, B[i].p, (int)i);
      if (red.rem != B[i].p) {
        std::vector<MPoly> exprs;
        for (auto& w : B) exprs.push_back(w.expr);
        B[i].expr = MPoly::sub(B[i].expr, apply_quots(D, O, exprs, red.quots), D, O);
        B[i].p = red.rem;
        normalize_lead(D, B[i]);
        bare[i] = B[i].p;
        changed = true;
      }
    }
    B.erase(std::remove_if(B.begin(), B.end(),
                           [](const WorkElem& w) { return w.p.is_zero(); }),
            B.end());
  }

  std::sort(B.begin(), B.end(), [&](const WorkElem& a, const WorkElem& b) {
    return O.cmp(a.p.lead(), b.p.lead()) > 0;
  });
  for (auto& w : B) {
    G.basis.push_back(w.p);
    G.expr.push_back(w.expr);
  }
  return G;
}

Reduction gb_reduce(const GroebnerBasis& G, const MPoly& f) {
  return reduce_by(G.D, G.O, G.basis, f);
}

std::vector<MPoly> quots_in_gens(const GroebnerBasis& G, const Reduction& r) {
  MPoly acc = apply_quots(G.D, G.O, G.expr, r.quots);
  std::vector<MPoly> out(G.gens.size());
  for (std::size_t j = 0; j < G.gens.size(); ++j) out[j] = acc.component((int)j);
  return out;
}

std::vector<MPoly> gb_syzygies(const CoeffDomain& D, const TermOrder& O,
                               const std::vector<MPoly>& gens, std::size_t nvars) {
  // components [0, c) are the ambient free module, [c, c+r) tag the
  // generators; POT makes the ambient block dominant, so basis elements
  // supported in the tag block are exactly a basis of the syzygies.
  int c = 0;
  for (const auto& g : gens) c = std::max(c, g.max_component() + 1);
  if (c == 0) c = 1;
  std::size_t nv = nvars;
  for (const auto& g : gens)
    if (!g.t.empty()) { nv = g.t[0].m.e.size(); break; }
  std::vector<MPoly> graph;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    MPoly h = gens[i];
    h = MPoly::add(h, MPoly::term(c + (int)i, Monomial(nv), 1, D), D, O);
    graph.push_back(h);
  }
  GroebnerBasis G = compute_groebner(D, O, graph);
  std::vector<MPoly> syz;
  for (const auto& b : G.basis) {
    bool tagged = true;
    for (const auto& t : b.t)
      if (t.comp < c) { tagged = false; break; }
    if (!tagged) continue;
    MPoly s = b;
    for (auto& t : s.t) t.comp -= c;
    syz.push_back(s);
  }
  return syz;
}

} // namespace adicert

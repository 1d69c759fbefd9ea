#include "adicert/theorems.hpp"

#include <algorithm>
#include <stdexcept>

namespace adicert {

const Verdict& TheoremReport::verdict_of(const std::string& id) const {
  for (const auto& c : conditions)
    if (c.id == id) return c.verdict;
  throw std::invalid_argument("no condition named " + id);
}

bool TheoremReport::all_hold() const {
  for (const auto& c : conditions)
    if (!c.verdict.is_holds()) return false;
  return !conditions.empty();
}

namespace {

bool certified(const Verdict& v) { return v.kind != Verdict::Kind::Undetermined; }

/// Certified verdicts must agree where equivalence is claimed.
bool find_discrepancy(const std::vector<ConditionResult>& cs) {
  bool saw_holds = false, saw_fails = false;
  for (const auto& c : cs) {
    if (!certified(c.verdict)) continue;
    saw_holds = saw_holds || c.verdict.is_holds();
    saw_fails = saw_fails || c.verdict.is_fails();
  }
  return saw_holds && saw_fails;
}

Verdict exact(bool ok, int depth, const std::string& what) {
  return ok ? Verdict::holds(depth, {}, what + ": exact")
            : Verdict::fails(depth, what + ": exact counterexample");
}

/// All homology of C vanishes; `limit` restricts the top degree checked
/// (used for truncated replacements), <= hi means full range.
bool acyclic_upto(const BoundedComplex& C, int top) {
  for (int n = C.lo(); n <= std::min(C.hi(), top); ++n)
    if (!homology_module(C, n).is_zero()) return false;
  return true;
}

Verdict cond_c_complex(const BoundedComplex& C, const Ideal& I, int depth) {
  int len = C.ring()->resolution_bound(depth) + (C.hi() - C.lo()) + 1;
  auto FR = free_replacement(C, len);
  auto T = tensor_with_module(FR.cx, FpModule::cyclic(I));
  int top = FR.complete ? T.hi() : (C.lo() + len - 1);
  bool ok = acyclic_upto(T, top);
  if (!ok) return Verdict::fails(depth, "derived tensor with R/I has nonzero homology");
  if (FR.complete) return Verdict::holds(depth, {}, "derived tensor with R/I vanishes: exact");
  return Verdict::undetermined(depth, "derived tensor vanishes up to the truncation bound");
}

Verdict cond_f_module(const FpModule& M, const Ideal& I, int depth) {
  int bound = M.ring()->resolution_bound(depth);
  auto df = derived_binary(FpModule::cyclic(I), M, bound);
  for (int i = 0; i <= bound; ++i)
    if (!df.ext[(std::size_t)i].is_zero())
      return Verdict::fails(depth, "Ext^" + std::to_string(i) + "(R/I, M) nonzero: exact");
  return Verdict::holds(depth, {}, "all Ext(R/I, M) vanish: exact");
}

Verdict cond_c_module(const FpModule& M, const Ideal& I, int depth) {
  int bound = M.ring()->resolution_bound(depth);
  auto df = derived_binary(FpModule::cyclic(I), M, bound);
  for (int i = 0; i <= bound; ++i)
    if (!df.tor[(std::size_t)i].is_zero())
      return Verdict::fails(depth, "Tor_" + std::to_string(i) + "(R/I, M) nonzero: exact");
  return Verdict::holds(depth, {}, "all Tor(R/I, M) vanish: exact");
}

TheoremReport six_conditions_impl(const BoundedComplex& C, const Ideal& I, int depth,
                                  const FpModule* module_form) {
  TheoremReport rep;
  rep.theorem = "six_conditions";
  rep.depth = depth;
  const RingPtr& ring = C.ring();
  if (I.is_zero()) {
    // R/0 = R: every condition reduces to the vanishing of the input
    bool zero = acyclic_upto(C, C.hi());
    for (const char* id : {"a", "b", "c", "d", "e", "f"})
      rep.conditions.push_back({id, exact(zero, depth, "zero ideal, input vanishing")});
    return rep;
  }
  int k = (int)I.gens.size();
  auto K = koszul_complex(KoszulSpec::make(ring, I.gens, 1));

  auto TK = tensor_complexes(K, C);
  rep.conditions.push_back({"a", exact(acyclic_upto(TK, TK.hi()), depth, "K(I) tensor input")});

  auto G = derived_torsion_complex(C, I.gens);
  {
    std::vector<Verdict> parts;
    for (int d = C.lo() - k; d <= C.hi(); ++d)
      parts.push_back(ind_zero(homology_ind(G, d), depth));
    rep.conditions.push_back({"b", verdict_all(parts, depth)});
  }

  rep.conditions.push_back(
      {"c", module_form ? cond_c_module(*module_form, I, depth) : cond_c_complex(C, I, depth)});

  auto dual = hom_into_module(K, FpModule::free_module(ring, 1));
  auto DK = tensor_complexes(dual.cx, C);
  rep.conditions.push_back({"d", exact(acyclic_upto(DK, DK.hi()), depth, "Hom(K(I), input)")});

  auto L = derived_completion_complex(C, I.gens);
  {
    std::vector<Verdict> parts;
    for (int d = C.lo(); d <= C.hi() + k; ++d)
      parts.push_back(pro_zero(homology_tower(L.tower, d), depth));
    rep.conditions.push_back({"e", verdict_all(parts, depth)});
  }

  if (module_form) {
    rep.conditions.push_back({"f", cond_f_module(*module_form, I, depth)});
  } else {
    std::vector<Verdict> parts;
    for (int q = C.lo(); q <= C.hi(); ++q) {
      auto H = homology_module(C, q);
      auto v = cond_f_module(H, I, depth);
      if (v.is_fails())
        v.note += " (second-page obstruction against the homology in degree " +
                  std::to_string(q) + ")";
      parts.push_back(v);
    }
    rep.conditions.push_back({"f", verdict_all(parts, depth)});
  }

  rep.discrepancy = find_discrepancy(rep.conditions);
  if (rep.discrepancy) rep.note = "certified verdicts disagree across the equivalence";
  return rep;
}

} // namespace

TheoremReport six_conditions(const FpModule& M, const Ideal& I, int depth) {
  return six_conditions_impl(BoundedComplex::concentrated(M, 0), I, depth, &M);
}

TheoremReport six_conditions_complex(const BoundedComplex& C, const Ideal& I, int depth) {
  return six_conditions_impl(C, I, depth, nullptr);
}

TheoremReport factorization_check(const FpModule& M, const Ideal& I, int depth) {
  TheoremReport rep;
  rep.theorem = "factorization";
  rep.depth = depth;
  if (I.is_zero()) {
    rep.conditions.push_back({"surjectivity", Verdict::holds(depth, {}, "zero ideal")});
    rep.conditions.push_back({"factorization", Verdict::holds(depth, {}, "zero ideal")});
    return rep;
  }
  auto L = derived_completion(M, I.gens);
  auto A = adic_tower(M, I);
  auto hs = homology(L.source, 0); // coordinates of H_0(source) inside M
  std::vector<std::pair<int, int>> w;
  bool surj = true, fact = true;
  std::string note;
  for (int n = 1; n <= depth; ++n) {
    auto hd = homology(L.tower.stage(n), 0);
    auto v = ModuleMap::make(hd.H, A.stage(n), hd.ker.map.mat);
    if (!is_surjective(v)) {
      surj = false;
      note = "comparison not surjective at stage " + std::to_string(n);
      break;
    }
    // the composite M -> H_0(stage) -> M/I^n must be the canonical map
    auto u = induced_map(L.unit(n), 0);
    auto gamma = ModuleMap::make(u.src, A.stage(n), hs.ker.map.mat);
    if (!maps_equal(u.then(v), gamma)) {
      fact = false;
      note = "composite disagrees with the canonical map at stage " + std::to_string(n);
      break;
    }
    w.emplace_back(n, n);
  }
  rep.conditions.push_back(
      {"surjectivity", surj ? Verdict::holds(depth, w, "levelwise surjective")
                            : Verdict::fails(depth, note)});
  rep.conditions.push_back({"factorization",
                            (surj && fact) ? Verdict::holds(depth, w, "factors through the canonical map")
                                           : Verdict::fails(depth, note)});
  return rep;
}

TheoremReport spectral_edge(const BoundedComplex& C, const Ideal& I, int depth) {
  TheoremReport rep;
  rep.theorem = "spectral_edge";
  rep.depth = depth;
  if (I.is_zero()) throw std::invalid_argument("spectral edge needs a nonzero ideal");
  int k = (int)I.gens.size();
  auto L = derived_completion_complex(C, I.gens);
  for (int d = C.lo(); d <= C.hi() + k; ++d) {
    FpModule H = homology_module(C, d);
    ComplexTower lam = L.tower;
    auto unit = L.unit;
    // tower of H/(x_1^n..x_k^n)H, mapping into the completed homology
    std::vector<RingElement> gens = I.gens;
    RingPtr ring = C.ring();
    auto powered = [ring, gens](int n) {
      std::vector<RingElement> p;
      for (const auto& g : gens) p.push_back(g.pow((unsigned long)n));
      return Ideal::make(ring, p);
    };
    ModuleTower X(
        [H, powered](int n) { return quotient_by_ideal(H, powered(n)).module; },
        [H, powered, ring](int n) {
          return ModuleMap::make(quotient_by_ideal(H, powered(n + 1)).module,
                                 quotient_by_ideal(H, powered(n)).module,
                                 rmat_identity(ring, H.gens()));
        });
    auto HL = homology_tower(L.tower, d);
    TowerMap to_completed{X, HL, [X, HL, unit, d](int n) {
                            auto u = induced_map(unit(n), d);
                            return ModuleMap::make(X.stage(n), HL.stage(n), u.mat);
                          }};
    auto v1 = pro_iso(to_completed, depth);
    // and the same quotient tower against the adic tower of H
    auto A = adic_tower(H, I);
    TowerMap to_adic{X, A, [X, A, ring, H](int n) {
                       return ModuleMap::make(X.stage(n), A.stage(n),
                                              rmat_identity(ring, H.gens()));
                     }};
    auto v2 = pro_iso(to_adic, depth);
    rep.conditions.push_back({"degree " + std::to_string(d), verdict_all({v1, v2}, depth)});
  }
  return rep;
}

namespace {

/// Is R/I a field at desk scale: prime modulus over a euclidean base, or
/// an ideal containing every variable over a polynomial base.
bool residue_field_like(const RingPtr& R, const Ideal& I) {
  if (I.is_zero()) return false;
  if (R->is_euclidean()) {
    Ideal g = groebner_basis(I);
    if (g.gens.size() != 1) return false;
    mpz_class m = g.gens[0].z;
    if (m < 0) m = -m;
    return mpz_probab_prime_p(m.get_mpz_t(), 25) != 0;
  }
  for (std::size_t j = 0; j < R->nvars(); ++j)
    if (!ideal_member(R->var(j), I)) return false;
  return true;
}

/// Candidate preimages used when testing surjectivity of R -> S/(ideal):
/// the images of the R-variables plus euclidean constants below the
/// source modulus g^level (capped).
std::vector<RingElement> surjectivity_candidates(const RingMap& theta, const Ideal& src_ideal,
                                                 int level) {
  std::vector<RingElement> cands = theta.var_images;
  if (theta.src->is_euclidean()) {
    mpz_class bound = 1;
    for (const auto& g : src_ideal.gens) {
      mpz_class a = g.z < 0 ? mpz_class(-g.z) : g.z;
      if (a > 1) {
        bound = a;
        break;
      }
    }
    mpz_class top = 1;
    for (int i = 0; i < level; ++i) top *= bound;
    if (top > 256) top = 256;
    for (mpz_class c = 0; c < top; ++c) cands.push_back(theta.tgt->from_int(c));
  }
  return cands;
}

/// Each target variable must be congruent to a candidate image mod the
/// target-side `ideal`; the candidate constants come from `src_ideal`.
bool levelwise_surjective(const RingMap& theta, const Ideal& ideal, const Ideal& src_ideal,
                          int level) {
  auto cands = surjectivity_candidates(theta, src_ideal, level);
  for (std::size_t j = 0; j < theta.tgt->nvars(); ++j) {
    RingElement v = theta.tgt->var(j);
    bool hit = false;
    for (const auto& c : cands)
      if (ideal_member(v - c, ideal)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

/// Minimal j <= cap with theta(f)^j in `ideal`, or -1.
int contraction_exponent(const RingMap& theta, const RingElement& f, const Ideal& ideal, int cap) {
  RingElement im = theta.apply(f);
  for (int j = 0; j <= cap; ++j)
    if (ideal_member(im.pow((unsigned long)j), ideal)) return j;
  return -1;
}

} // namespace

TheoremReport base_change_suite(const RingMap& theta, const Ideal& I, const Ideal& J, int depth) {
  TheoremReport rep;
  rep.theorem = "base_change";
  rep.depth = depth;
  const RingPtr& R = theta.src;
  const RingPtr& S = theta.tgt;
  Ideal IS = theta.apply(I);

  for (const auto& g : IS.gens)
    if (!radical_member(g, J))
      throw std::invalid_argument("radical precondition fails: image generator " + g.str() +
                                  " not in rad(J)");
  for (const auto& g : J.gens)
    if (!radical_member(g, IS))
      throw std::invalid_argument("radical precondition fails: generator " + g.str() +
                                  " not in rad(IS)");
  int p = -1, q = -1;
  for (int e = 1; e <= depth && p < 0; ++e)
    if (ideal_contains(J, ideal_power(IS, (unsigned)e))) p = e;
  for (int e = 1; e <= depth && q < 0; ++e)
    if (ideal_contains(IS, ideal_power(J, (unsigned)e))) q = e;
  Verdict interleave =
      (p > 0 && q > 0)
          ? Verdict::holds(depth, {{p, q}}, "(IS)^p inside J and J^q inside IS")
          : Verdict::fails(depth, "no interleaving exponents within depth");

  // (d): R/I -> S/IS is an isomorphism of rings
  Verdict vd;
  {
    bool surj = levelwise_surjective(theta, IS, I, 1);
    bool collapses = ideal_member(S->one(), IS);
    if (collapses && !ideal_member(R->one(), I))
      vd = Verdict::fails(depth, "S/IS is zero but R/I is not");
    else if (!surj)
      vd = Verdict::undetermined(depth, "no candidate preimage found for a target variable");
    else if (residue_field_like(R, I))
      vd = collapses ? Verdict::fails(depth, "residue field collapses in S")
                     : Verdict::holds(depth, {}, "surjective with field source, hence injective");
    else
      vd = Verdict::undetermined(depth, "injectivity undecided for a non-field residue ring");
  }

  // (b): (d) together with vanishing higher Tor of R/I against S,
  // computed by base-changing a free resolution of R/I along theta
  Verdict vb;
  {
    int bound = R->resolution_bound(depth);
    auto FR = free_resolution(FpModule::cyclic(I), bound + 1);
    std::vector<FpModule> mods;
    std::vector<ModuleMap> diffs;
    for (int n = 0; n <= FR.cx.hi(); ++n)
      mods.push_back(FpModule::free_module(S, FR.cx.mod(n).gens()));
    for (int n = 1; n <= FR.cx.hi(); ++n) {
      RMat m = FR.cx.diff(n).mat;
      for (auto& row : m)
        for (auto& e : row) e = theta.apply(e);
      diffs.push_back(ModuleMap::make(mods[(std::size_t)n], mods[(std::size_t)(n - 1)], m));
    }
    auto base_changed = BoundedComplex::make(S, 0, std::move(mods), std::move(diffs));
    bool tor_ok = true;
    std::string which;
    for (int i = 1; i <= FR.cx.hi(); ++i)
      if (!homology_module(base_changed, i).is_zero()) {
        tor_ok = false;
        which = std::to_string(i);
        break;
      }
    if (!tor_ok)
      vb = Verdict::fails(depth, "Tor_" + which + "(R/I, S) is nonzero");
    else if (vd.is_holds())
      vb = Verdict::holds(depth, {}, "(d) holds and all higher Tor of R/I against S vanish");
    else if (vd.is_fails())
      vb = Verdict::fails(depth, "(d) fails");
    else
      vb = Verdict::undetermined(depth, "Tor vanishes but (d) is undecided");
  }

  // (c): levelwise comparison of the completion towers
  Verdict vc;
  {
    std::vector<Verdict> parts;
    bool surj_all = true;
    int bad = 0;
    for (int n = 1; n <= depth; ++n)
      if (!levelwise_surjective(theta, ideal_power(IS, (unsigned)n), I, n)) {
        surj_all = false;
        bad = n;
        break;
      }
    parts.push_back(surj_all
                        ? Verdict::holds(depth, {}, "levelwise surjective onto S/(IS)^n")
                        : Verdict::undetermined(depth, "no preimage candidates at stage " +
                                                           std::to_string(bad)));
    // kernel tower of {R/I^n -> S/(IS)^n}: pro-zero iff the contraction
    // of (IS)^m falls into I^n for some m <= depth
    Ideal In = groebner_basis(I);
    if (In.gens.size() == 1 && residue_field_like(R, I)) {
      const RingElement& f = In.gens[0];
      bool ok = true;
      std::string note;
      for (int n = 1; n < depth && ok; ++n) {
        bool found = false;
        for (int m = n; m <= depth; ++m) {
          int j = contraction_exponent(theta, f, ideal_power(IS, (unsigned)m), depth + 1);
          if (j < 0 || j >= n) {
            found = true;
            break;
          }
        }
        if (!found) {
          ok = false;
          note = "kernel survives: the contraction of (IS)^m stays outside I^" +
                 std::to_string(n) + " for every m up to depth";
        }
      }
      parts.push_back(ok ? Verdict::holds(depth, {}, "contraction kernel tower is pro-zero")
                         : Verdict::fails(depth, note));
    } else {
      parts.push_back(Verdict::undetermined(depth, "kernel analysis needs a principal maximal I"));
    }
    parts.push_back(interleave);
    vc = verdict_all(parts, depth);
  }

  // (a) is not independently representable at the derived-category level
  Verdict va = vb;
  va.note = "reported via the evidence for (b); the derived-level map itself is not "
            "directly representable here";

  rep.conditions.push_back({"a", va});
  rep.conditions.push_back({"b", vb});
  rep.conditions.push_back({"c", vc});
  rep.conditions.push_back({"d", vd});
  rep.conditions.push_back({"interleaving", interleave});
  std::vector<ConditionResult> equiv(rep.conditions.begin(), rep.conditions.begin() + 4);
  rep.discrepancy = find_discrepancy(equiv);
  if (rep.discrepancy)
    rep.note = "certified verdicts disagree across the claimed equivalence";
  return rep;
}

TheoremReport radical_invariance_check(const FpModule& M, const std::vector<RingElement>& xs1,
                                       const std::vector<RingElement>& xs2, int depth) {
  const RingPtr& ring = M.ring();
  Ideal I1 = Ideal::make(ring, xs1), I2 = Ideal::make(ring, xs2);
  for (const auto& x : I1.gens)
    if (!radical_member(x, I2)) throw std::invalid_argument("radical mismatch: " + x.str());
  for (const auto& x : I2.gens)
    if (!radical_member(x, I1)) throw std::invalid_argument("radical mismatch: " + x.str());
  TheoremReport rep;
  rep.theorem = "radical_invariance";
  rep.depth = depth;
  auto r1 = six_conditions(M, I1, depth);
  auto r2 = six_conditions(M, I2, depth);
  for (std::size_t i = 0; i < r1.conditions.size(); ++i) {
    const auto& a = r1.conditions[i].verdict;
    const auto& b = r2.conditions[i].verdict;
    bool agree = !(certified(a) && certified(b) && a.is_holds() != b.is_holds());
    rep.conditions.push_back(
        {r1.conditions[i].id,
         agree ? Verdict::holds(depth, {}, "verdicts agree: " + a.kind_str())
               : Verdict::fails(depth, "generator sets disagree: " + a.kind_str() + " vs " +
                                           b.kind_str())});
    rep.discrepancy = rep.discrepancy || !agree;
  }
  if (rep.discrepancy) rep.note = "radical invariance violated";
  return rep;
}

} // namespace adicert

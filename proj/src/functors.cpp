#include "adicert/functors.hpp"

#include <algorithm>
#include <stdexcept>

namespace adicert {

namespace {

/// Rows spanning I*M inside M (empty set of rows for the zero ideal).
RMat ideal_action_rows(const FpModule& M, const Ideal& I) {
  RMat rows;
  for (const auto& g : I.gens) {
    RMat block = map_mul_element(M, g).mat;
    rows.insert(rows.end(), block.begin(), block.end());
  }
  return rows;
}

std::map<int, RMat> identity_mats(const BoundedComplex& C) {
  std::map<int, RMat> mats;
  for (int d = C.lo(); d <= C.hi(); ++d)
    mats[d] = rmat_identity(C.ring(), C.mod(d).gens());
  return mats;
}

BoundedComplex quotient_complex(const BoundedComplex& C, const Ideal& In) {
  std::vector<FpModule> mods;
  std::vector<ModuleMap> diffs;
  for (int d = C.lo(); d <= C.hi(); ++d) mods.push_back(quotient_by_ideal(C.mod(d), In).module);
  for (int d = C.lo() + 1; d <= C.hi(); ++d)
    diffs.push_back(ModuleMap::make(mods[(std::size_t)(d - C.lo())],
                                    mods[(std::size_t)(d - 1 - C.lo())], C.diff(d).mat));
  return BoundedComplex::make(C.ring(), C.lo(), std::move(mods), std::move(diffs));
}

} // namespace

ModuleTower adic_tower(const FpModule& M, const Ideal& I) {
  return ModuleTower(
      [M, I](int n) { return quotient_by_ideal(M, ideal_power(I, (unsigned)n)).module; },
      [M, I](int n) {
        auto s1 = quotient_by_ideal(M, ideal_power(I, (unsigned)(n + 1))).module;
        auto s0 = quotient_by_ideal(M, ideal_power(I, (unsigned)n)).module;
        return ModuleMap::make(s1, s0, rmat_identity(M.ring(), M.gens()));
      });
}

ComplexTower adic_tower_complex(const BoundedComplex& C, const Ideal& I) {
  return ComplexTower(
      [C, I](int n) { return quotient_complex(C, ideal_power(I, (unsigned)n)); },
      [C, I](int n) {
        auto s1 = quotient_complex(C, ideal_power(I, (unsigned)(n + 1)));
        auto s0 = quotient_complex(C, ideal_power(I, (unsigned)n));
        return ChainMap::make(s1, s0, identity_mats(C));
      });
}

CompletedTensor completed_tensor_tower(const FpModule& M, const FpModule& N, const Ideal& I,
                                       int depth) {
  FpModule T = tensor(M, N);
  CompletedTensor out{adic_tower(T, I), Verdict()};
  std::vector<std::pair<int, int>> w;
  for (int n = 1; n <= depth; ++n) {
    Ideal In = ideal_power(I, (unsigned)n);
    auto qm = quotient_by_ideal(M, In), qn = quotient_by_ideal(N, In);
    FpModule B = tensor(qm.module, qn.module);
    auto cmp = ModuleMap::make(out.tower.stage(n), B, tensor_maps(qm.map, qn.map).mat);
    if (!is_isomorphism(cmp)) {
      out.comparison = Verdict::fails(depth, "comparison to the levelwise tensor fails at stage " +
                                                 std::to_string(n));
      return out;
    }
    w.emplace_back(n, n);
  }
  out.comparison =
      Verdict::holds(depth, std::move(w), "levelwise tensor comparison is an isomorphism");
  return out;
}

LambdaTower derived_completion(const FpModule& M, const std::vector<RingElement>& xs) {
  const RingPtr& ring = M.ring();
  LambdaTower L;
  L.source = BoundedComplex::concentrated(M, 0);
  L.gens = xs;
  L.tower = ComplexTower(
      [ring, xs, M](int n) {
        return hom_into_module(koszul_complex(KoszulSpec::make(ring, xs, (unsigned)n)), M).cx;
      },
      [ring, xs, M](int n) {
        auto u = koszul_transition_directed(ring, xs, (unsigned)n);
        auto hs = hom_into_module(u.src(), M), ht = hom_into_module(u.tgt(), M);
        return hom_into_module_map(u, M, ht, hs);
      });
  BoundedComplex src = L.source;
  ComplexTower tower = L.tower;
  std::size_t g = M.gens();
  L.unit = [src, tower, ring, g](int n) {
    return ChainMap::make(src, tower.stage(n), {{0, rmat_identity(ring, g)}});
  };
  return L;
}

LambdaTower derived_completion_complex(const BoundedComplex& C,
                                       const std::vector<RingElement>& xs) {
  const RingPtr& ring = C.ring();
  FpModule R1 = FpModule::free_module(ring, 1);
  LambdaTower L;
  L.source = C;
  L.gens = xs;
  L.tower = ComplexTower(
      [ring, xs, R1, C](int n) {
        auto dual = hom_into_module(koszul_complex(KoszulSpec::make(ring, xs, (unsigned)n)), R1);
        return tensor_complexes(dual.cx, C);
      },
      [ring, xs, R1, C](int n) {
        auto u = koszul_transition_directed(ring, xs, (unsigned)n);
        auto hs = hom_into_module(u.src(), R1), ht = hom_into_module(u.tgt(), R1);
        return tensor_chain_maps(hom_into_module_map(u, R1, ht, hs), ChainMap::identity(C));
      });
  L.unit = [ring, xs, R1, C](int n) {
    auto dual = hom_into_module(koszul_complex(KoszulSpec::make(ring, xs, (unsigned)n)), R1);
    auto unitc = BoundedComplex::concentrated(R1, 0);
    auto incl = ChainMap::make(unitc, dual.cx, {{0, {{ring->one()}}}});
    auto t = tensor_chain_maps(incl, ChainMap::identity(C));
    auto pre = ChainMap::make(C, t.src(), identity_mats(C));
    return pre.then(t);
  };
  return L;
}

ComplexIndSystem derived_torsion(const FpModule& M, const std::vector<RingElement>& xs) {
  const RingPtr& ring = M.ring();
  return ComplexIndSystem(
      [ring, xs, M](int n) {
        return tensor_with_module(koszul_complex(KoszulSpec::make(ring, xs, (unsigned)n)), M);
      },
      [ring, xs, M](int n) {
        return tensor_chain_with_module(koszul_transition_directed(ring, xs, (unsigned)n), M);
      });
}

ComplexIndSystem derived_torsion_complex(const BoundedComplex& C,
                                         const std::vector<RingElement>& xs) {
  const RingPtr& ring = C.ring();
  return ComplexIndSystem(
      [ring, xs, C](int n) {
        return tensor_complexes(koszul_complex(KoszulSpec::make(ring, xs, (unsigned)n)), C);
      },
      [ring, xs, C](int n) {
        return tensor_chain_maps(koszul_transition_directed(ring, xs, (unsigned)n),
                                 ChainMap::identity(C));
      });
}

Verdict lambda_pro_iso(const LambdaTower& L, int depth) {
  BoundedComplex S = L.source;
  ComplexTower srcT([S](int) { return S; }, [S](int) { return ChainMap::identity(S); });
  int dlo = S.lo();
  int dhi = S.hi() + (int)L.gens.size();
  std::vector<Verdict> parts;
  for (int d = dlo; d <= dhi; ++d) {
    auto unit = L.unit;
    TowerMap f{homology_tower(srcT, d), homology_tower(L.tower, d),
               [unit, d](int n) { return induced_map(unit(n), d); }};
    auto v = pro_iso(f, depth);
    if (!v.note.empty()) v.note = "degree " + std::to_string(d) + ": " + v.note;
    parts.push_back(v);
  }
  return verdict_all(parts, depth);
}

LFunctorReport l_functor(const FpModule& M, const Ideal& I, int n, int depth) {
  LFunctorReport rep;
  rep.n = n;
  rep.depth = depth;
  if (I.is_zero()) {
    rep.verdict = Verdict::holds(depth, {}, "zero ideal: completion is the identity");
    if (n == 0) {
      rep.has_value = true;
      rep.value = M;
    }
    return rep;
  }
  auto L = derived_completion(M, I.gens);
  if (n >= 1) {
    rep.verdict = pro_zero_interleaved(homology_tower(L.tower, n), depth);
    return rep;
  }
  auto H0 = homology_tower(L.tower, 0);
  auto A = adic_tower(M, I);
  ComplexTower lam = L.tower;
  TowerMap f{H0, A, [lam, H0, A](int m) {
               auto hd = homology(lam.stage(m), 0);
               return ModuleMap::make(H0.stage(m), A.stage(m), hd.ker.map.mat);
             }};
  rep.verdict = pro_iso(f, depth);
  auto ml = ml_lim_diagnostics(H0, depth);
  if (ml.eventually_constant) {
    rep.has_value = true;
    rep.value = ml.lim;
  }
  return rep;
}

namespace {

long total_degree(const Monomial& m) {
  long d = 0;
  for (auto e : m.e) d += (long)e;
  return d;
}

bool is_homogeneous(const MPoly& p, long* deg_out = nullptr) {
  long d0 = -1;
  for (const auto& t : p.t) {
    long d = total_degree(t.m);
    if (d0 < 0) d0 = d;
    else if (d != d0) return false;
  }
  if (deg_out) *deg_out = d0;
  return true;
}

mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Verdict separated_verdict(const FpModule& M, const Ideal& I, int depth) {
  if (I.is_zero()) return Verdict::holds(depth, {}, "zero ideal: the adic filtration is constant");
  const RingPtr& ring = M.ring();
  if (ring->is_euclidean()) {
    mpz_class g = 0;
    for (const auto& x : I.gens) g = gcd_z(g, x.z);
    if (ring->kind() == Ring::Kind::IntegersMod) g = gcd_z(g, ring->modulus());
    if (g == 1)
      return M.is_zero()
                 ? Verdict::holds(depth, {}, "unit ideal on the zero module")
                 : Verdict::fails(depth, "unit ideal: every element lies in every I^nM");
    ZMat A;
    for (const auto& r : M.rels()) {
      ZRow row;
      for (const auto& e : r) row.push_back(e.z);
      A.push_back(row);
    }
    if (ring->kind() == Ring::Kind::IntegersMod)
      for (std::size_t j = 0; j < M.gens(); ++j) {
        ZRow row(M.gens(), 0);
        row[j] = ring->modulus();
        A.push_back(row);
      }
    auto inv = smith_invariants(A, M.gens());
    for (const auto& d : inv) {
      if (d == 0 || d == 1) continue;
      mpz_class D = d;
      for (;;) {
        mpz_class t = gcd_z(D, g);
        if (t == 1) break;
        D /= t;
      }
      if (D < 0) D = -D;
      if (D != 1)
        return Verdict::fails(depth, "invariant factor " + d.get_str() +
                                         " has a torsion part prime to the ideal");
    }
    return Verdict::holds(depth, {}, "structure theory over a euclidean base");
  }
  // positively graded case: homogeneous generators of positive degree over
  // a ring whose defining relations are homogeneous
  bool graded = true;
  for (const auto& x : I.gens) {
    long d = -1;
    if (!is_homogeneous(x.p, &d) || d < 1) graded = false;
  }
  for (const auto& q : ring->defining_basis())
    if (!is_homogeneous(q)) graded = false;
  if (graded)
    return Verdict::holds(depth, {},
                          "positively graded: I^nM vanishes in each bounded degree range");
  return Verdict::undetermined(depth, "separatedness undecided outside the euclidean and "
                                      "positively graded scopes");
}

Verdict complete_verdict(const FpModule& M, const Ideal& I, int depth, const Verdict& sep) {
  if (I.is_zero()) return Verdict::holds(depth, {}, "zero ideal: the canonical map is the identity");
  for (int N = 1; N <= depth; ++N) {
    Ideal In = ideal_power(I, (unsigned)N);
    bool nil = true;
    for (const auto& g : In.gens)
      if (!is_zero_map(map_mul_element(M, g))) {
        nil = false;
        break;
      }
    if (nil)
      return Verdict::holds(depth, {{N, N}},
                            "I^" + std::to_string(N) + " annihilates M: the tower is constant");
  }
  if (sep.is_fails()) return Verdict::fails(depth, "not separated, so the canonical map is not injective");
  RMat prev = rmat_identity(M.ring(), M.gens());
  bool strict = true;
  for (int n = 1; n <= depth; ++n) {
    RMat cur = ideal_action_rows(M, ideal_power(I, (unsigned)n));
    if (same_submodule(M, prev, cur)) {
      strict = false;
      break;
    }
    prev = cur;
  }
  if (strict)
    return Verdict::fails(depth, "the chain I^nM strictly decreases through the window, so the "
                                 "canonical map is not surjective onto the limit");
  return Verdict::undetermined(depth, "no nilpotence certificate within depth");
}

Verdict l0_verdict(const FpModule& M, const Ideal& I, int depth,
                   std::vector<std::string>& evidence) {
  if (I.is_zero()) return Verdict::holds(depth, {}, "zero ideal");
  std::vector<Verdict> parts;
  for (const auto& x : I.gens) {
    int stable = -1;
    for (int s = 0; s + 1 <= depth; ++s) {
      RMat a = map_mul_element(M, x.pow((unsigned long)s)).mat;
      RMat b = map_mul_element(M, x.pow((unsigned long)(s + 1))).mat;
      if (same_submodule(M, a, b)) {
        stable = s;
        break;
      }
    }
    if (stable < 0) {
      parts.push_back(Verdict::fails(depth, "image chain for " + x.str() +
                                                " does not stabilize within depth"));
      evidence.push_back(x.str() + ": chain x^nM strictly decreasing up to depth");
      continue;
    }
    RMat w = map_mul_element(M, x.pow((unsigned long)stable)).mat;
    bool zero = true;
    for (const auto& row : w)
      if (!M.elem_is_zero(row)) {
        zero = false;
        break;
      }
    if (zero) {
      parts.push_back(Verdict::holds(depth, {{stable, stable + 1}},
                                     "chain for " + x.str() + " stabilizes at zero"));
      evidence.push_back(x.str() + ": x^" + std::to_string(stable) + "M = 0");
    } else {
      parts.push_back(Verdict::fails(depth, "stable " + x.str() +
                                                "-divisible submodule is nonzero"));
      evidence.push_back(x.str() + ": nonzero x-divisible submodule from exponent " +
                         std::to_string(stable));
    }
  }
  return verdict_all(parts, depth);
}

bool certified(const Verdict& v) { return v.kind != Verdict::Kind::Undetermined; }

} // namespace

CompletionProfile completeness_profile(const FpModule& M, const Ideal& I, int depth) {
  CompletionProfile p;
  p.depth = depth;
  p.separated = separated_verdict(M, I, depth);
  p.adically_complete = complete_verdict(M, I, depth, p.separated);
  p.l0_complete = l0_verdict(M, I, depth, p.generator_evidence);
  if (I.is_zero())
    p.derived_complete = Verdict::holds(depth, {}, "zero ideal: the unit is the identity");
  else
    p.derived_complete = lambda_pro_iso(derived_completion(M, I.gens), depth);
  if (p.adically_complete.is_holds()) {
    if (certified(p.separated) && !p.separated.is_holds()) p.implications_ok = false;
    if (certified(p.l0_complete) && !p.l0_complete.is_holds()) p.implications_ok = false;
  }
  if (p.l0_complete.is_holds() && certified(p.derived_complete) &&
      !p.derived_complete.is_holds())
    p.implications_ok = false;
  return p;
}

} // namespace adicert

#include "adicert/towers.hpp"

#include <stdexcept>

namespace adicert {

Verdict Verdict::holds(int depth, std::vector<std::pair<int, int>> w, std::string note) {
  Verdict v;
  v.kind = Kind::Holds;
  v.depth = depth;
  v.witnesses = std::move(w);
  v.note = std::move(note);
  return v;
}

Verdict Verdict::fails(int depth, std::string note) {
  Verdict v;
  v.kind = Kind::FailsUpToDepth;
  v.depth = depth;
  v.note = std::move(note);
  return v;
}

Verdict Verdict::undetermined(int depth, std::string note) {
  Verdict v;
  v.kind = Kind::Undetermined;
  v.depth = depth;
  v.note = std::move(note);
  return v;
}

std::string Verdict::kind_str() const {
  switch (kind) {
    case Kind::Holds: return "holds";
    case Kind::FailsUpToDepth: return "fails_up_to_depth";
    case Kind::Undetermined: return "undetermined";
  }
  return "undetermined";
}

Verdict verdict_all(const std::vector<Verdict>& parts, int depth) {
  bool any_fails = false, any_und = false;
  std::vector<std::pair<int, int>> w;
  std::string note;
  for (const auto& p : parts) {
    any_fails = any_fails || p.is_fails();
    any_und = any_und || (p.kind == Verdict::Kind::Undetermined);
    w.insert(w.end(), p.witnesses.begin(), p.witnesses.end());
    if (!p.note.empty()) {
      if (!note.empty()) note += "; ";
      note += p.note;
    }
  }
  if (any_fails) return Verdict::fails(depth, note);
  if (any_und) return Verdict::undetermined(depth, note);
  return Verdict::holds(depth, std::move(w), note);
}

ModuleTower constant_module_tower(const FpModule& M) {
  return ModuleTower([M](int) { return M; },
                     [M](int) { return ModuleMap::identity(M); });
}

ModuleMap tower_composite(const ModuleTower& T, int m, int n) {
  if (m < n) throw std::invalid_argument("tower composite needs m >= n");
  ModuleMap f = ModuleMap::identity(T.stage(m));
  for (int k = m - 1; k >= n; --k) f = f.then(T.transition(k));
  return f;
}

ModuleMap ind_composite(const ModuleIndSystem& S, int n, int m) {
  if (n > m) throw std::invalid_argument("ind composite needs n <= m");
  ModuleMap f = ModuleMap::identity(S.stage(n));
  for (int k = n; k < m; ++k) f = f.then(S.transition(k));
  return f;
}

ChainMap complex_tower_composite(const ComplexTower& T, int m, int n) {
  if (m < n) throw std::invalid_argument("tower composite needs m >= n");
  ChainMap f = ChainMap::identity(T.stage(m));
  for (int k = m - 1; k >= n; --k) f = f.then(T.transition(k));
  return f;
}

TowerMap constant_to_tower(const FpModule& M, const ModuleTower& T,
                           std::function<ModuleMap(int)> comp) {
  return TowerMap{constant_module_tower(M), T, std::move(comp)};
}

ModuleTower homology_tower(const ComplexTower& T, int degree) {
  return ModuleTower(
      [T, degree](int n) { return homology_module(T.stage(n), degree); },
      [T, degree](int n) { return induced_map(T.transition(n), degree); });
}

ModuleIndSystem homology_ind(const ComplexIndSystem& S, int degree) {
  return ModuleIndSystem(
      [S, degree](int n) { return homology_module(S.stage(n), degree); },
      [S, degree](int n) { return induced_map(S.transition(n), degree); });
}

Verdict pro_zero(const ModuleTower& T, int depth) {
  std::vector<std::pair<int, int>> witnesses;
  for (int n = 1; n < depth; ++n) {
    if (T.stage(n).is_zero()) {
      witnesses.emplace_back(n, n);
      continue;
    }
    int found = -1;
    for (int m = n + 1; m <= depth; ++m)
      if (is_zero_map(tower_composite(T, m, n))) {
        found = m;
        break;
      }
    if (found < 0)
      return Verdict::fails(depth, "stage " + std::to_string(n) +
                                       " receives a nonzero composite from stage " +
                                       std::to_string(depth));
    witnesses.emplace_back(n, found);
  }
  return Verdict::holds(depth, std::move(witnesses));
}

Verdict ind_zero(const ModuleIndSystem& S, int depth) {
  std::vector<std::pair<int, int>> witnesses;
  for (int n = 1; n < depth; ++n) {
    if (S.stage(n).is_zero()) {
      witnesses.emplace_back(n, n);
      continue;
    }
    int found = -1;
    for (int m = n + 1; m <= depth; ++m)
      if (is_zero_map(ind_composite(S, n, m))) {
        found = m;
        break;
      }
    if (found < 0)
      return Verdict::fails(depth, "a generator of stage " + std::to_string(n) +
                                       " survives to stage " + std::to_string(depth));
    witnesses.emplace_back(n, found);
  }
  return Verdict::holds(depth, std::move(witnesses));
}

Verdict pro_zero_interleaved(const ModuleTower& T, int depth) {
  for (int e = 1; e < depth; ++e) {
    bool ok = true;
    std::vector<std::pair<int, int>> w;
    for (int n = 1; n + e <= depth; ++n) {
      if (!is_zero_map(tower_composite(T, n + e, n))) {
        ok = false;
        break;
      }
      w.emplace_back(n, n + e);
    }
    if (ok)
      return Verdict::holds(depth, std::move(w),
                            "interleaving shift " + std::to_string(e));
  }
  return Verdict::fails(depth,
                        "no interleaving shift within depth gives vanishing composites");
}

namespace {

void check_squares(const TowerMap& f, int depth) {
  for (int n = 1; n < depth; ++n) {
    auto left = f.src.transition(n).then(f.comp(n));
    auto right = f.comp(n + 1).then(f.tgt.transition(n));
    if (!maps_equal(left, right))
      throw std::invalid_argument("levelwise maps do not commute with the transitions");
  }
}

} // namespace

ModuleTower kernel_tower(const TowerMap& f) {
  return ModuleTower(
      [f](int n) { return kernel(f.comp(n)).module; },
      [f](int n) {
        auto kn = kernel(f.comp(n)), kn1 = kernel(f.comp(n + 1));
        auto into = factor_through(kn.map, kn1.map.then(f.src.transition(n)));
        return ModuleMap::make(kn1.module, kn.module, into.mat);
      });
}

ModuleTower cokernel_tower(const TowerMap& f) {
  return ModuleTower(
      [f](int n) { return cokernel(f.comp(n)).module; },
      [f](int n) {
        auto cn = cokernel(f.comp(n)), cn1 = cokernel(f.comp(n + 1));
        // cokernel generators are the target stage's generators
        return ModuleMap::make(cn1.module, cn.module, f.tgt.transition(n).mat);
      });
}

Verdict pro_iso(const TowerMap& f, int depth) {
  check_squares(f, depth);
  auto kv = pro_zero_interleaved(kernel_tower(f), depth);
  auto cv = pro_zero_interleaved(cokernel_tower(f), depth);
  auto v = verdict_all({kv, cv}, depth);
  if (v.is_fails())
    v.note = std::string(kv.is_fails() ? "kernel tower survives" : "cokernel tower survives") +
             (v.note.empty() ? "" : "; " + v.note);
  return v;
}

bool same_submodule(const FpModule& M, const RMat& A, const RMat& B) {
  SpanSolver SA(M.ring(), rmat_vstack(A, M.rels()), M.gens());
  for (const auto& b : B)
    if (!SA.member(b)) return false;
  SpanSolver SB(M.ring(), rmat_vstack(B, M.rels()), M.gens());
  for (const auto& a : A)
    if (!SB.member(a)) return false;
  return true;
}

MlReport ml_lim_diagnostics(const ModuleTower& T, int depth) {
  MlReport rep;
  std::vector<std::pair<int, int>> witnesses;
  Verdict::Kind overall = Verdict::Kind::Holds;
  for (int n = 1; n < depth; ++n) {
    // decreasing chain of images im(stage(m) -> stage(n)), m = n..depth
    RMat last = tower_composite(T, depth, n).mat;
    int stable = -1;
    bool strict_all = true;
    for (int m = n; m < depth; ++m) {
      RMat im_m = tower_composite(T, m, n).mat;
      bool eq = same_submodule(T.stage(n), im_m, last);
      if (eq && stable < 0) stable = m;
      RMat im_next = tower_composite(T, m + 1, n).mat;
      if (same_submodule(T.stage(n), im_m, im_next)) strict_all = false;
    }
    if (stable >= 0 && stable < depth) {
      witnesses.emplace_back(n, stable);
    } else if (strict_all) {
      overall = Verdict::Kind::FailsUpToDepth;
    } else if (overall == Verdict::Kind::Holds) {
      overall = Verdict::Kind::Undetermined;
    }
  }
  if (overall == Verdict::Kind::Holds)
    rep.ml = Verdict::holds(depth, witnesses, "image chains stabilize in the window");
  else if (overall == Verdict::Kind::FailsUpToDepth)
    rep.ml = Verdict::fails(depth, "an image chain decreases strictly through the window");
  else
    rep.ml = Verdict::undetermined(depth, "image chain not stabilized within depth");
  if (rep.ml.is_holds())
    rep.lim1_zero = Verdict::holds(depth, {}, "Mittag-Leffler certified");
  else
    rep.lim1_zero = Verdict::undetermined(
        depth, "ML not certified; for countable towers of f.g. modules persistent ML failure "
               "forces nonvanishing lim^1");
  // eventually constant: all transitions isomorphisms from some index on
  int from = -1;
  for (int n = 1; n < depth; ++n) {
    bool tail_iso = true;
    for (int m = n; m < depth; ++m)
      if (!is_isomorphism(T.transition(m))) {
        tail_iso = false;
        break;
      }
    if (tail_iso) {
      from = n;
      break;
    }
  }
  if (from > 0) {
    rep.eventually_constant = true;
    rep.stable_from = from;
    rep.lim = T.stage(from);
  }
  return rep;
}

} // namespace adicert

#include "adicert/resolution.hpp"

#include <algorithm>
#include <stdexcept>

namespace adicert {

namespace {

void place_block(RMat& big, std::size_t roff, std::size_t coff, const RMat& block) {
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = 0; j < block[i].size(); ++j) big[roff + i][coff + j] = block[i][j];
}

} // namespace

FreeResolution free_resolution(const FpModule& M, int max_len) {
  const auto& ring = M.ring();
  FreeResolution R;
  std::vector<FpModule> mods{FpModule::free_module(ring, M.gens())};
  std::vector<ModuleMap> diffs;
  R.aug = ModuleMap::make(mods[0], M, rmat_identity(ring, M.gens()));
  RMat rows = M.rels();
  std::size_t ambient = M.gens();
  R.complete = false;
  for (int k = 1; k <= max_len; ++k) {
    if (rows.empty()) {
      R.complete = true;
      break;
    }
    FpModule Fk = FpModule::free_module(ring, rows.size());
    diffs.push_back(ModuleMap::make(Fk, mods.back(), rows));
    mods.push_back(Fk);
    SpanSolver S(ring, rows, ambient);
    ambient = rows.size();
    rows = S.syzygies();
  }
  if (rows.empty()) R.complete = true;
  R.cx = BoundedComplex::make(ring, 0, mods, diffs);
  return R;
}

FreeResolution horseshoe(const FreeResolution& FA, const ModuleMap& incl,
                         const ModuleMap& proj, const FreeResolution& FC) {
  const auto& ring = incl.src.ring();
  auto minus_one = ring->from_int(-1);
  int len = std::max(FA.cx.hi(), FC.cx.hi());
  // sigma lifts the C-augmentation through the surjection X ->> C
  auto sigma = lift_along(proj, FC.aug);
  // correction maps tau_q : FC_q -> FA_{q-1} making the twisted sum a complex
  std::vector<ModuleMap> tau; // tau[q-1] holds tau_q
  for (int q = 1; q <= len; ++q) {
    if (q == 1) {
      auto eta = FC.cx.diff(1).then(sigma);
      auto g = factor_through(incl, map_scale(minus_one, eta));
      tau.push_back(lift_along(FA.aug, g));
    } else {
      auto w = map_scale(minus_one, FC.cx.diff(q).then(tau[(std::size_t)q - 2]));
      tau.push_back(lift_along(FA.cx.diff(q - 1), w));
    }
  }
  std::vector<FpModule> mods;
  for (int q = 0; q <= len; ++q)
    mods.push_back(direct_sum({FA.cx.mod(q), FC.cx.mod(q)}).module);
  std::vector<ModuleMap> diffs;
  for (int q = 1; q <= len; ++q) {
    const FpModule &S = mods[(std::size_t)q], &T = mods[(std::size_t)q - 1];
    RMat m = rmat_zero(ring, S.gens(), T.gens());
    place_block(m, 0, 0, FA.cx.diff(q).mat);
    place_block(m, FA.cx.mod(q).gens(), 0, tau[(std::size_t)q - 1].mat);
    place_block(m, FA.cx.mod(q).gens(), FA.cx.mod(q - 1).gens(), FC.cx.diff(q).mat);
    diffs.push_back(ModuleMap::make(S, T, m));
  }
  FreeResolution R;
  R.cx = BoundedComplex::make(ring, 0, mods, diffs);
  RMat am = rmat_zero(ring, mods[0].gens(), incl.tgt.gens());
  place_block(am, 0, 0, FA.aug.then(incl).mat);
  place_block(am, FA.cx.mod(0).gens(), 0, sigma.mat);
  R.aug = ModuleMap::make(mods[0], incl.tgt, am);
  R.complete = FA.complete && FC.complete;
  return R;
}

FreeReplacement free_replacement(const BoundedComplex& C, int max_len) {
  const auto& ring = C.ring();
  bool all_free = true;
  for (int n = C.lo(); n <= C.hi(); ++n) all_free = all_free && C.mod(n).is_free_presentation();
  if (all_free) return {C, ChainMap::identity(C), true};

  int lo = C.lo(), hi = C.hi();
  auto idx = [&](int p) { return (std::size_t)(p - lo + 1); }; // slot 0 holds p = lo-1
  // boundary images B_p = im(d_{p+1}) inside C_p, for p in [lo-1, hi]
  std::vector<SubquotientPart> B;
  std::vector<FreeResolution> resB;
  for (int p = lo - 1; p <= hi; ++p) {
    B.push_back(image(C.diff(p + 1)));
    resB.push_back(free_resolution(B.back().module, max_len));
  }
  std::vector<FreeResolution> resC;
  bool complete = true;
  for (int p = lo; p <= hi; ++p) {
    auto Z = kernel(C.diff(p));
    auto ibz = factor_through(Z.map, B[idx(p)].map);
    auto H = cokernel(ibz);
    auto resH = free_resolution(H.module, max_len);
    auto resZ = horseshoe(resB[idx(p)], ibz, H.map, resH);
    // C_p ->> B_{p-1}: the image presentation reuses the generators of C_p
    auto projB = ModuleMap::make(C.mod(p), B[idx(p) - 1].module,
                                 rmat_identity(ring, C.mod(p).gens()));
    resC.push_back(horseshoe(resZ, Z.map, projB, resB[idx(p) - 1]));
    complete = complete && resC.back().complete && resH.complete;
  }
  auto zgens = [&](int p, int q) {
    // generator count of the Z-block (first block) of resC[p] in degree q
    return resC[(std::size_t)(p - lo)].cx.mod(q).gens() - resB[idx(p) - 1].cx.mod(q).gens();
  };

  int hiT = lo;
  for (int p = lo; p <= hi; ++p) hiT = std::max(hiT, p + resC[(std::size_t)(p - lo)].cx.hi());
  struct Layout {
    std::vector<int> ps;
    std::vector<std::size_t> offset;
    std::size_t total = 0;
  };
  std::vector<Layout> layouts;
  std::vector<FpModule> mods;
  for (int m = lo; m <= hiT; ++m) {
    Layout L;
    std::vector<FpModule> parts;
    for (int p = lo; p <= std::min(m, hi); ++p) {
      int q = m - p;
      if (q > resC[(std::size_t)(p - lo)].cx.hi()) continue;
      L.ps.push_back(p);
      L.offset.push_back(L.total);
      FpModule part = resC[(std::size_t)(p - lo)].cx.mod(q);
      L.total += part.gens();
      parts.push_back(part);
    }
    mods.push_back(parts.empty() ? FpModule::zero_module(ring) : direct_sum(parts).module);
    layouts.push_back(L);
  }
  std::vector<ModuleMap> diffs;
  for (int m = lo + 1; m <= hiT; ++m) {
    const auto& L = layouts[(std::size_t)(m - lo)];
    const auto& Lp = layouts[(std::size_t)(m - lo - 1)];
    const FpModule &S = mods[(std::size_t)(m - lo)], &T = mods[(std::size_t)(m - lo - 1)];
    RMat mat = rmat_zero(ring, S.gens(), T.gens());
    auto off_of = [&](const Layout& lay, int p) {
      for (std::size_t a = 0; a < lay.ps.size(); ++a)
        if (lay.ps[a] == p) return std::make_pair(true, lay.offset[a]);
      return std::make_pair(false, (std::size_t)0);
    };
    for (std::size_t a = 0; a < L.ps.size(); ++a) {
      int p = L.ps[a], q = m - p;
      const auto& col = resC[(std::size_t)(p - lo)];
      // vertical: (-1)^p d^{res}
      if (auto [ok, off] = off_of(Lp, p); ok && q >= 1) {
        RMat blk = col.cx.diff(q).mat;
        if (p % 2 != 0) blk = rmat_neg(blk);
        place_block(mat, L.offset[a], off, blk);
      }
      // horizontal: identity from the B_{p-1} block onto the head of resC[p-1]
      if (auto [ok, off] = off_of(Lp, p - 1); ok) {
        std::size_t bg = resB[idx(p) - 1].cx.mod(q).gens();
        std::size_t src_off = L.offset[a] + (std::size_t)zgens(p, q);
        for (std::size_t i = 0; i < bg; ++i) mat[src_off + i][off + i] = ring->one();
      }
    }
    diffs.push_back(ModuleMap::make(S, T, mat));
  }
  BoundedComplex F = BoundedComplex::make(ring, lo, mods, diffs);
  std::map<int, RMat> augmats;
  for (int p = lo; p <= hi; ++p) {
    const auto& L = layouts[(std::size_t)(p - lo)];
    RMat am = rmat_zero(ring, F.mod(p).gens(), C.mod(p).gens());
    if (auto it = std::find(L.ps.begin(), L.ps.end(), p); it != L.ps.end()) {
      std::size_t off = L.offset[(std::size_t)(it - L.ps.begin())];
      place_block(am, off, 0, resC[(std::size_t)(p - lo)].aug.mat);
    }
    augmats[p] = am;
  }
  FreeReplacement out;
  out.cx = F;
  out.aug = ChainMap::make(F, C, augmats);
  out.complete = complete;
  return out;
}

bool is_quasi_iso(const ChainMap& f) {
  int lo = std::min(f.src().lo(), f.tgt().lo()), hi = std::max(f.src().hi(), f.tgt().hi());
  for (int n = lo; n <= hi; ++n)
    if (!is_isomorphism(induced_map(f, n))) return false;
  return true;
}

DerivedFunctors derived_binary(const FpModule& M, const FpModule& N, int max_i) {
  auto R = free_resolution(M, max_i + 1);
  DerivedFunctors out;
  auto TN = tensor_with_module(R.cx, N);
  auto EN = hom_into_module(R.cx, N);
  for (int i = 0; i <= max_i; ++i) {
    out.tor.push_back(homology_module(TN, i));
    out.ext.push_back(homology_module(EN.cx, -i));
  }
  return out;
}

} // namespace adicert

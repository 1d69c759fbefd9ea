#include "adicert/complexes.hpp"

#include <stdexcept>

namespace adicert {

namespace {

RingElement sign_of(const RingPtr& ring, int k) {
  return ring->from_int((k % 2 == 0) ? 1 : -1);
}

void place_block(RMat& big, std::size_t roff, std::size_t coff, const RMat& block) {
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = 0; j < block[i].size(); ++j) big[roff + i][coff + j] = block[i][j];
}

/// Product with explicit shapes, safe when any dimension is zero.
RMat mul_shaped(const RingPtr& ring, const RMat& A, std::size_t r, std::size_t k,
                const RMat& B, std::size_t c) {
  RMat out = rmat_zero(ring, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t m = 0; m < k; ++m) {
      if (A[i][m].is_zero()) continue;
      for (std::size_t j = 0; j < c; ++j) out[i][j] = out[i][j] + A[i][m] * B[m][j];
    }
  return out;
}

} // namespace

// --- BoundedComplex -------------------------------------------------------

BoundedComplex BoundedComplex::make(const RingPtr& ring, int lo, std::vector<FpModule> mods,
                                    std::vector<ModuleMap> diffs) {
  if (mods.empty()) throw std::invalid_argument("complex needs at least one degree");
  if (diffs.size() + 1 != mods.size())
    throw std::invalid_argument("complex needs one differential per adjacent pair");
  BoundedComplex C;
  C.ring_ = ring;
  C.lo_ = lo;
  C.mods_ = std::move(mods);
  C.diffs_ = std::move(diffs);
  for (const auto& M : C.mods_)
    if (!Ring::same(M.ring(), ring)) throw std::invalid_argument("complex module over wrong ring");
  for (std::size_t i = 0; i < C.diffs_.size(); ++i) {
    if (!C.diffs_[i].src.same_presentation(C.mods_[i + 1]) ||
        !C.diffs_[i].tgt.same_presentation(C.mods_[i]))
      throw std::invalid_argument("differential endpoints disagree with the modules");
    if (i + 1 < C.diffs_.size() && !is_zero_map(C.diffs_[i + 1].then(C.diffs_[i])))
      throw std::invalid_argument("d compose d is nonzero");
  }
  return C;
}

BoundedComplex BoundedComplex::concentrated(const FpModule& M, int deg) {
  return make(M.ring(), deg, {M}, {});
}

BoundedComplex BoundedComplex::two_term(const ModuleMap& f, int deg) {
  return make(f.src.ring(), deg - 1, {f.tgt, f.src}, {f});
}

FpModule BoundedComplex::mod(int n) const {
  if (n < lo_ || n > hi()) return FpModule::zero_module(ring_);
  return mods_[(std::size_t)(n - lo_)];
}

ModuleMap BoundedComplex::diff(int n) const {
  if (n > lo_ && n <= hi()) return diffs_[(std::size_t)(n - lo_ - 1)];
  return ModuleMap::zero(mod(n), mod(n - 1));
}

// --- ChainMap -------------------------------------------------------------

ChainMap ChainMap::make(const BoundedComplex& src, const BoundedComplex& tgt,
                        const std::map<int, RMat>& mats) {
  ChainMap f;
  f.src_ = src;
  f.tgt_ = tgt;
  for (int n = src.lo(); n <= src.hi(); ++n) {
    auto it = mats.find(n);
    if (it != mats.end())
      f.comps_.emplace(n, ModuleMap::make(src.mod(n), tgt.mod(n), it->second));
  }
  for (const auto& [n, m] : mats)
    if ((n < src.lo() || n > src.hi()) && !m.empty())
      throw std::invalid_argument("chain map component outside the source's range");
  int lo = std::min(src.lo(), tgt.lo()), hi = std::max(src.hi(), tgt.hi());
  for (int n = lo; n <= hi + 1; ++n)
    if (!maps_equal(src.diff(n).then(f.comp(n - 1)), f.comp(n).then(tgt.diff(n))))
      throw std::invalid_argument("chain map does not commute with the differentials");
  return f;
}

ChainMap ChainMap::identity(const BoundedComplex& C) {
  std::map<int, RMat> mats;
  for (int n = C.lo(); n <= C.hi(); ++n) mats[n] = rmat_identity(C.ring(), C.mod(n).gens());
  return make(C, C, mats);
}

ChainMap ChainMap::zero(const BoundedComplex& src, const BoundedComplex& tgt) {
  return make(src, tgt, {});
}

ModuleMap ChainMap::comp(int n) const {
  auto it = comps_.find(n);
  if (it != comps_.end()) return it->second;
  return ModuleMap::zero(src_.mod(n), tgt_.mod(n));
}

ChainMap ChainMap::then(const ChainMap& g) const {
  std::map<int, RMat> mats;
  for (int n = src_.lo(); n <= src_.hi(); ++n) mats[n] = comp(n).then(g.comp(n)).mat;
  return make(src_, g.tgt_, mats);
}

bool chain_maps_equal(const ChainMap& f, const ChainMap& g) {
  int lo = std::min(f.src().lo(), g.src().lo()), hi = std::max(f.src().hi(), g.src().hi());
  for (int n = lo; n <= hi; ++n)
    if (!maps_equal(f.comp(n), g.comp(n))) return false;
  return true;
}

bool is_zero_chain_map(const ChainMap& f) {
  for (int n = f.src().lo(); n <= f.src().hi(); ++n)
    if (!is_zero_map(f.comp(n))) return false;
  return true;
}

// --- homology -------------------------------------------------------------

HomologyData homology(const BoundedComplex& C, int n) {
  HomologyData h;
  h.ker = kernel(C.diff(n));
  auto g = lift_along(h.ker.map, C.diff(n + 1)); // C_{n+1} -> ker, exists since dd = 0
  auto c = cokernel(g);
  h.H = c.module;
  h.proj = c.map; // identity matrix on the kernel generators
  return h;
}

FpModule homology_module(const BoundedComplex& C, int n) { return homology(C, n).H; }

bool is_exact_at(const BoundedComplex& C, int n) { return homology_module(C, n).is_zero(); }

bool is_acyclic(const BoundedComplex& C) {
  for (int n = C.lo(); n <= C.hi(); ++n)
    if (!is_exact_at(C, n)) return false;
  return true;
}

ModuleMap induced_map(const ChainMap& f, int n) {
  auto hs = homology(f.src(), n), ht = homology(f.tgt(), n);
  auto into_ker = factor_through(ht.ker.map, hs.ker.map.then(f.comp(n)));
  // homology generators coincide with kernel generators on both sides
  return ModuleMap::make(hs.H, ht.H, into_ker.mat);
}

// --- constructions --------------------------------------------------------

BoundedComplex shift(const BoundedComplex& C, int k) {
  std::vector<FpModule> mods;
  std::vector<ModuleMap> diffs;
  for (int n = C.lo(); n <= C.hi(); ++n) mods.push_back(C.mod(n));
  for (int n = C.lo() + 1; n <= C.hi(); ++n)
    diffs.push_back(map_scale(sign_of(C.ring(), k), C.diff(n)));
  return BoundedComplex::make(C.ring(), C.lo() + k, mods, diffs);
}

BoundedComplex sum_complexes(const BoundedComplex& A, const BoundedComplex& B) {
  int lo = std::min(A.lo(), B.lo()), hi = std::max(A.hi(), B.hi());
  std::vector<FpModule> mods;
  std::vector<ModuleMap> diffs;
  for (int n = lo; n <= hi; ++n) mods.push_back(direct_sum({A.mod(n), B.mod(n)}).module);
  for (int n = lo + 1; n <= hi; ++n) {
    const FpModule &S = mods[(std::size_t)(n - lo)], &T = mods[(std::size_t)(n - lo - 1)];
    RMat m = rmat_zero(A.ring(), S.gens(), T.gens());
    place_block(m, 0, 0, A.diff(n).mat);
    place_block(m, A.mod(n).gens(), A.mod(n - 1).gens(), B.diff(n).mat);
    diffs.push_back(ModuleMap::make(S, T, m));
  }
  return BoundedComplex::make(A.ring(), lo, mods, diffs);
}

BoundedComplex cone(const ChainMap& f) {
  const auto& A = f.src();
  const auto& B = f.tgt();
  int lo = std::min(A.lo() + 1, B.lo()), hi = std::max(A.hi() + 1, B.hi());
  std::vector<FpModule> mods;
  for (int n = lo; n <= hi; ++n) mods.push_back(direct_sum({A.mod(n - 1), B.mod(n)}).module);
  std::vector<ModuleMap> diffs;
  auto minus_one = A.ring()->from_int(-1);
  for (int n = lo + 1; n <= hi; ++n) {
    const FpModule &S = mods[(std::size_t)(n - lo)], &T = mods[(std::size_t)(n - lo - 1)];
    RMat m = rmat_zero(A.ring(), S.gens(), T.gens());
    place_block(m, 0, 0, rmat_scale(minus_one, A.diff(n - 1).mat));
    place_block(m, 0, A.mod(n - 2).gens(), rmat_scale(minus_one, f.comp(n - 1).mat));
    place_block(m, A.mod(n - 1).gens(), A.mod(n - 2).gens(), B.diff(n).mat);
    diffs.push_back(ModuleMap::make(S, T, m));
  }
  return BoundedComplex::make(A.ring(), lo, mods, diffs);
}

namespace {

struct TensorLayout {
  std::vector<std::pair<int, int>> summands; // (p, q) with p ascending
  std::vector<std::size_t> offset;           // generator offset per summand
  std::size_t total = 0;
};

TensorLayout tensor_layout(const BoundedComplex& A, const BoundedComplex& B, int n) {
  TensorLayout L;
  for (int p = A.lo(); p <= A.hi(); ++p) {
    int q = n - p;
    if (q < B.lo() || q > B.hi()) continue;
    L.summands.emplace_back(p, q);
    L.offset.push_back(L.total);
    L.total += A.mod(p).gens() * B.mod(q).gens();
  }
  return L;
}

} // namespace

BoundedComplex tensor_complexes(const BoundedComplex& A, const BoundedComplex& B) {
  const auto& ring = A.ring();
  int lo = A.lo() + B.lo(), hi = A.hi() + B.hi();
  std::vector<FpModule> mods;
  std::vector<TensorLayout> layouts;
  for (int n = lo; n <= hi; ++n) {
    auto L = tensor_layout(A, B, n);
    std::vector<FpModule> parts;
    for (const auto& [p, q] : L.summands) parts.push_back(tensor(A.mod(p), B.mod(q)));
    mods.push_back(parts.empty() ? FpModule::zero_module(ring) : direct_sum(parts).module);
    layouts.push_back(L);
  }
  std::vector<ModuleMap> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    const auto& L = layouts[(std::size_t)(n - lo)];
    const auto& Lprev = layouts[(std::size_t)(n - lo - 1)];
    const FpModule &S = mods[(std::size_t)(n - lo)], &T = mods[(std::size_t)(n - lo - 1)];
    RMat m = rmat_zero(ring, S.gens(), T.gens());
    for (std::size_t a = 0; a < L.summands.size(); ++a) {
      auto [p, q] = L.summands[a];
      for (std::size_t b = 0; b < Lprev.summands.size(); ++b) {
        auto [p2, q2] = Lprev.summands[b];
        if (p2 == p - 1 && q2 == q) {
          auto blk = rmat_kron(A.diff(p).mat, A.mod(p - 1).gens(),
                               rmat_identity(ring, B.mod(q).gens()), B.mod(q).gens(), ring);
          place_block(m, L.offset[a], Lprev.offset[b], blk);
        } else if (p2 == p && q2 == q - 1) {
          auto blk = rmat_kron(rmat_identity(ring, A.mod(p).gens()), A.mod(p).gens(),
                               B.diff(q).mat, B.mod(q - 1).gens(), ring);
          place_block(m, L.offset[a], Lprev.offset[b], rmat_scale(sign_of(ring, p), blk));
        }
      }
    }
    diffs.push_back(ModuleMap::make(S, T, m));
  }
  return BoundedComplex::make(ring, lo, mods, diffs);
}

ChainMap tensor_chain_maps(const ChainMap& f, const ChainMap& g) {
  BoundedComplex S = tensor_complexes(f.src(), g.src());
  BoundedComplex T = tensor_complexes(f.tgt(), g.tgt());
  const auto& ring = S.ring();
  std::map<int, RMat> mats;
  for (int n = S.lo(); n <= S.hi(); ++n) {
    auto L = tensor_layout(f.src(), g.src(), n);
    auto Lt = tensor_layout(f.tgt(), g.tgt(), n);
    RMat m = rmat_zero(ring, S.mod(n).gens(), T.mod(n).gens());
    for (std::size_t a = 0; a < L.summands.size(); ++a) {
      auto [p, q] = L.summands[a];
      for (std::size_t b = 0; b < Lt.summands.size(); ++b) {
        if (Lt.summands[b] != std::make_pair(p, q)) continue;
        auto blk = rmat_kron(f.comp(p).mat, f.tgt().mod(p).gens(), g.comp(q).mat,
                             g.tgt().mod(q).gens(), ring);
        place_block(m, L.offset[a], Lt.offset[b], blk);
      }
    }
    mats[n] = m;
  }
  return ChainMap::make(S, T, mats);
}

BoundedComplex tensor_with_module(const BoundedComplex& C, const FpModule& M) {
  std::vector<FpModule> mods;
  std::vector<ModuleMap> diffs;
  for (int n = C.lo(); n <= C.hi(); ++n) mods.push_back(tensor(C.mod(n), M));
  for (int n = C.lo() + 1; n <= C.hi(); ++n)
    diffs.push_back(tensor_maps(C.diff(n), ModuleMap::identity(M)));
  return BoundedComplex::make(C.ring(), C.lo(), mods, diffs);
}

ChainMap tensor_chain_with_module(const ChainMap& f, const FpModule& M) {
  BoundedComplex S = tensor_with_module(f.src(), M), T = tensor_with_module(f.tgt(), M);
  std::map<int, RMat> mats;
  for (int n = f.src().lo(); n <= f.src().hi(); ++n)
    mats[n] = tensor_maps(f.comp(n), ModuleMap::identity(M)).mat;
  return ChainMap::make(S, T, mats);
}

// --- Hom into a module ----------------------------------------------------

RVec hom_coords(const HomModule& H, const FpModule& M, const FpModule& N, const RMat& matrix) {
  const auto& ring = M.ring();
  std::size_t gM = M.gens(), gN = N.gens();
  RMat rows;
  for (const auto& bm : H.basis_maps) {
    RVec row = rvec_zero(ring, gM * gN);
    for (std::size_t i = 0; i < gM; ++i)
      for (std::size_t j = 0; j < gN; ++j) row[i * gN + j] = bm[i][j];
    rows.push_back(row);
  }
  std::size_t nbasis = rows.size();
  for (std::size_t i = 0; i < gM; ++i)
    for (const auto& s : N.rels()) {
      RVec row = rvec_zero(ring, gM * gN);
      for (std::size_t j = 0; j < gN; ++j) row[i * gN + j] = s[j];
      rows.push_back(row);
    }
  SpanSolver S(ring, rows, gM * gN);
  RVec v = rvec_zero(ring, gM * gN);
  for (std::size_t i = 0; i < gM; ++i)
    for (std::size_t j = 0; j < gN; ++j) v[i * gN + j] = matrix[i][j];
  auto d = S.divide(v);
  if (!SpanSolver::all_zero(d.rem))
    throw std::invalid_argument("matrix is not a homomorphism in the hom presentation");
  return RVec(d.coeffs.begin(), d.coeffs.begin() + (long)nbasis);
}

HomComplexData hom_into_module(const BoundedComplex& C, const FpModule& X) {
  HomComplexData out;
  const auto& ring = C.ring();
  int lo = -C.hi(), hi = -C.lo();
  std::vector<FpModule> mods;
  for (int n = lo; n <= hi; ++n) {
    out.homs.emplace(n, hom(C.mod(-n), X));
    mods.push_back(out.homs.at(n).module);
  }
  std::vector<ModuleMap> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    const auto& Hn = out.homs.at(n);
    const auto& Hprev = out.homs.at(n - 1);
    auto d = C.diff(-n + 1); // C_{-n+1} -> C_{-n}
    auto sgn = sign_of(ring, n + 1); // -(-1)^n
    RMat m;
    for (const auto& bm : Hn.basis_maps) {
      RMat prod = mul_shaped(ring, d.mat, C.mod(-n + 1).gens(), C.mod(-n).gens(), bm, X.gens());
      m.push_back(hom_coords(Hprev, C.mod(-n + 1), X, rmat_scale(sgn, prod)));
    }
    diffs.push_back(ModuleMap::make(Hn.module, Hprev.module, m));
  }
  out.cx = BoundedComplex::make(ring, lo, mods, diffs);
  return out;
}

ChainMap hom_into_module_map(const ChainMap& u, const FpModule& X,
                             const HomComplexData& of_tgt, const HomComplexData& of_src) {
  const auto& ring = X.ring();
  std::map<int, RMat> mats;
  for (int n = of_tgt.cx.lo(); n <= of_tgt.cx.hi(); ++n) {
    const auto& Hn = of_tgt.homs.at(n);       // Hom(u.tgt()_{-n}, X)
    auto it = of_src.homs.find(n);            // Hom(u.src()_{-n}, X)
    if (it == of_src.homs.end()) continue;
    auto un = u.comp(-n); // u.src()_{-n} -> u.tgt()_{-n}
    RMat m;
    for (const auto& bm : Hn.basis_maps) {
      RMat prod = mul_shaped(ring, un.mat, u.src().mod(-n).gens(), u.tgt().mod(-n).gens(), bm,
                             X.gens());
      m.push_back(hom_coords(it->second, u.src().mod(-n), X, prod));
    }
    mats[n] = m;
  }
  return ChainMap::make(of_tgt.cx, of_src.cx, mats);
}

} // namespace adicert

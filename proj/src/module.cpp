#include "adicert/module.hpp"

#include <stdexcept>

namespace adicert {

namespace {

RMat mat_mul_dims(const RingPtr& ring, const RMat& A, std::size_t r, std::size_t k,
                  const RMat& B, std::size_t c) {
  RMat out(r, rvec_zero(ring, c));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t m = 0; m < k; ++m) {
      if (A[i][m].is_zero()) continue;
      for (std::size_t j = 0; j < c; ++j)
        out[i][j] = out[i][j] + A[i][m] * B[m][j];
    }
  return out;
}

void check_shape(const FpModule& src, const FpModule& tgt, const RMat& mat) {
  if (!Ring::same(src.ring(), tgt.ring()))
    throw std::invalid_argument("module map across different rings");
  if (mat.size() != src.gens()) throw std::invalid_argument("map matrix: wrong row count");
  for (const auto& row : mat)
    if (row.size() != tgt.gens()) throw std::invalid_argument("map matrix: wrong row length");
}

} // namespace

RVec rvec_zero(const RingPtr& ring, std::size_t n) { return RVec(n, ring->zero()); }

RMat rmat_identity(const RingPtr& ring, std::size_t n) {
  RMat m(n, rvec_zero(ring, n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = ring->one();
  return m;
}

RMat rmat_zero(const RingPtr& ring, std::size_t rows, std::size_t cols) {
  return RMat(rows, rvec_zero(ring, cols));
}

RMat rmat_mul(const RMat& A, const RMat& B) {
  if (A.empty()) return {};
  if (B.empty() || B[0].empty())
    throw std::invalid_argument("rmat_mul: shape not inferable, use module-level composition");
  return mat_mul_dims(B[0][0].ring, A, A.size(), B.size(), B, B[0].size());
}

RVec rvec_mul(const RVec& v, const RMat& A) {
  if (A.empty() || A[0].empty()) return {};
  RVec out = rvec_zero(A[0][0].ring, A[0].size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = out[j] + v[i] * A[i][j];
  }
  return out;
}

RMat rmat_vstack(const RMat& A, const RMat& B) {
  RMat out = A;
  out.insert(out.end(), B.begin(), B.end());
  return out;
}

RMat rmat_neg(const RMat& A) {
  RMat out = A;
  for (auto& row : out)
    for (auto& e : row) e = -e;
  return out;
}

RMat rmat_add(const RMat& A, const RMat& B) {
  RMat out = A;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] = out[i][j] + B[i][j];
  return out;
}

RMat rmat_scale(const RingElement& c, const RMat& A) {
  RMat out = A;
  for (auto& row : out)
    for (auto& e : row) e = c * e;
  return out;
}

RMat rmat_kron(const RMat& A, std::size_t acols, const RMat& B, std::size_t bcols,
               const RingPtr& ring) {
  RMat out(A.size() * B.size(), rvec_zero(ring, acols * bcols));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < B.size(); ++j)
      for (std::size_t k = 0; k < acols; ++k)
        for (std::size_t l = 0; l < bcols; ++l)
          out[i * B.size() + j][k * bcols + l] = A[i][k] * B[j][l];
  return out;
}

// --- SpanSolver -----------------------------------------------------------

SpanSolver::SpanSolver(const RingPtr& ring, const RMat& rows, std::size_t cols)
    : ring_(ring), cols_(cols), nrows_(rows.size()) {
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("span rows of uneven length");
    for (const auto& e : row)
      if (!Ring::same(e.ring, ring_)) throw std::invalid_argument("span row over wrong ring");
  }
  if (ring_->is_euclidean()) {
    for (const auto& row : rows) {
      ZRow zr(cols_);
      for (std::size_t j = 0; j < cols_; ++j) zr[j] = row[j].z;
      zrows_.push_back(zr);
    }
    if (ring_->kind() == Ring::Kind::IntegersMod)
      for (std::size_t j = 0; j < cols_; ++j) {
        ZRow zr(cols_, 0);
        zr[j] = ring_->modulus();
        zrows_.push_back(zr);
      }
    hf_ = std::make_shared<HermiteForm>(hermite(zrows_, cols_));
  } else {
    std::vector<MPoly> mrows;
    const auto& D = ring_->coeff();
    const auto& O = ring_->order();
    for (const auto& row : rows) {
      MPoly p;
      for (std::size_t j = 0; j < cols_; ++j)
        p = MPoly::add(p, MPoly::into_component(row[j].p, (int)j), D, O);
      mrows.push_back(p);
    }
    for (const auto& d : ring_->defining_basis())
      for (std::size_t j = 0; j < cols_; ++j)
        mrows.push_back(MPoly::into_component(d, (int)j));
    gb_ = std::make_shared<GroebnerBasis>(compute_groebner(D, O, mrows));
  }
}

bool SpanSolver::all_zero(const RVec& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

DivideResult SpanSolver::divide(const RVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("divide: wrong vector length");
  DivideResult out;
  if (ring_->is_euclidean()) {
    ZRow vz(cols_);
    for (std::size_t j = 0; j < cols_; ++j) vz[j] = v[j].z;
    auto d = z_divide(*hf_, vz);
    for (std::size_t j = 0; j < cols_; ++j) out.rem.push_back(ring_->from_int(d.rem[j]));
    for (std::size_t i = 0; i < nrows_; ++i) out.coeffs.push_back(ring_->from_int(d.coeffs[i]));
  } else {
    const auto& D = ring_->coeff();
    const auto& O = ring_->order();
    MPoly p;
    for (std::size_t j = 0; j < cols_; ++j)
      p = MPoly::add(p, MPoly::into_component(v[j].p, (int)j), D, O);
    auto red = gb_reduce(*gb_, p);
    auto qs = quots_in_gens(*gb_, red);
    for (std::size_t j = 0; j < cols_; ++j)
      out.rem.push_back(ring_->from_mpoly(red.rem.component((int)j)));
    for (std::size_t i = 0; i < nrows_; ++i) out.coeffs.push_back(ring_->from_mpoly(qs[i]));
  }
  return out;
}

RMat SpanSolver::syzygies() const {
  RMat out;
  if (ring_->is_euclidean()) {
    auto ker = z_left_kernel(zrows_, cols_);
    for (const auto& krow : ker) {
      RVec row;
      bool nonzero = false;
      for (std::size_t i = 0; i < nrows_; ++i) {
        auto e = ring_->from_int(krow[i]);
        nonzero = nonzero || !e.is_zero();
        row.push_back(e);
      }
      if (nonzero) out.push_back(row);
    }
  } else {
    const auto& D = ring_->coeff();
    const auto& O = ring_->order();
    // gb_->gens holds our rows first, then the defining-ideal augmentation
    auto syz = gb_syzygies(D, O, gb_->gens, ring_->nvars());
    for (const auto& s : syz) {
      RVec row;
      bool nonzero = false;
      for (std::size_t i = 0; i < nrows_; ++i) {
        auto e = ring_->from_mpoly(s.component((int)i));
        nonzero = nonzero || !e.is_zero();
        row.push_back(e);
      }
      if (nonzero) out.push_back(row);
    }
  }
  return out;
}

// --- FpModule -------------------------------------------------------------

FpModule FpModule::present(const RingPtr& ring, std::size_t gens, RMat rels) {
  FpModule M;
  M.ring_ = ring;
  M.gens_ = gens;
  for (auto& row : rels) {
    if (row.size() != gens) throw std::invalid_argument("relation of wrong length");
    bool nonzero = false;
    for (auto& e : row) {
      if (!Ring::same(e.ring, ring)) throw std::invalid_argument("relation over wrong ring");
      nonzero = nonzero || !e.is_zero();
    }
    if (nonzero) M.rels_.push_back(std::move(row));
  }
  return M;
}

FpModule FpModule::free_module(const RingPtr& ring, std::size_t n) {
  return present(ring, n, {});
}

FpModule FpModule::zero_module(const RingPtr& ring) { return present(ring, 0, {}); }

FpModule FpModule::cyclic(const Ideal& I) {
  RMat rels;
  for (const auto& g : I.gens) rels.push_back({g});
  return present(I.ring, 1, rels);
}

const SpanSolver& FpModule::solver() const {
  std::call_once(cache_->flag, [this] {
    cache_->solver = std::make_shared<SpanSolver>(ring_, rels_, gens_);
  });
  return *cache_->solver;
}

RVec FpModule::nf(const RVec& v) const {
  if (v.size() != gens_) throw std::invalid_argument("element of wrong length");
  return solver().divide(v).rem;
}

bool FpModule::is_zero() const {
  for (std::size_t i = 0; i < gens_; ++i) {
    RVec e = rvec_zero(ring_, gens_);
    e[i] = ring_->one();
    if (!elem_is_zero(e)) return false;
  }
  return true;
}

bool FpModule::same_presentation(const FpModule& o) const {
  if (!Ring::same(ring_, o.ring_) || gens_ != o.gens_ || rels_.size() != o.rels_.size())
    return false;
  for (std::size_t i = 0; i < rels_.size(); ++i)
    for (std::size_t j = 0; j < gens_; ++j)
      if (rels_[i][j] != o.rels_[i][j]) return false;
  return true;
}

// --- ModuleMap ------------------------------------------------------------

ModuleMap ModuleMap::make(const FpModule& src, const FpModule& tgt, RMat mat) {
  check_shape(src, tgt, mat);
  ModuleMap f{src, tgt, std::move(mat)};
  for (const auto& r : src.rels())
    if (!SpanSolver::all_zero(f.apply(r)))
      throw std::invalid_argument("map does not respect source relations");
  return f;
}

ModuleMap ModuleMap::identity(const FpModule& M) {
  return make(M, M, rmat_identity(M.ring(), M.gens()));
}

ModuleMap ModuleMap::zero(const FpModule& src, const FpModule& tgt) {
  return make(src, tgt, rmat_zero(src.ring(), src.gens(), tgt.gens()));
}

ModuleMap ModuleMap::then(const ModuleMap& g) const {
  if (!tgt.same_presentation(g.src))
    throw std::invalid_argument("composition: middle modules differ");
  RMat m = mat_mul_dims(src.ring(), mat, src.gens(), tgt.gens(), g.mat, g.tgt.gens());
  return make(src, g.tgt, std::move(m));
}

ModuleMap map_add(const ModuleMap& f, const ModuleMap& g) {
  return ModuleMap::make(f.src, f.tgt, rmat_add(f.mat, g.mat));
}

ModuleMap map_sub(const ModuleMap& f, const ModuleMap& g) {
  return ModuleMap::make(f.src, f.tgt, rmat_add(f.mat, rmat_neg(g.mat)));
}

ModuleMap map_scale(const RingElement& c, const ModuleMap& f) {
  return ModuleMap::make(f.src, f.tgt, rmat_scale(c, f.mat));
}

ModuleMap map_mul_element(const FpModule& M, const RingElement& c) {
  return ModuleMap::make(M, M, rmat_scale(c, rmat_identity(M.ring(), M.gens())));
}

bool is_zero_map(const ModuleMap& f) {
  for (const auto& row : f.mat)
    if (!f.tgt.elem_is_zero(row)) return false;
  return true;
}

bool maps_equal(const ModuleMap& f, const ModuleMap& g) {
  if (!f.src.same_presentation(g.src) || !f.tgt.same_presentation(g.tgt)) return false;
  for (std::size_t i = 0; i < f.mat.size(); ++i) {
    RVec d(f.mat[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = f.mat[i][j] - g.mat[i][j];
    if (!f.tgt.elem_is_zero(d)) return false;
  }
  return true;
}

// --- kernel / cokernel / image -------------------------------------------

namespace {

/// Rows v with v*f.mat congruent to 0 modulo the target relations;
/// contains the source relations and spans the kernel generators.
RMat kernel_preimage_rows(const ModuleMap& f) {
  SpanSolver S(f.src.ring(), rmat_vstack(f.mat, f.tgt.rels()), f.tgt.gens());
  RMat out;
  for (const auto& s : S.syzygies()) {
    RVec v(s.begin(), s.begin() + (long)f.src.gens());
    if (!SpanSolver::all_zero(v)) out.push_back(v);
  }
  return out;
}

/// Coefficient rows u with sum u_i * gens_i in the span of rels.
RMat coefficients_into(const RingPtr& ring, const RMat& gens, const RMat& rels,
                       std::size_t cols) {
  SpanSolver S(ring, rmat_vstack(gens, rels), cols);
  RMat out;
  for (const auto& s : S.syzygies()) {
    RVec v(s.begin(), s.begin() + (long)gens.size());
    bool nonzero = false;
    for (auto& e : v) nonzero = nonzero || !e.is_zero();
    if (nonzero) out.push_back(v);
  }
  return out;
}

} // namespace

SubquotientPart kernel(const ModuleMap& f) {
  RMat K;
  for (const auto& v : kernel_preimage_rows(f)) {
    RVec n = f.src.nf(v);
    if (!SpanSolver::all_zero(n)) K.push_back(v);
  }
  RMat rels = coefficients_into(f.src.ring(), K, f.src.rels(), f.src.gens());
  FpModule ker = FpModule::present(f.src.ring(), K.size(), rels);
  return {ker, ModuleMap::make(ker, f.src, K)};
}

SubquotientPart cokernel(const ModuleMap& f) {
  FpModule coker =
      FpModule::present(f.tgt.ring(), f.tgt.gens(), rmat_vstack(f.mat, f.tgt.rels()));
  return {coker, ModuleMap::make(f.tgt, coker, rmat_identity(f.tgt.ring(), f.tgt.gens()))};
}

SubquotientPart image(const ModuleMap& f) {
  // generators f(e_i); their relations are exactly the kernel preimage rows
  FpModule img = FpModule::present(f.src.ring(), f.src.gens(), kernel_preimage_rows(f));
  return {img, ModuleMap::make(img, f.tgt, f.mat)};
}

bool is_injective(const ModuleMap& f) { return kernel(f).module.is_zero(); }
bool is_surjective(const ModuleMap& f) { return cokernel(f).module.is_zero(); }
bool is_isomorphism(const ModuleMap& f) { return is_surjective(f) && is_injective(f); }

ModuleMap invert(const ModuleMap& f) {
  SpanSolver S(f.src.ring(), rmat_vstack(f.mat, f.tgt.rels()), f.tgt.gens());
  RMat inv;
  for (std::size_t j = 0; j < f.tgt.gens(); ++j) {
    RVec e = rvec_zero(f.tgt.ring(), f.tgt.gens());
    e[j] = f.tgt.ring()->one();
    auto d = S.divide(e);
    if (!SpanSolver::all_zero(d.rem)) throw std::invalid_argument("invert: map not surjective");
    inv.push_back(RVec(d.coeffs.begin(), d.coeffs.begin() + (long)f.src.gens()));
  }
  return ModuleMap::make(f.tgt, f.src, inv);
}

ModuleMap lift_along(const ModuleMap& f, const ModuleMap& g) {
  if (!f.tgt.same_presentation(g.tgt)) throw std::invalid_argument("lift: targets differ");
  SpanSolver S(f.src.ring(), rmat_vstack(f.mat, f.tgt.rels()), f.tgt.gens());
  RMat h;
  for (const auto& row : g.mat) {
    auto d = S.divide(row);
    if (!SpanSolver::all_zero(d.rem))
      throw std::invalid_argument("lift: image not contained in the map's image");
    h.push_back(RVec(d.coeffs.begin(), d.coeffs.begin() + (long)f.src.gens()));
  }
  return ModuleMap::make(g.src, f.src, h);
}

ModuleMap factor_through(const ModuleMap& incl, const ModuleMap& g) {
  return lift_along(incl, g);
}

// --- binary constructions -------------------------------------------------

FpModule tensor(const FpModule& M, const FpModule& N) {
  const auto& ring = M.ring();
  std::size_t gM = M.gens(), gN = N.gens();
  RMat rels;
  for (const auto& r : M.rels())
    for (std::size_t j = 0; j < gN; ++j) {
      RVec row = rvec_zero(ring, gM * gN);
      for (std::size_t i = 0; i < gM; ++i) row[i * gN + j] = r[i];
      rels.push_back(row);
    }
  for (const auto& s : N.rels())
    for (std::size_t i = 0; i < gM; ++i) {
      RVec row = rvec_zero(ring, gM * gN);
      for (std::size_t j = 0; j < gN; ++j) row[i * gN + j] = s[j];
      rels.push_back(row);
    }
  return FpModule::present(ring, gM * gN, rels);
}

ModuleMap tensor_maps(const ModuleMap& f, const ModuleMap& g) {
  FpModule S = tensor(f.src, g.src), T = tensor(f.tgt, g.tgt);
  RMat m = rmat_kron(f.mat, f.tgt.gens(), g.mat, g.tgt.gens(), f.src.ring());
  if (S.gens() == 0 || T.gens() == 0) m = rmat_zero(f.src.ring(), S.gens(), T.gens());
  return ModuleMap::make(S, T, std::move(m));
}

ModuleMap tensor_swap(const FpModule& M, const FpModule& N) {
  FpModule S = tensor(M, N), T = tensor(N, M);
  RMat m = rmat_zero(M.ring(), S.gens(), T.gens());
  for (std::size_t i = 0; i < M.gens(); ++i)
    for (std::size_t j = 0; j < N.gens(); ++j)
      m[i * N.gens() + j][j * M.gens() + i] = M.ring()->one();
  return ModuleMap::make(S, T, std::move(m));
}

HomModule hom(const FpModule& M, const FpModule& N) {
  const auto& ring = M.ring();
  std::size_t gM = M.gens(), gN = N.gens();
  std::size_t rM = M.rels().size(), sN = N.rels().size();
  std::size_t big = rM * gN; // target of the constraint map
  // constraint rows: matrix X (flattened) maps to (rel_k . X) over all k
  RMat phi = rmat_zero(ring, gM * gN, big);
  for (std::size_t i = 0; i < gM; ++i)
    for (std::size_t j = 0; j < gN; ++j)
      for (std::size_t k = 0; k < rM; ++k) phi[i * gN + j][k * gN + j] = M.rels()[k][i];
  RMat dbig;
  for (std::size_t k = 0; k < rM; ++k)
    for (const auto& s : N.rels()) {
      RVec row = rvec_zero(ring, big);
      for (std::size_t j = 0; j < gN; ++j) row[k * gN + j] = s[j];
      dbig.push_back(row);
    }
  RMat H;
  if (rM == 0) {
    H = rmat_identity(ring, gM * gN); // no constraints: every matrix is a map
  } else {
    H = coefficients_into(ring, phi, dbig, big);
    // coefficients_into treats phi rows as generators; its output rows are
    // exactly the X with X*phi in span(dbig)
  }
  // trivial maps e_i (x) rel_s, modded out of the valid ones
  RMat triv;
  for (std::size_t i = 0; i < gM; ++i)
    for (std::size_t s = 0; s < sN; ++s) {
      RVec row = rvec_zero(ring, gM * gN);
      for (std::size_t j = 0; j < gN; ++j) row[i * gN + j] = N.rels()[s][j];
      triv.push_back(row);
    }
  RMat rels = coefficients_into(ring, H, triv, gM * gN);
  HomModule out;
  out.module = FpModule::present(ring, H.size(), rels);
  for (const auto& h : H) {
    RMat bm = rmat_zero(ring, gM, gN);
    for (std::size_t i = 0; i < gM; ++i)
      for (std::size_t j = 0; j < gN; ++j) bm[i][j] = h[i * gN + j];
    out.basis_maps.push_back(bm);
  }
  return out;
}

SumDecomp direct_sum(const std::vector<FpModule>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of nothing");
  const auto& ring = parts[0].ring();
  std::vector<std::size_t> off(parts.size() + 1, 0);
  for (std::size_t k = 0; k < parts.size(); ++k) off[k + 1] = off[k] + parts[k].gens();
  std::size_t total = off.back();
  RMat rels;
  for (std::size_t k = 0; k < parts.size(); ++k)
    for (const auto& r : parts[k].rels()) {
      RVec row = rvec_zero(ring, total);
      for (std::size_t j = 0; j < parts[k].gens(); ++j) row[off[k] + j] = r[j];
      rels.push_back(row);
    }
  SumDecomp out;
  out.module = FpModule::present(ring, total, rels);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    RMat in = rmat_zero(ring, parts[k].gens(), total);
    RMat pr = rmat_zero(ring, total, parts[k].gens());
    for (std::size_t j = 0; j < parts[k].gens(); ++j) {
      in[j][off[k] + j] = ring->one();
      pr[off[k] + j][j] = ring->one();
    }
    out.incl.push_back(ModuleMap::make(parts[k], out.module, in));
    out.proj.push_back(ModuleMap::make(out.module, parts[k], pr));
  }
  return out;
}

SubquotientPart quotient_by_ideal(const FpModule& M, const Ideal& I) {
  RMat rels = M.rels();
  for (const auto& g : I.gens)
    for (std::size_t i = 0; i < M.gens(); ++i) {
      RVec row = rvec_zero(M.ring(), M.gens());
      row[i] = g;
      rels.push_back(row);
    }
  FpModule Q = FpModule::present(M.ring(), M.gens(), rels);
  return {Q, ModuleMap::make(M, Q, rmat_identity(M.ring(), M.gens()))};
}

} // namespace adicert

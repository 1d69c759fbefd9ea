#pragma once

#include <memory>
#include <mutex>

#include "adicert/ideal.hpp"
#include "adicert/zlinalg.hpp"

namespace adicert {

using RVec = std::vector<RingElement>;
using RMat = std::vector<RVec>; // row major

RVec rvec_zero(const RingPtr& ring, std::size_t n);
RMat rmat_identity(const RingPtr& ring, std::size_t n);
RMat rmat_zero(const RingPtr& ring, std::size_t rows, std::size_t cols);
RMat rmat_mul(const RMat& A, const RMat& B);
RVec rvec_mul(const RVec& v, const RMat& A);
RMat rmat_vstack(const RMat& A, const RMat& B);
RMat rmat_neg(const RMat& A);
RMat rmat_add(const RMat& A, const RMat& B);
RMat rmat_scale(const RingElement& c, const RMat& A);
/// Kronecker product with index (i,j) -> i*cols(B)+j on both sides.
RMat rmat_kron(const RMat& A, std::size_t acols, const RMat& B, std::size_t bcols,
               const RingPtr& ring);

/// Division of a vector by the span of a row set over any supported base
/// ring: Groebner machinery over polynomial rings, Hermite over ZZ and
/// ZZ/m (quotient data folded in by augmentation).
struct DivideResult {
  RVec rem;    // deterministic normal form; zero iff v lies in the span
  RVec coeffs; // over the given rows: v = coeffs*rows + rem
};

class SpanSolver {
public:
  SpanSolver(const RingPtr& ring, const RMat& rows, std::size_t cols);
  DivideResult divide(const RVec& v) const;
  bool member(const RVec& v) const { return all_zero(divide(v).rem); }
  /// Generators of {u : u*rows == 0} (length rows.size() each).
  RMat syzygies() const;

  static bool all_zero(const RVec& v);

private:
  RingPtr ring_;
  std::size_t cols_, nrows_;
  // euclidean backend
  ZMat zrows_;
  std::shared_ptr<HermiteForm> hf_;
  // polynomial backend
  std::shared_ptr<GroebnerBasis> gb_;
};

/// Finitely presented module: cokernel of rels: R^r -> R^gens.
/// Immutable; copies share the lazily built relation solver.
class FpModule {
public:
  static FpModule present(const RingPtr& ring, std::size_t gens, RMat rels);
  static FpModule free_module(const RingPtr& ring, std::size_t n);
  static FpModule zero_module(const RingPtr& ring);
  /// R/I as a module on one generator.
  static FpModule cyclic(const Ideal& I);

  const RingPtr& ring() const { return ring_; }
  std::size_t gens() const { return gens_; }
  const RMat& rels() const { return rels_; }

  RVec nf(const RVec& v) const;
  bool elem_is_zero(const RVec& v) const { return SpanSolver::all_zero(nf(v)); }
  bool is_zero() const;
  bool is_free_presentation() const { return rels_.empty(); }

  const SpanSolver& solver() const;

  bool same_presentation(const FpModule& o) const;

private:
  RingPtr ring_;
  std::size_t gens_ = 0;
  RMat rels_;
  struct Cache {
    std::once_flag flag;
    std::shared_ptr<SpanSolver> solver;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Map of f.p. modules given on generators; construction verifies that
/// source relations land in target relations.
struct ModuleMap {
  FpModule src, tgt;
  RMat mat; // src.gens x tgt.gens

  static ModuleMap make(const FpModule& src, const FpModule& tgt, RMat mat);
  static ModuleMap identity(const FpModule& M);
  static ModuleMap zero(const FpModule& src, const FpModule& tgt);

  RVec apply(const RVec& v) const {
    if (mat.empty()) return rvec_zero(tgt.ring(), tgt.gens());
    return tgt.nf(rvec_mul(v, mat));
  }
  /// this then g (left-to-right composition).
  ModuleMap then(const ModuleMap& g) const;
};

ModuleMap map_add(const ModuleMap& f, const ModuleMap& g);
ModuleMap map_sub(const ModuleMap& f, const ModuleMap& g);
ModuleMap map_scale(const RingElement& c, const ModuleMap& f);
/// Multiplication by a ring element as a map M -> M.
ModuleMap map_mul_element(const FpModule& M, const RingElement& c);

bool is_zero_map(const ModuleMap& f);
bool maps_equal(const ModuleMap& f, const ModuleMap& g);

struct SubquotientPart {
  FpModule module;
  ModuleMap map; // kernel/image: module -> ambient; cokernel: ambient -> module
};

SubquotientPart kernel(const ModuleMap& f);
SubquotientPart cokernel(const ModuleMap& f);
SubquotientPart image(const ModuleMap& f);

bool is_injective(const ModuleMap& f);
bool is_surjective(const ModuleMap& f);
bool is_isomorphism(const ModuleMap& f);

/// Right inverse of a surjection (full inverse when f is an isomorphism).
ModuleMap invert(const ModuleMap& f);

/// h with h;f == g, for f: A -> B admitting the lift (throws otherwise).
ModuleMap lift_along(const ModuleMap& f, const ModuleMap& g);

/// h: W -> K with h;incl == g for an inclusion-style map incl: K -> M.
ModuleMap factor_through(const ModuleMap& incl, const ModuleMap& g);

FpModule tensor(const FpModule& M, const FpModule& N);
ModuleMap tensor_maps(const ModuleMap& f, const ModuleMap& g);
ModuleMap tensor_swap(const FpModule& M, const FpModule& N);

struct HomModule {
  FpModule module;
  std::vector<RMat> basis_maps; // generator i of `module` <-> a matrix M.gens x N.gens
};
HomModule hom(const FpModule& M, const FpModule& N);

struct SumDecomp {
  FpModule module;
  std::vector<ModuleMap> incl, proj;
};
SumDecomp direct_sum(const std::vector<FpModule>& parts);

/// M / I*M with the canonical projection.
SubquotientPart quotient_by_ideal(const FpModule& M, const Ideal& I);

} // namespace adicert

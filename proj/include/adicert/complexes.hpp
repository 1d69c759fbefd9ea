#pragma once

#include <map>

#include "adicert/module.hpp"

namespace adicert {

/// Bounded chain complex, homological indexing: d_n : C_n -> C_{n-1}.
/// Degrees outside [lo, hi] read as the zero module.
class BoundedComplex {
public:
  /// diffs[i] is d_{lo+i+1} : mods[i+1] -> mods[i]; d compose d == 0 is
  /// checked on construction.
  static BoundedComplex make(const RingPtr& ring, int lo, std::vector<FpModule> mods,
                             std::vector<ModuleMap> diffs);
  static BoundedComplex concentrated(const FpModule& M, int deg);
  /// ... 0 -> C_1 -> C_0 -> 0 ... from a single map placed in degrees (deg, deg-1).
  static BoundedComplex two_term(const ModuleMap& f, int deg);

  const RingPtr& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + (int)mods_.size() - 1; }
  FpModule mod(int n) const;
  ModuleMap diff(int n) const; // zero map outside (lo, hi]

private:
  RingPtr ring_;
  int lo_ = 0;
  std::vector<FpModule> mods_;
  std::vector<ModuleMap> diffs_;
};

/// Degreewise map of complexes commuting with the differentials
/// (checked).  Unspecified degrees are the zero map.
class ChainMap {
public:
  static ChainMap make(const BoundedComplex& src, const BoundedComplex& tgt,
                       const std::map<int, RMat>& mats);
  static ChainMap identity(const BoundedComplex& C);
  static ChainMap zero(const BoundedComplex& src, const BoundedComplex& tgt);

  const BoundedComplex& src() const { return src_; }
  const BoundedComplex& tgt() const { return tgt_; }
  ModuleMap comp(int n) const;

  ChainMap then(const ChainMap& g) const;

private:
  BoundedComplex src_, tgt_;
  std::map<int, ModuleMap> comps_;
};

bool chain_maps_equal(const ChainMap& f, const ChainMap& g);
bool is_zero_chain_map(const ChainMap& f);

struct HomologyData {
  FpModule H;
  SubquotientPart ker; // ker.map : ker.module -> C_n
  ModuleMap proj;      // ker.module -> H (generators coincide)
};
HomologyData homology(const BoundedComplex& C, int n);
FpModule homology_module(const BoundedComplex& C, int n);
bool is_exact_at(const BoundedComplex& C, int n);
bool is_acyclic(const BoundedComplex& C);

/// H_n(f) : H_n(src) -> H_n(tgt).
ModuleMap induced_map(const ChainMap& f, int n);

/// (shift(C,k))_n = C_{n-k}, differentials scaled by (-1)^k.
BoundedComplex shift(const BoundedComplex& C, int k);

BoundedComplex sum_complexes(const BoundedComplex& A, const BoundedComplex& B);

/// cone(f)_n = A_{n-1} (+) B_n with d(a,b) = (-da, db - fa).
BoundedComplex cone(const ChainMap& f);

/// Degree-n part is the sum of A_p (x) B_q over p+q = n, p ascending;
/// d(x (x) y) = dx (x) y + (-1)^p x (x) dy.
BoundedComplex tensor_complexes(const BoundedComplex& A, const BoundedComplex& B);
ChainMap tensor_chain_maps(const ChainMap& f, const ChainMap& g);

/// Degreewise - (x) M with the same differentials' matrices.
BoundedComplex tensor_with_module(const BoundedComplex& C, const FpModule& M);
ChainMap tensor_chain_with_module(const ChainMap& f, const FpModule& M);

/// Coordinates of a concrete matrix (a homomorphism M -> N) in the
/// presentation produced by hom(M, N).
RVec hom_coords(const HomModule& H, const FpModule& M, const FpModule& N, const RMat& matrix);

/// Hom(C, X) for a module X: degree n holds Hom(C_{-n}, X), with
/// (df)(c) = -(-1)^n f(dc), i.e. signed precomposition.
struct HomComplexData {
  BoundedComplex cx;
  std::map<int, HomModule> homs; // homs[n] presents cx.mod(n)
};
HomComplexData hom_into_module(const BoundedComplex& C, const FpModule& X);

/// Contravariant functoriality: a chain map C -> C' induces
/// Hom(C', X) -> Hom(C, X).
ChainMap hom_into_module_map(const ChainMap& u, const FpModule& X,
                             const HomComplexData& of_tgt, const HomComplexData& of_src);

} // namespace adicert

#pragma once

#include "adicert/towers.hpp"

namespace adicert {

/// The stage K(x_1^n, ..., x_k^n) of the Koszul telescope.
struct KoszulSpec {
  RingPtr ring;
  std::vector<RingElement> gens; // x_1..x_k
  unsigned n = 1;

  static KoszulSpec make(const RingPtr& ring, std::vector<RingElement> gens, unsigned n = 1);
  std::vector<RingElement> powered() const; // x_i^n
};

/// K(x_1^n) (x) ... (x) K(x_k^n), free, in degrees [-k, 0]; each factor
/// sits in degrees 0 and -1 with differential multiplication by x_i^n.
BoundedComplex koszul_complex(const KoszulSpec& spec);

/// Hom(K, R) in degrees [0, k] together with an explicit degreewise iso
/// onto the k-fold shift of K.
struct DualKoszul {
  HomComplexData hom;
  ChainMap iso; // hom.cx -> shift(koszul_complex(spec), k)
};
DualKoszul dual_koszul(const KoszulSpec& spec);

/// Search for a chain isomorphism whose components are signed permutation
/// matrices (degreewise free complexes of matching ranks only).
struct SignedPermIso {
  bool found = false;
  ChainMap iso;
};
SignedPermIso find_signed_permutation_iso(const BoundedComplex& A, const BoundedComplex& B);

/// Inverse transition K(x^{n+1}) -> K(x^n): multiplication by x_i in
/// degree 0, identity in degree -1, per factor.
ChainMap koszul_transition_inverse(const RingPtr& ring, const std::vector<RingElement>& xs,
                                   unsigned n);
/// Directed transition K(x^n) -> K(x^{n+1}): identity in degree 0,
/// multiplication by x_i in degree -1, per factor.
ChainMap koszul_transition_directed(const RingPtr& ring, const std::vector<RingElement>& xs,
                                    unsigned n);

ComplexTower koszul_tower_inverse(const RingPtr& ring, std::vector<RingElement> xs);
ComplexIndSystem koszul_tower_directed(const RingPtr& ring, std::vector<RingElement> xs);

/// Weak pro-regularity probe: pro-vanishing of the Koszul homology
/// inverse systems in degrees above the bottom one.  Certifies only
/// positively (Holds or Undetermined).
struct WprDegreeReport {
  int degree;
  Verdict verdict;
};
std::vector<WprDegreeReport> wpr_probe(const RingPtr& ring, const std::vector<RingElement>& xs,
                                       int depth);

} // namespace adicert

#pragma once

#include "adicert/functors.hpp"
#include "adicert/ringmap.hpp"

namespace adicert {

struct ConditionResult {
  std::string id;
  Verdict verdict;
};

/// Per-condition verdicts for one named check; `discrepancy` is raised
/// when certified verdicts disagree where equivalence is claimed.
struct TheoremReport {
  std::string theorem;
  int depth = 0;
  std::vector<ConditionResult> conditions;
  bool discrepancy = false;
  std::string note;

  const Verdict& verdict_of(const std::string& id) const;
  bool all_hold() const;
};

/// The six equivalent vanishing conditions for torsion/completion:
/// (a) K(I) (x) X acyclic, (b) the torsion system ind-zero,
/// (c) R/I (x)^L X ~ 0, (d) Hom(K(I), X) acyclic,
/// (e) the completion homology towers pro-zero, (f) RHom(R/I, X) ~ 0.
TheoremReport six_conditions(const FpModule& M, const Ideal& I, int depth);
TheoremReport six_conditions_complex(const BoundedComplex& C, const Ideal& I, int depth);

/// Levelwise surjectivity of the comparison from completion homology to
/// the adic stages, and its compatibility with the canonical map.
TheoremReport factorization_check(const FpModule& M, const Ideal& I, int depth);

/// Degenerate spectral edge: per degree, the homology tower of the
/// completed complex is pro-isomorphic to the adic tower of the homology.
TheoremReport spectral_edge(const BoundedComplex& C, const Ideal& I, int depth);

/// Base-change conditions (a)-(d) for theta: R -> S with ideals I in R
/// and J in S; requires rad(IS) == rad(J) (throws otherwise).
TheoremReport base_change_suite(const RingMap& theta, const Ideal& I, const Ideal& J, int depth);

/// Runs the six conditions against two generator sets with equal
/// radicals and asserts the verdicts agree (throws on radical mismatch).
TheoremReport radical_invariance_check(const FpModule& M, const std::vector<RingElement>& xs1,
                                       const std::vector<RingElement>& xs2, int depth);

} // namespace adicert

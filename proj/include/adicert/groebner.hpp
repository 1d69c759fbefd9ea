#pragma once

#include <optional>
#include <vector>

#include "adicert/poly.hpp"

namespace adicert {

/// A reduced Groebner basis of a submodule of R^c, R a polynomial ring
/// over Q, F_p or Z (strong basis in the Z case).  Each basis element
/// carries its expression over the original generators, so reductions can
/// report division quotients in terms of the input.
struct GroebnerBasis {
  CoeffDomain D = CoeffDomain::rational();
  TermOrder O;
  std::vector<MPoly> gens;  // original generators (zeros kept for indexing)
  std::vector<MPoly> basis; // reduced basis, sorted by decreasing lead term
  std::vector<MPoly> expr;  // expr[i]: components index gens; basis[i] = sum_j expr[i][j]*gens[j]
};

GroebnerBasis compute_groebner(const CoeffDomain& D, const TermOrder& O,
                               const std::vector<MPoly>& gens);

struct Reduction {
  MPoly rem;
  std::vector<MPoly> quots; // scalar polys over basis elements
};

/// Full reduction of f by G.basis; deterministic, rem == 0 iff f lies in
/// the module generated by G.gens.
Reduction gb_reduce(const GroebnerBasis& G, const MPoly& f);

/// Quotients of a Reduction re-expressed over the original generators.
std::vector<MPoly> quots_in_gens(const GroebnerBasis& G, const Reduction& r);

/// Generators of the syzygy module of `gens` (elements of R^c): vectors
/// (u_1..u_r) with sum u_i*gens[i] == 0, components indexing the gens.
/// Computed by the component-elimination trick.
/// nvars is only consulted when every generator is zero (nothing to infer
/// the exponent-vector width from); pass it when zero rows are possible.
std::vector<MPoly> gb_syzygies(const CoeffDomain& D, const TermOrder& O,
                               const std::vector<MPoly>& gens, std::size_t nvars = 0);

} // namespace adicert

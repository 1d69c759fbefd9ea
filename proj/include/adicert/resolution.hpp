#pragma once

#include "adicert/complexes.hpp"

namespace adicert {

/// Free resolution ... -> F_1 -> F_0 with augmentation F_0 ->> M, built by
/// iterated syzygies and truncated at max_len.  Internal exactness holds
/// at every computed stage even when truncated; `complete` records whether
/// the top kernel vanished.
struct FreeResolution {
  BoundedComplex cx; // free modules in degrees 0..hi
  ModuleMap aug;     // cx.mod(0) -> M
  bool complete = false;
};

FreeResolution free_resolution(const FpModule& M, int max_len);

/// Resolution of the middle of a short exact sequence
/// 0 -> A --incl--> X --proj--> C -> 0 from resolutions of the ends;
/// degree q is FA_q (+) FC_q (A block first).
FreeResolution horseshoe(const FreeResolution& FA, const ModuleMap& incl,
                         const ModuleMap& proj, const FreeResolution& FC);

/// Degreewise-free complex with a quasi-isomorphism onto C, by totalizing
/// resolutions of the boundary/cycle/homology pieces.  Already-free
/// complexes are returned unchanged.
struct FreeReplacement {
  BoundedComplex cx;
  ChainMap aug; // cx -> C
  bool complete = false;
};

FreeReplacement free_replacement(const BoundedComplex& C, int max_len);

bool is_quasi_iso(const ChainMap& f);

/// Tor_i(M, N) and Ext^i(M, N) for i = 0..max_i, via a free resolution of
/// the first argument; exact at these indices regardless of truncation.
struct DerivedFunctors {
  std::vector<FpModule> tor, ext;
};
DerivedFunctors derived_binary(const FpModule& M, const FpModule& N, int max_i);

} // namespace adicert

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adicert/resolution.hpp"

using namespace adicert;

namespace {

mpz_class zcard(const FpModule& M) {
  ZMat A;
  for (const auto& r : M.rels()) {
    ZRow row;
    for (const auto& e : r) row.push_back(e.z);
    A.push_back(row);
  }
  if (M.ring()->kind() == Ring::Kind::IntegersMod)
    for (std::size_t j = 0; j < M.gens(); ++j) {
      ZRow row(M.gens(), 0);
      row[j] = M.ring()->modulus();
      A.push_back(row);
    }
  auto inv = smith_invariants(A, M.gens());
  if (inv.size() < M.gens()) return 0;
  mpz_class c = 1;
  for (const auto& d : inv) c *= d;
  return c;
}

FpModule zmod(const RingPtr& Z, long n) {
  return FpModule::cyclic(Ideal::make(Z, {Z->from_int(n)}));
}

} // namespace

TEST_CASE("resolution: Z/6 over Z resolves in one step") {
  auto Z = Ring::integers();
  auto R = free_resolution(zmod(Z, 6), 4);
  CHECK(R.complete);
  CHECK(R.cx.hi() == 1);
  CHECK(is_surjective(R.aug));
  CHECK(zcard(homology_module(R.cx, 0)) == 6);
  CHECK(homology_module(R.cx, 1).is_zero());
}

TEST_CASE("resolution: maximal ideal of Q[x,y] gives the Koszul pattern") {
  auto R = Ring::poly(CoeffDomain::rational(), {"x", "y"});
  FpModule k = FpModule::present(R, 1, {{R->var(0)}, {R->var(1)}});
  auto res = free_resolution(k, 5);
  CHECK(res.complete);
  CHECK(res.cx.hi() == 2); // Hilbert syzygy bound for two variables
  CHECK(res.cx.mod(1).gens() == 2);
  CHECK(res.cx.mod(2).gens() == 1);
  for (int n = 1; n <= 2; ++n) CHECK(is_exact_at(res.cx, n));
}

TEST_CASE("resolution: truncation over Z/8 stays internally exact") {
  auto Z8 = Ring::integers_mod(8);
  FpModule M = FpModule::present(Z8, 1, {{Z8->from_int(2)}});
  auto res = free_resolution(M, 4);
  CHECK_FALSE(res.complete); // 2,4,2,4,... never terminates
  CHECK(res.cx.hi() == 4);
  for (int n = 1; n < 4; ++n) CHECK(is_exact_at(res.cx, n));
  CHECK(zcard(homology_module(res.cx, 0)) == 2);
}

TEST_CASE("resolution: horseshoe for 0 -> Z/2 -> Z/4 -> Z/2 -> 0") {
  auto Z = Ring::integers();
  FpModule A = zmod(Z, 2), X = zmod(Z, 4), C = zmod(Z, 2);
  auto incl = ModuleMap::make(A, X, {{Z->from_int(2)}});
  auto proj = ModuleMap::make(X, C, {{Z->one()}});
  auto FX = horseshoe(free_resolution(A, 3), incl, proj, free_resolution(C, 3));
  CHECK(FX.complete);
  CHECK(is_surjective(FX.aug));
  CHECK(zcard(homology_module(FX.cx, 0)) == 4);
  for (int n = 1; n <= FX.cx.hi(); ++n) CHECK(is_exact_at(FX.cx, n));
}

TEST_CASE("resolution: derived functors of cyclic groups match gcd arithmetic") {
  auto Z = Ring::integers();
  auto d = derived_binary(zmod(Z, 4), zmod(Z, 6), 2);
  CHECK(zcard(d.tor[0]) == 2);
  CHECK(zcard(d.tor[1]) == 2);
  CHECK(d.tor[2].is_zero());
  CHECK(zcard(d.ext[0]) == 2);
  CHECK(zcard(d.ext[1]) == 2);
  CHECK(d.ext[2].is_zero());

  auto e = derived_binary(zmod(Z, 4), FpModule::free_module(Z, 1), 1);
  CHECK(e.tor[0].gens() > 0);
  CHECK_FALSE(e.tor[0].is_zero());
  CHECK(e.tor[1].is_zero());
  CHECK(e.ext[0].is_zero()); // Hom(Z/4, Z) = 0
  CHECK(zcard(e.ext[1]) == 4);
}

TEST_CASE("resolution: Koszul-style Tor over Q[x,y]") {
  auto R = Ring::poly(CoeffDomain::rational(), {"x", "y"});
  FpModule k = FpModule::present(R, 1, {{R->var(0)}, {R->var(1)}});
  auto d = derived_binary(k, k, 3);
  CHECK_FALSE(d.tor[0].is_zero());
  CHECK_FALSE(d.tor[1].is_zero());
  CHECK_FALSE(d.tor[2].is_zero());
  CHECK(d.tor[3].is_zero());
  CHECK_FALSE(d.ext[0].is_zero());
  CHECK_FALSE(d.ext[1].is_zero());
  CHECK_FALSE(d.ext[2].is_zero());
  CHECK(d.ext[3].is_zero());
}

TEST_CASE("resolution: free replacement of a non-free two-term complex") {
  auto Z = Ring::integers();
  FpModule M = zmod(Z, 4), N = zmod(Z, 2);
  auto f = ModuleMap::make(M, N, {{Z->one()}});
  auto C = BoundedComplex::two_term(f, 0);
  auto F = free_replacement(C, 4);
  CHECK(F.complete);
  for (int n = F.cx.lo(); n <= F.cx.hi(); ++n) CHECK(F.cx.mod(n).is_free_presentation());
  CHECK(is_quasi_iso(F.aug));
}

TEST_CASE("resolution: free replacement is the identity on free complexes") {
  auto Z = Ring::integers();
  FpModule F1 = FpModule::free_module(Z, 1);
  auto C = BoundedComplex::two_term(map_mul_element(F1, Z->from_int(2)), 0);
  auto F = free_replacement(C, 4);
  CHECK(F.complete);
  CHECK(chain_maps_equal(F.aug, ChainMap::identity(C)));
}

TEST_CASE("resolution: truncated replacement over Z/8 is exact in range") {
  auto Z8 = Ring::integers_mod(8);
  FpModule M = FpModule::present(Z8, 1, {{Z8->from_int(2)}});
  auto C = BoundedComplex::concentrated(M, 0);
  auto F = free_replacement(C, 4);
  CHECK_FALSE(F.complete);
  for (int n = F.cx.lo(); n <= F.cx.hi(); ++n) CHECK(F.cx.mod(n).is_free_presentation());
  CHECK(is_isomorphism(induced_map(F.aug, 0)));
  for (int n = 1; n < F.cx.hi(); ++n) CHECK(is_exact_at(F.cx, n));
}

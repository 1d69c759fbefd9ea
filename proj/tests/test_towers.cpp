#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adicert/towers.hpp"

using namespace adicert;

namespace {

FpModule zmod(const RingPtr& Z, const mpz_class& n) {
  return FpModule::cyclic(Ideal::make(Z, {Z->from_int(n)}));
}

ModuleTower constant_with(const FpModule& M, const ModuleMap& t) {
  return ModuleTower([M](int) { return M; }, [t](int) { return t; });
}

mpz_class pow2(int n) {
  mpz_class r = 1;
  for (int i = 0; i < n; ++i) r *= 2;
  return r;
}

/// {Z/2^n} with the canonical surjections, over Z.
ModuleTower adic2(const RingPtr& Z) {
  return ModuleTower([Z](int n) { return zmod(Z, pow2(n)); },
                     [Z](int n) {
                       return ModuleMap::make(zmod(Z, pow2(n + 1)), zmod(Z, pow2(n)),
                                              {{Z->one()}});
                     });
}

} // namespace

TEST_CASE("towers: pro_zero on constant towers") {
  auto Z = Ring::integers();
  FpModule M = zmod(Z, 2);
  CHECK(pro_zero(constant_with(M, ModuleMap::zero(M, M)), 5).is_holds());
  auto v = pro_zero(constant_with(M, ModuleMap::identity(M)), 5);
  CHECK(v.is_fails());
}

TEST_CASE("towers: pro_zero for (y) in Q[x,y]/(xy) with x-transitions") {
  auto P = Ring::poly(CoeffDomain::rational(), {"x", "y"});
  auto R = Ring::quotient(P, {P->var(0) * P->var(1)});
  // (y) = R/ann(y) = R/(x); the transition multiplies by x
  FpModule M = FpModule::present(R, 1, {{R->var(0)}});
  auto v = pro_zero(constant_with(M, map_mul_element(M, R->var(0))), 4);
  CHECK(v.is_holds());
}

TEST_CASE("towers: nilpotent transitions near the window edge cannot certify") {
  auto Z = Ring::integers();
  // composites vanish only after three steps; the last stages in the
  // window never see a witness, so the verdict is a (truncation) failure
  FpModule M8 = zmod(Z, 8);
  CHECK(pro_zero(constant_with(M8, map_mul_element(M8, Z->from_int(2))), 6).is_fails());
}

TEST_CASE("towers: pro_zero reindexing invariance") {
  auto Z = Ring::integers();
  FpModule M = zmod(Z, 2);
  auto T = constant_with(M, map_mul_element(M, Z->from_int(2))); // zero transitions
  CHECK(pro_zero(T, 6).is_holds());
  auto dropped = ModuleTower([T](int n) { return T.stage(n + 1); },
                             [T](int n) { return T.transition(n + 1); });
  CHECK(pro_zero(dropped, 6).is_holds());
}

TEST_CASE("towers: ind_zero examples") {
  auto Z = Ring::integers();
  auto inj = ModuleIndSystem([Z](int n) { return zmod(Z, pow2(n)); },
                             [Z](int n) {
                               return ModuleMap::make(zmod(Z, pow2(n)), zmod(Z, pow2(n + 1)),
                                                      {{Z->from_int(2)}});
                             });
  CHECK(ind_zero(inj, 5).is_fails());
  FpModule M = zmod(Z, 2);
  auto zero = ModuleIndSystem([M](int) { return M; }, [M](int) { return ModuleMap::zero(M, M); });
  CHECK(ind_zero(zero, 5).is_holds());
  FpModule O = FpModule::zero_module(Z);
  auto triv = ModuleIndSystem([O](int) { return O; }, [O](int) { return ModuleMap::identity(O); });
  CHECK(ind_zero(triv, 5).is_holds());
}

TEST_CASE("towers: pro_iso from constant Z/8 to its 2-adic tower holds") {
  auto Z = Ring::integers();
  FpModule M = zmod(Z, 8);
  auto T = ModuleTower([Z](int n) { return zmod(Z, pow2(std::min(n, 3))); },
                       [Z](int n) {
                         return ModuleMap::make(zmod(Z, pow2(std::min(n + 1, 3))),
                                                zmod(Z, pow2(std::min(n, 3))), {{Z->one()}});
                       });
  auto f = constant_to_tower(M, T, [&](int n) {
    return ModuleMap::make(M, T.stage(n), {{Z->one()}});
  });
  CHECK(pro_iso(f, 6).is_holds());
}

TEST_CASE("towers: pro_iso from constant Z to the 2-adic tower fails (kernels survive)") {
  auto Z = Ring::integers();
  FpModule M = FpModule::free_module(Z, 1);
  auto T = adic2(Z);
  auto f = constant_to_tower(M, T, [&](int n) {
    return ModuleMap::make(M, T.stage(n), {{Z->one()}});
  });
  auto v = pro_iso(f, 5);
  CHECK(v.is_fails());
  CHECK(v.note.find("kernel") != std::string::npos);
}

TEST_CASE("towers: pro_iso of an identity levelwise map holds") {
  auto Z = Ring::integers();
  auto T = adic2(Z);
  TowerMap f{T, T, [T](int n) { return ModuleMap::identity(T.stage(n)); }};
  CHECK(pro_iso(f, 5).is_holds());
}

TEST_CASE("towers: pro_iso rejects non-commuting data") {
  auto Z = Ring::integers();
  auto T = adic2(Z);
  TowerMap bad{T, T, [T, Z](int n) { return map_mul_element(T.stage(n), Z->from_int(n)); }};
  CHECK_THROWS(pro_iso(bad, 4));
}

TEST_CASE("towers: pro_zero implies pro_iso of the zero inclusion") {
  auto Z = Ring::integers();
  FpModule M = zmod(Z, 2), O = FpModule::zero_module(Z);
  auto T = constant_with(M, map_mul_element(M, Z->from_int(2)));
  REQUIRE(pro_zero(T, 6).is_holds());
  auto f = constant_to_tower(O, T, [&](int n) { return ModuleMap::zero(O, T.stage(n)); });
  CHECK(pro_iso(f, 6).is_holds());
}

TEST_CASE("towers: ml diagnostics for a surjective system") {
  auto Z = Ring::integers();
  auto rep = ml_lim_diagnostics(adic2(Z), 5);
  CHECK(rep.ml.is_holds());
  CHECK(rep.lim1_zero.is_holds());
  CHECK_FALSE(rep.eventually_constant);
}

TEST_CASE("towers: ml diagnostics for the doubling tower on Z") {
  auto Z = Ring::integers();
  FpModule F = FpModule::free_module(Z, 1);
  auto T = constant_with(F, map_mul_element(F, Z->from_int(2)));
  auto rep = ml_lim_diagnostics(T, 5);
  CHECK(rep.ml.is_fails());
  CHECK(rep.lim1_zero.kind == Verdict::Kind::Undetermined);
  CHECK(rep.lim1_zero.note.find("lim^1") != std::string::npos);
}

TEST_CASE("towers: constant tower has an honest limit") {
  auto Z = Ring::integers();
  FpModule M = zmod(Z, 8);
  auto rep = ml_lim_diagnostics(constant_module_tower(M), 5);
  CHECK(rep.ml.is_holds());
  CHECK(rep.eventually_constant);
  CHECK(rep.stable_from == 1);
  CHECK(rep.lim.same_presentation(M));
}

TEST_CASE("towers: homology tower of a tower of complexes") {
  auto Z = Ring::integers();
  FpModule F = FpModule::free_module(Z, 1);
  // stages K(2^n): Z --2^n--> Z; inverse transitions (x2, id)
  auto T = ComplexTower(
      [Z, F](int n) {
        return BoundedComplex::two_term(map_mul_element(F, Z->from_int(pow2(n))), 0);
      },
      [Z, F](int n) {
        auto S = BoundedComplex::two_term(map_mul_element(F, Z->from_int(pow2(n + 1))), 0);
        auto D = BoundedComplex::two_term(map_mul_element(F, Z->from_int(pow2(n))), 0);
        return ChainMap::make(S, D, {{0, {{Z->from_int(2)}}}, {-1, {{Z->one()}}}});
      });
  auto H = homology_tower(T, -1); // stages Z/2^n with the canonical surjections
  CHECK_FALSE(pro_zero(H, 4).is_holds());
  auto rep = ml_lim_diagnostics(H, 4);
  CHECK(rep.ml.is_holds());
  auto H0 = homology_tower(T, 0); // kernels vanish: pro-zero trivially
  CHECK(pro_zero(H0, 4).is_holds());
}

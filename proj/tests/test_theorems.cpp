#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adicert/theorems.hpp"

using namespace adicert;

namespace {

bool all_fail(const TheoremReport& r) {
  for (const auto& c : r.conditions)
    if (!c.verdict.is_fails()) return false;
  return !r.conditions.empty();
}

} // namespace

TEST_CASE("theorems: six conditions hold when a generator acts invertibly") {
  auto P = Ring::poly(CoeffDomain::rational(), {"x", "y"});
  FpModule M = FpModule::present(P, 1, {{P->var(0) - P->one()}}); // Q[x,y]/(x-1)
  auto r = six_conditions(M, Ideal::make(P, {P->var(0), P->var(1)}), 5);
  CHECK(r.all_hold());
  CHECK_FALSE(r.discrepancy);
}

TEST_CASE("theorems: six conditions fail for the residue field") {
  auto P = Ring::poly(CoeffDomain::rational(), {"x", "y"});
  FpModule M = FpModule::present(P, 1, {{P->var(0)}, {P->var(1)}}); // Q[x,y]/(x,y)
  auto r = six_conditions(M, Ideal::make(P, {P->var(0), P->var(1)}), 5);
  CHECK(all_fail(r));
  CHECK_FALSE(r.discrepancy);
}

TEST_CASE("theorems: six conditions over Z") {
  auto Z = Ring::integers();
  auto I = Ideal::make(Z, {Z->from_int(2)});
  auto r3 = six_conditions(FpModule::cyclic(Ideal::make(Z, {Z->from_int(3)})), I, 6);
  CHECK(r3.all_hold());
  CHECK_FALSE(r3.discrepancy);
  auto rz = six_conditions(FpModule::free_module(Z, 1), I, 6);
  CHECK(all_fail(rz));
  CHECK_FALSE(rz.discrepancy);
  auto r0 = six_conditions(FpModule::zero_module(Z), I, 4);
  CHECK(r0.all_hold());
}

TEST_CASE("theorems: six conditions for a two-term complex") {
  auto Z = Ring::integers();
  FpModule F = FpModule::free_module(Z, 1);
  auto C = BoundedComplex::two_term(map_mul_element(F, Z->from_int(5)), 0);
  auto r = six_conditions_complex(C, Ideal::make(Z, {Z->from_int(2)}), 5);
  CHECK(r.all_hold());
  CHECK_FALSE(r.discrepancy);
}

TEST_CASE("theorems: factorization check") {
  auto Z = Ring::integers();
  auto I = Ideal::make(Z, {Z->from_int(2)});
  CHECK(factorization_check(FpModule::free_module(Z, 1), I, 5).all_hold());
  FpModule MM = FpModule::present(Z, 2, {{Z->zero(), Z->from_int(3)}}); // Z (+) Z/3
  CHECK(factorization_check(MM, I, 5).all_hold());
  CHECK(factorization_check(FpModule::zero_module(Z), I, 3).all_hold());
}

TEST_CASE("theorems: spectral edge on K(2) (+) shifted K(3)") {
  auto Z = Ring::integers();
  FpModule F = FpModule::free_module(Z, 1);
  auto K2 = BoundedComplex::two_term(map_mul_element(F, Z->from_int(2)), 0);
  auto K3 = BoundedComplex::two_term(map_mul_element(F, Z->from_int(3)), 0);
  auto C = sum_complexes(K2, shift(K3, 2));
  auto r = spectral_edge(C, Ideal::make(Z, {Z->from_int(2)}), 5);
  CHECK(r.all_hold());
  CHECK(r.verdict_of("degree -1").is_holds());
  CHECK(r.verdict_of("degree 1").is_holds());
}

TEST_CASE("theorems: spectral edge on an acyclic complex") {
  auto Z = Ring::integers();
  FpModule F = FpModule::free_module(Z, 1);
  auto C = BoundedComplex::two_term(ModuleMap::identity(F), 0);
  auto r = spectral_edge(C, Ideal::make(Z, {Z->from_int(2)}), 4);
  CHECK(r.all_hold());
}

TEST_CASE("theorems: base change, positive case Z -> Z[t]/(3t-1)") {
  auto Z = Ring::integers();
  auto Rt = Ring::poly(CoeffDomain::integer(), {"t"});
  auto S = Ring::quotient(Rt, {Rt->from_int(3) * Rt->var(0) - Rt->one()});
  RingMap theta = RingMap::make(Z, S, {});
  auto I = Ideal::make(Z, {Z->from_int(2)});
  auto J = Ideal::make(S, {S->from_int(2)});
  auto r = base_change_suite(theta, I, J, 5);
  CHECK(r.verdict_of("d").is_holds());
  CHECK(r.verdict_of("b").is_holds());
  CHECK(r.verdict_of("c").is_holds());
  CHECK(r.verdict_of("interleaving").witnesses == std::vector<std::pair<int, int>>{{1, 1}});
  CHECK_FALSE(r.discrepancy);
}

TEST_CASE("theorems: base change, gap case Q[x] -> Q[x]/(x^3)") {
  auto P = Ring::poly(CoeffDomain::rational(), {"x"});
  auto S = Ring::quotient(P, {P->var(0).pow(3)});
  RingMap theta = RingMap::make(P, S, {S->var(0)});
  auto I = Ideal::make(P, {P->var(0)});
  auto J = Ideal::make(S, {S->var(0)});
  auto r = base_change_suite(theta, I, J, 6);
  CHECK(r.verdict_of("d").is_holds());
  CHECK(r.verdict_of("b").is_fails());
  CHECK(r.verdict_of("c").is_fails());
  CHECK(r.discrepancy);
}

TEST_CASE("theorems: base change radical precondition") {
  auto P = Ring::poly(CoeffDomain::rational(), {"x"});
  auto S = Ring::poly(CoeffDomain::rational(), {"x", "y"});
  RingMap theta = RingMap::make(P, S, {S->var(0)});
  CHECK_THROWS_AS(base_change_suite(theta, Ideal::make(P, {P->var(0)}),
                                    Ideal::make(S, {S->var(1)}), 4),
                  std::invalid_argument);
}

TEST_CASE("theorems: radical invariance of the six conditions") {
  auto P = Ring::poly(CoeffDomain::rational(), {"x"});
  FpModule Mx = FpModule::present(P, 1, {{P->var(0)}});
  auto r1 = radical_invariance_check(Mx, {P->var(0)}, {P->var(0).pow(2)}, 4);
  CHECK_FALSE(r1.discrepancy);
  CHECK(r1.all_hold());
  FpModule Mu = FpModule::present(P, 1, {{P->var(0) - P->one()}});
  auto r2 = radical_invariance_check(Mu, {P->var(0)}, {P->var(0).pow(3)}, 4);
  CHECK_FALSE(r2.discrepancy);
  CHECK_THROWS(radical_invariance_check(Mx, {P->var(0)}, {P->var(0) - P->one()}, 4));
}

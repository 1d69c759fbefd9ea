#pragma once

#include <functional>
#include <mutex>
#include <string>

#include "adicert/complexes.hpp"

namespace adicert {

/// Certified three-valued outcome.  A negative verdict is always
/// qualified by the inspection depth; Holds carries re-checkable
/// witnesses (typically (n, m) index pairs).
struct Verdict {
  enum class Kind { Holds, FailsUpToDepth, Undetermined };
  Kind kind = Kind::Undetermined;
  int depth = 0;
  std::vector<std::pair<int, int>> witnesses;
  std::string note;

  static Verdict holds(int depth, std::vector<std::pair<int, int>> w = {},
                       std::string note = "");
  static Verdict fails(int depth, std::string note = "");
  static Verdict undetermined(int depth, std::string note = "");
  bool is_holds() const { return kind == Kind::Holds; }
  bool is_fails() const { return kind == Kind::FailsUpToDepth; }
  std::string kind_str() const;
};

/// Combine componentwise: Holds only if all hold; Fails dominates
/// Undetermined.
Verdict verdict_all(const std::vector<Verdict>& parts, int depth);

/// Lazy indexed family with memoized stages and structure maps; copies
/// share the cache.  Stage indices start at 1.  For inverse systems
/// (towers) transition(n) is stage(n+1) -> stage(n); for directed systems
/// it is stage(n) -> stage(n+1).
template <class Obj, class Map>
class System {
public:
  using StageFn = std::function<Obj(int)>;
  using MapFn = std::function<Map(int)>;

  System() = default;
  System(StageFn s, MapFn m) : state_(std::make_shared<State>()) {
    state_->stage_fn = std::move(s);
    state_->map_fn = std::move(m);
  }

  Obj stage(int n) const {
    {
      std::lock_guard<std::mutex> lk(state_->mu);
      auto it = state_->stages.find(n);
      if (it != state_->stages.end()) return it->second;
    }
    Obj o = state_->stage_fn(n);
    std::lock_guard<std::mutex> lk(state_->mu);
    return state_->stages.emplace(n, std::move(o)).first->second;
  }

  Map transition(int n) const {
    {
      std::lock_guard<std::mutex> lk(state_->mu);
      auto it = state_->maps.find(n);
      if (it != state_->maps.end()) return it->second;
    }
    Map m = state_->map_fn(n);
    std::lock_guard<std::mutex> lk(state_->mu);
    return state_->maps.emplace(n, std::move(m)).first->second;
  }

  bool valid() const { return (bool)state_; }

private:
  struct State {
    StageFn stage_fn;
    MapFn map_fn;
    std::map<int, Obj> stages;
    std::map<int, Map> maps;
    std::mutex mu;
  };
  std::shared_ptr<State> state_;
};

using ModuleTower = System<FpModule, ModuleMap>;
using ModuleIndSystem = System<FpModule, ModuleMap>;
using ComplexTower = System<BoundedComplex, ChainMap>;
using ComplexIndSystem = System<BoundedComplex, ChainMap>;

ModuleTower constant_module_tower(const FpModule& M);

/// stage(m) -> stage(n), m >= n (identity when m == n).
ModuleMap tower_composite(const ModuleTower& T, int m, int n);
/// stage(n) -> stage(m), n <= m.
ModuleMap ind_composite(const ModuleIndSystem& S, int n, int m);
ChainMap complex_tower_composite(const ComplexTower& T, int m, int n);

/// Levelwise map of towers; squares are validated by the consumers.
struct TowerMap {
  ModuleTower src, tgt;
  std::function<ModuleMap(int)> comp; // src.stage(n) -> tgt.stage(n)
};
TowerMap constant_to_tower(const FpModule& M, const ModuleTower& T,
                           std::function<ModuleMap(int)> comp);

/// Homology of a tower of complexes, with induced transitions.
ModuleTower homology_tower(const ComplexTower& T, int degree);
ModuleIndSystem homology_ind(const ComplexIndSystem& S, int degree);

Verdict pro_zero(const ModuleTower& T, int depth);
Verdict ind_zero(const ModuleIndSystem& S, int depth);

/// Pro-vanishing up to re-indexing: Holds when some uniform shift
/// e <= depth - 1 makes every testable composite stage(n+e) -> stage(n)
/// vanish.  This is the criterion used inside pro_iso, where interleaved
/// index schemes are allowed.
Verdict pro_zero_interleaved(const ModuleTower& T, int depth);

ModuleTower kernel_tower(const TowerMap& f);
ModuleTower cokernel_tower(const TowerMap& f);

/// Holds iff kernel and cokernel towers are pro-zero up to an
/// interleaving shift; throws on non-commuting levelwise data.
Verdict pro_iso(const TowerMap& f, int depth);

struct MlReport {
  Verdict ml, lim1_zero;
  bool eventually_constant = false;
  FpModule lim;   // meaningful when eventually_constant
  int stable_from = 0;
};
MlReport ml_lim_diagnostics(const ModuleTower& T, int depth);

/// Do the rows of A and B span the same submodule of M?
bool same_submodule(const FpModule& M, const RMat& A, const RMat& B);

} // namespace adicert

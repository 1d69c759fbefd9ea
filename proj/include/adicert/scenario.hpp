#pragma once

#include <stdexcept>

#include "adicert/theorems.hpp"

namespace adicert {

/// Parse/validation failure with a 1-based source position.
struct ScenarioError : std::runtime_error {
  int line, col;
  ScenarioError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ")"),
        line(line), col(col) {}
};

/// One task from a scenario, with its operands already resolved against
/// the declarations that precede it.
struct ScenarioTask {
  std::string kind;
  int line = 1;
  int depth = 8;
  std::vector<std::string> arg_names; // as written, for reporting
  std::vector<FpModule> mods;
  std::vector<Ideal> ideals;
  std::vector<BoundedComplex> cxs;
  std::vector<RingMap> rmaps;
  std::vector<RingPtr> rings;
  std::vector<std::vector<RingElement>> lists;
};

struct Scenario {
  std::string name;
  std::string source_text;
  std::size_t declaration_count = 0;
  std::map<std::string, RingPtr> rings;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, FpModule> modules;
  std::map<std::string, BoundedComplex> complexes;
  std::map<std::string, RingMap> maps;
  std::vector<ScenarioTask> tasks;
};

/// Declarations: `ring R = poly(QQ, [x, y])` / `integers` /
/// `integers_mod(8)` / `quotient(P, [x^3])`; `ideal I = ideal(R, [x, y])`;
/// `module M = coker(R, 1, [[8]]) | free(R, 1) | cyclic(I) | zero(R)`;
/// `complex C = koszul(R, [2], 1) | concentrated(M, 0) | shift(C, 2) |
/// sum(C, D)`; `map f = ringmap(R -> S, [t])`.  Tasks:
/// `task <kind> <args...> depth=<n>`; module/complex expressions may
/// appear inline as task arguments.
Scenario parse_scenario(const std::string& text, const std::string& name);

/// Parse a ring element like `3*t - 1` or `x^2*y` in the given ring.
RingElement parse_ring_element(const RingPtr& ring, const std::string& text);

} // namespace adicert

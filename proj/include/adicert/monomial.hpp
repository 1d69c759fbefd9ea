#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace adicert {

/// Exponent vector over a fixed variable list.
struct Monomial {
  std::vector<std::uint32_t> e;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e(nvars, 0) {}

  std::uint64_t degree() const {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
  }
  bool is_one() const {
    for (auto x : e) if (x) return false;
    return true;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  /// this / o, requires o.divides(*this)
  Monomial quotient(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.e.size(); ++i)
      if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
    return r;
  }
  static Monomial var(std::size_t nvars, std::size_t i, std::uint32_t k = 1) {
    Monomial r(nvars);
    r.e[i] = k;
    return r;
  }
};

enum class MonomialOrder { Grevlex, Lex, Block };

/// Compares monomials; returns <0, 0, >0 as a < b, a == b, a > b.
/// Block order: compare the variables [0, block) by grevlex first (as a
/// dominant block), then the rest by grevlex; used for elimination.
inline int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder ord,
                    std::size_t block = 0) {
  auto grevlex_range = [&](std::size_t lo, std::size_t hi) -> int {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) { da += a.e[i]; db += b.e[i]; }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1; // reverse-lex
    }
    return 0;
  };
  switch (ord) {
    case MonomialOrder::Lex:
      for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      return 0;
    case MonomialOrder::Grevlex:
      return grevlex_range(0, a.e.size());
    case MonomialOrder::Block: {
      int c = grevlex_range(0, block);
      if (c) return c;
      return grevlex_range(block, a.e.size());
    }
  }
  return 0;
}

inline std::string mono_str(const Monomial& m, const std::vector<std::string>& vars) {
  if (m.is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

} // namespace adicert

#include "adicert/scenario.hpp"

#include <algorithm>
#include <optional>

namespace adicert {
namespace {

struct Token {
  enum Kind { Ident, Int, Punct, Newline, End } kind;
  std::string text;
  int line = 1, col = 1;
  std::size_t ofs = 0;
};

[[noreturn]] void fail(const std::string& msg, const Token& at) {
  throw ScenarioError(msg, at.line, at.col);
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Token::Kind k, std::string t, int l, int c, std::size_t o) {
    out.push_back({k, std::move(t), l, c, o});
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (ch == '\n') {
      push(Token::Newline, "\n", line, col, i);
      ++i, ++line, col = 1;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i, ++col;
      continue;
    }
    int l = line, c = col;
    std::size_t o = i;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string id;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        id += text[i++], ++col;
      push(Token::Ident, std::move(id), l, c, o);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string n;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        n += text[i++], ++col;
      push(Token::Int, std::move(n), l, c, o);
      continue;
    }
    if (ch == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      push(Token::Punct, "->", l, c, o);
      i += 2, col += 2;
      continue;
    }
    if (std::string("=()[],+-*^").find(ch) != std::string::npos) {
      push(Token::Punct, std::string(1, ch), l, c, o);
      ++i, ++col;
      continue;
    }
    throw ScenarioError(std::string("unexpected character '") + ch + "'", line, col);
  }
  push(Token::End, "", line, col, text.size());
  return out;
}

class Parser {
public:
  Parser(const std::string& text, const std::string& name) : toks_(lex(text)) {
    sc_.name = name;
    sc_.source_text = text;
  }

  RingElement element(const RingPtr& ring) {
    RingElement e = parse_expr(ring);
    while (at(Token::Newline)) next();
    if (!at(Token::End)) fail("unexpected trailing input", cur());
    return e;
  }

  Scenario run() {
    for (;;) {
      while (at(Token::Newline)) next();
      if (at(Token::End)) break;
      statement();
      if (!at(Token::End)) expect_newline();
    }
    return std::move(sc_);
  }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Scenario sc_;

  const Token& cur() const { return toks_[pos_]; }
  bool at(Token::Kind k) const { return cur().kind == k; }
  bool at_punct(const std::string& p) const { return at(Token::Punct) && cur().text == p; }
  bool at_ident(const std::string& id) const { return at(Token::Ident) && cur().text == id; }
  Token next() { return toks_[pos_++]; }

  Token expect_punct(const std::string& p) {
    if (!at_punct(p)) fail("expected '" + p + "'", cur());
    return next();
  }
  Token expect_ident() {
    if (!at(Token::Ident)) fail("expected an identifier", cur());
    return next();
  }
  mpz_class expect_int() {
    if (!at(Token::Int)) fail("expected an integer", cur());
    return mpz_class(next().text);
  }
  void expect_newline() {
    if (!at(Token::Newline)) fail("expected end of statement", cur());
    next();
  }

  void declare_name(const Token& nm) {
    const std::string& n = nm.text;
    if (sc_.rings.count(n) || sc_.ideals.count(n) || sc_.modules.count(n) ||
        sc_.complexes.count(n) || sc_.maps.count(n))
      fail("duplicate name '" + n + "'", nm);
  }

  const RingPtr& ring_ref(const Token& nm) {
    auto it = sc_.rings.find(nm.text);
    if (it == sc_.rings.end()) fail("unknown ring '" + nm.text + "'", nm);
    return it->second;
  }
  const Ideal& ideal_ref(const Token& nm) {
    auto it = sc_.ideals.find(nm.text);
    if (it == sc_.ideals.end()) fail("unknown ideal '" + nm.text + "'", nm);
    return it->second;
  }

  // ---- ring element expressions -------------------------------------
  RingElement parse_expr(const RingPtr& ring) {
    bool neg = false;
    if (at_punct("-")) next(), neg = true;
    RingElement acc = parse_term(ring);
    if (neg) acc = ring->zero() - acc;
    while (at_punct("+") || at_punct("-")) {
      bool minus = next().text == "-";
      RingElement t = parse_term(ring);
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }
  RingElement parse_term(const RingPtr& ring) {
    RingElement acc = parse_factor(ring);
    for (;;) {
      if (at_punct("*")) {
        next();
        acc = acc * parse_factor(ring);
      } else if (at(Token::Ident) || at(Token::Int) || at_punct("(")) {
        acc = acc * parse_factor(ring); // implicit product, e.g. 3t
      } else {
        break;
      }
    }
    return acc;
  }
  RingElement parse_factor(const RingPtr& ring) {
    RingElement base = parse_atom(ring);
    if (at_punct("^")) {
      next();
      mpz_class e = expect_int();
      base = base.pow(e.get_ui());
    }
    return base;
  }
  RingElement parse_atom(const RingPtr& ring) {
    if (at(Token::Int)) return ring->from_int(mpz_class(next().text));
    if (at_punct("(")) {
      next();
      RingElement e = parse_expr(ring);
      expect_punct(")");
      return e;
    }
    Token id = expect_ident();
    const auto& vars = ring->vars();
    auto it = std::find(vars.begin(), vars.end(), id.text);
    if (it == vars.end())
      fail("'" + id.text + "' is not a variable of the ring " + ring->description(), id);
    return ring->var(static_cast<std::size_t>(it - vars.begin()));
  }

  std::vector<RingElement> parse_list(const RingPtr& ring) {
    expect_punct("[");
    std::vector<RingElement> out;
    if (!at_punct("]")) {
      out.push_back(parse_expr(ring));
      while (at_punct(",")) next(), out.push_back(parse_expr(ring));
    }
    expect_punct("]");
    return out;
  }

  // ---- declarations -------------------------------------------------
  void statement() {
    Token head = expect_ident();
    if (head.text == "ring") decl_ring();
    else if (head.text == "ideal") decl_ideal();
    else if (head.text == "module") decl_module();
    else if (head.text == "complex") decl_complex();
    else if (head.text == "map") decl_map();
    else if (head.text == "task") task_stmt();
    else fail("expected a declaration or task, got '" + head.text + "'", head);
  }

  void decl_ring() {
    Token nm = expect_ident();
    declare_name(nm);
    expect_punct("=");
    Token kind = expect_ident();
    RingPtr r;
    if (kind.text == "integers") {
      r = Ring::integers();
    } else if (kind.text == "integers_mod") {
      expect_punct("(");
      mpz_class m = expect_int();
      expect_punct(")");
      r = Ring::integers_mod(m);
    } else if (kind.text == "poly") {
      expect_punct("(");
      Token cd = expect_ident();
      CoeffDomain dom = CoeffDomain::rational();
      if (cd.text == "QQ") dom = CoeffDomain::rational();
      else if (cd.text == "ZZ") dom = CoeffDomain::integer();
      else if (cd.text == "GF") {
        expect_punct("(");
        dom = CoeffDomain::prime_field(expect_int().get_ui());
        expect_punct(")");
      } else fail("expected a coefficient domain (QQ, ZZ, GF(p))", cd);
      expect_punct(",");
      expect_punct("[");
      std::vector<std::string> vars;
      vars.push_back(expect_ident().text);
      while (at_punct(",")) next(), vars.push_back(expect_ident().text);
      expect_punct("]");
      expect_punct(")");
      r = Ring::poly(dom, vars);
    } else if (kind.text == "quotient") {
      expect_punct("(");
      RingPtr base = ring_ref(expect_ident());
      expect_punct(",");
      auto defs = parse_list(base);
      expect_punct(")");
      r = Ring::quotient(base, defs);
    } else {
      fail("unknown ring constructor '" + kind.text + "'", kind);
    }
    sc_.rings.emplace(nm.text, std::move(r));
    ++sc_.declaration_count;
  }

  void decl_ideal() {
    Token nm = expect_ident();
    declare_name(nm);
    expect_punct("=");
    Token kw = expect_ident();
    if (kw.text != "ideal") fail("expected 'ideal(R, [...])'", kw);
    expect_punct("(");
    RingPtr r = ring_ref(expect_ident());
    expect_punct(",");
    auto gens = parse_list(r);
    expect_punct(")");
    sc_.ideals.emplace(nm.text, Ideal::make(r, gens));
    ++sc_.declaration_count;
  }

  FpModule parse_module_expr(const Token& kw) {
    if (kw.text == "free") {
      expect_punct("(");
      RingPtr r = ring_ref(expect_ident());
      expect_punct(",");
      mpz_class n = expect_int();
      expect_punct(")");
      return FpModule::free_module(r, n.get_ui());
    }
    if (kw.text == "zero") {
      expect_punct("(");
      RingPtr r = ring_ref(expect_ident());
      expect_punct(")");
      return FpModule::zero_module(r);
    }
    if (kw.text == "cyclic") {
      expect_punct("(");
      const Ideal& I = ideal_ref(expect_ident());
      expect_punct(")");
      return FpModule::cyclic(I);
    }
    if (kw.text == "coker") {
      expect_punct("(");
      RingPtr r = ring_ref(expect_ident());
      expect_punct(",");
      mpz_class g = expect_int();
      expect_punct(",");
      expect_punct("[");
      std::vector<std::vector<RingElement>> rows;
      if (!at_punct("]")) {
        rows.push_back(parse_list(r));
        while (at_punct(",")) next(), rows.push_back(parse_list(r));
      }
      Token close = cur();
      expect_punct("]");
      expect_punct(")");
      for (const auto& row : rows)
        if (row.size() != g.get_ui())
          fail("relation row has " + std::to_string(row.size()) + " entries, expected " +
                   g.get_str(),
               close);
      return FpModule::present(r, g.get_ui(), rows);
    }
    fail("unknown module constructor '" + kw.text + "'", kw);
  }

  void decl_module() {
    Token nm = expect_ident();
    declare_name(nm);
    expect_punct("=");
    Token kw = expect_ident();
    sc_.modules.emplace(nm.text, parse_module_expr(kw));
    ++sc_.declaration_count;
  }

  BoundedComplex parse_complex_expr(const Token& kw) {
    if (kw.text == "koszul") {
      expect_punct("(");
      RingPtr r = ring_ref(expect_ident());
      expect_punct(",");
      auto gens = parse_list(r);
      expect_punct(",");
      mpz_class n = expect_int();
      expect_punct(")");
      if (gens.empty() || n <= 0) fail("koszul needs generators and a level >= 1", kw);
      return koszul_complex(KoszulSpec::make(r, gens, n.get_ui()));
    }
    if (kw.text == "concentrated") {
      expect_punct("(");
      FpModule M = module_arg();
      expect_punct(",");
      int d = signed_int();
      expect_punct(")");
      return BoundedComplex::concentrated(M, d);
    }
    if (kw.text == "two_term") {
      expect_punct("(");
      FpModule M = module_arg();
      expect_punct(",");
      RingElement e = parse_expr(M.ring());
      expect_punct(")");
      return BoundedComplex::two_term(map_mul_element(M, e), 0);
    }
    if (kw.text == "shift") {
      expect_punct("(");
      BoundedComplex C = complex_arg();
      expect_punct(",");
      int d = signed_int();
      expect_punct(")");
      return shift(C, d);
    }
    if (kw.text == "sum") {
      expect_punct("(");
      BoundedComplex A = complex_arg();
      expect_punct(",");
      BoundedComplex B = complex_arg();
      expect_punct(")");
      return sum_complexes(A, B);
    }
    fail("unknown complex constructor '" + kw.text + "'", kw);
  }

  int signed_int() {
    bool neg = at_punct("-");
    if (neg) next();
    mpz_class n = expect_int();
    int v = static_cast<int>(n.get_si());
    return neg ? -v : v;
  }

  static bool is_module_keyword(const std::string& s) {
    return s == "free" || s == "zero" || s == "cyclic" || s == "coker";
  }
  static bool is_complex_keyword(const std::string& s) {
    return s == "koszul" || s == "concentrated" || s == "two_term" || s == "shift" ||
           s == "sum";
  }

  FpModule module_arg() {
    Token id = expect_ident();
    auto it = sc_.modules.find(id.text);
    if (it != sc_.modules.end()) return it->second;
    if (is_module_keyword(id.text)) return parse_module_expr(id);
    fail("'" + id.text + "' is not a module", id);
  }
  BoundedComplex complex_arg() {
    Token id = expect_ident();
    auto it = sc_.complexes.find(id.text);
    if (it != sc_.complexes.end()) return it->second;
    if (is_complex_keyword(id.text)) return parse_complex_expr(id);
    fail("'" + id.text + "' is not a complex", id);
  }

  void decl_complex() {
    Token nm = expect_ident();
    declare_name(nm);
    expect_punct("=");
    Token kw = expect_ident();
    sc_.complexes.emplace(nm.text, parse_complex_expr(kw));
    ++sc_.declaration_count;
  }

  void decl_map() {
    Token nm = expect_ident();
    declare_name(nm);
    expect_punct("=");
    Token kw = expect_ident();
    if (kw.text != "ringmap") fail("expected 'ringmap(R -> S, [...])'", kw);
    expect_punct("(");
    RingPtr src = ring_ref(expect_ident());
    expect_punct("->");
    RingPtr tgt = ring_ref(expect_ident());
    expect_punct(",");
    auto images = parse_list(tgt);
    expect_punct(")");
    if (images.size() != src->nvars())
      fail("ringmap needs " + std::to_string(src->nvars()) + " variable images, got " +
               std::to_string(images.size()),
           kw);
    sc_.maps.emplace(nm.text, RingMap::make(src, tgt, images));
    ++sc_.declaration_count;
  }

  // ---- tasks --------------------------------------------------------
  // Argument slot codes: M module, C complex, X module-or-complex,
  // I ideal, R ring, T ring map, L bracketed element list (over the ring
  // of the preceding R/M slot).
  static std::optional<std::string> task_signature(const std::string& kind) {
    if (kind == "profile") return "MI";
    if (kind == "six_conditions") return "XI";
    if (kind == "factorization") return "MI";
    if (kind == "spectral_edge") return "CI";
    if (kind == "base_change") return "TII";
    if (kind == "radical_invariance") return "MLL";
    if (kind == "wpr") return "RL";
    if (kind == "koszul_dual") return "RL";
    if (kind == "koszul_homology") return "RL";
    if (kind == "gm") return "MI";
    if (kind == "tor_ext") return "MM";
    if (kind == "completed_tensor") return "MMI";
    return std::nullopt;
  }

  std::string slice(std::size_t from, std::size_t to) const {
    std::string s = sc_.source_text.substr(from, to - from);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    return s;
  }

  void task_stmt() {
    Token kindTok = expect_ident();
    auto sig = task_signature(kindTok.text);
    if (!sig) fail("unknown task '" + kindTok.text + "'", kindTok);
    ScenarioTask t;
    t.kind = kindTok.text;
    t.line = kindTok.line;
    RingPtr ctx; // ring for list arguments
    for (char slot : *sig) {
      std::size_t from = cur().ofs;
      switch (slot) {
        case 'M': {
          FpModule M = module_arg();
          ctx = M.ring();
          t.mods.push_back(std::move(M));
          break;
        }
        case 'C': {
          BoundedComplex C = complex_arg();
          ctx = C.ring();
          t.cxs.push_back(std::move(C));
          break;
        }
        case 'X': {
          Token id = cur();
          if (at(Token::Ident) && sc_.complexes.count(id.text)) {
            next();
            t.cxs.push_back(sc_.complexes.at(id.text));
            ctx = t.cxs.back().ring();
          } else if (at(Token::Ident) && is_complex_keyword(id.text)) {
            next();
            t.cxs.push_back(parse_complex_expr(id));
            ctx = t.cxs.back().ring();
          } else {
            FpModule M = module_arg();
            ctx = M.ring();
            t.mods.push_back(std::move(M));
          }
          break;
        }
        case 'I': {
          t.ideals.push_back(ideal_ref(expect_ident()));
          break;
        }
        case 'R': {
          ctx = ring_ref(expect_ident());
          t.rings.push_back(ctx);
          break;
        }
        case 'T': {
          Token id = expect_ident();
          auto it = sc_.maps.find(id.text);
          if (it == sc_.maps.end()) fail("'" + id.text + "' is not a ring map", id);
          t.rmaps.push_back(it->second);
          break;
        }
        case 'L': {
          if (!ctx) fail("internal: list argument without a ring context", cur());
          t.lists.push_back(parse_list(ctx));
          break;
        }
      }
      t.arg_names.push_back(slice(from, cur().ofs));
    }
    while (at(Token::Ident)) {
      Token key = next();
      expect_punct("=");
      if (key.text == "depth") {
        mpz_class d = expect_int();
        t.depth = static_cast<int>(d.get_si());
        if (t.depth < 1) fail("depth must be >= 1", key);
      } else {
        fail("unknown task parameter '" + key.text + "'", key);
      }
    }
    sc_.tasks.push_back(std::move(t));
  }
};

} // namespace

Scenario parse_scenario(const std::string& text, const std::string& name) {
  return Parser(text, name).run();
}

RingElement parse_ring_element(const RingPtr& ring, const std::string& text) {
  return Parser(text, "element").element(ring);
}

} // namespace adicert

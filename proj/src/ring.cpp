#include "adicert/ring.hpp"

#include <sstream>
#include <stdexcept>

namespace adicert {

RingPtr Ring::integers() {
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = Kind::Integers;
  r->coeff_ = CoeffDomain::integer();
  return r;
}

RingPtr Ring::integers_mod(const mpz_class& m) {
  if (m < 1) throw std::invalid_argument("modulus must be positive");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = Kind::IntegersMod;
  r->modulus_ = m;
  r->coeff_ = CoeffDomain::integer();
  return r;
}

RingPtr Ring::poly(const CoeffDomain& coeff, const std::vector<std::string>& vars,
                   MonomialOrder ord) {
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = Kind::Poly;
  r->coeff_ = coeff;
  r->vars_ = vars;
  r->order_.ord = ord;
  return r;
}

RingPtr Ring::quotient(const RingPtr& base, const std::vector<RingElement>& defining) {
  if (!base || base->kind_ != Kind::Poly)
    throw std::invalid_argument("quotient base must be a polynomial ring");
  auto r = std::shared_ptr<Ring>(new Ring());
  r->kind_ = Kind::Quotient;
  r->coeff_ = base->coeff_;
  r->vars_ = base->vars_;
  r->order_ = base->order_;
  std::vector<MPoly> gens;
  for (const auto& e : defining) {
    if (!Ring::same(e.ring, base)) throw std::invalid_argument("defining element over wrong ring");
    if (!e.p.is_zero()) gens.push_back(e.p);
  }
  r->defining_gb_ = compute_groebner(r->coeff_, r->order_, gens);
  return r;
}

RingPtr Ring::ambient() const {
  if (kind_ == Kind::Poly)
    return std::const_pointer_cast<Ring>(shared_from_this());
  if (kind_ == Kind::Quotient) return Ring::poly(coeff_, vars_, order_.ord);
  throw std::logic_error("ambient() on a non-polynomial ring");
}

MPoly Ring::reduce_scalar(const MPoly& p) const {
  if (defining_gb_.basis.empty()) return p;
  return gb_reduce(defining_gb_, p).rem;
}

RingElement Ring::zero() const { return from_int(0); }
RingElement Ring::one() const { return from_int(1); }

RingElement Ring::from_int(const mpz_class& n) const {
  RingElement e;
  e.ring = shared_from_this();
  switch (kind_) {
    case Kind::Integers: e.z = n; break;
    case Kind::IntegersMod: {
      e.z = n % modulus_;
      if (e.z < 0) e.z += modulus_;
      break;
    }
    case Kind::Poly:
    case Kind::Quotient:
      e.p = reduce_scalar(MPoly::term(0, Monomial(nvars()), mpq_class(n), coeff_));
      break;
  }
  return e;
}

RingElement Ring::var(std::size_t i, std::uint32_t k) const {
  if (!is_polynomial()) throw std::logic_error("var() on a non-polynomial ring");
  if (i >= nvars()) throw std::out_of_range("variable index");
  RingElement e;
  e.ring = shared_from_this();
  e.p = reduce_scalar(MPoly::term(0, Monomial::var(nvars(), i, k), 1, coeff_));
  return e;
}

RingElement Ring::from_mpoly(const MPoly& p) const {
  if (!is_polynomial()) throw std::logic_error("from_mpoly() on a non-polynomial ring");
  RingElement e;
  e.ring = shared_from_this();
  MPoly q = p;
  for (auto& t : q.t) {
    t.c = coeff_.normalize(t.c);
    if (t.comp != 0) throw std::invalid_argument("ring element with nonzero component");
  }
  q.t.erase(std::remove_if(q.t.begin(), q.t.end(),
                           [](const Term& t) { return t.c == 0; }),
            q.t.end());
  e.p = reduce_scalar(q);
  return e;
}

int Ring::resolution_bound(int fallback) const {
  switch (kind_) {
    case Kind::Integers: return 1;
    case Kind::Poly: return (int)nvars();
    default: return fallback;
  }
}

bool Ring::same(const RingPtr& a, const RingPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind_ != b->kind_ || a->modulus_ != b->modulus_ || a->coeff_ != b->coeff_ ||
      a->vars_ != b->vars_ || a->order_.ord != b->order_.ord)
    return false;
  const auto& x = a->defining_gb_.basis;
  const auto& y = b->defining_gb_.basis;
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return false;
  return true;
}

std::string Ring::description() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Integers: os << "ZZ"; break;
    case Kind::IntegersMod: os << "ZZ/" << modulus_.get_str(); break;
    case Kind::Poly:
    case Kind::Quotient: {
      switch (coeff_.kind()) {
        case CoeffKind::Rational: os << "QQ"; break;
        case CoeffKind::Integer: os << "ZZ"; break;
        case CoeffKind::PrimeField: os << "GF(" << coeff_.char_p() << ")"; break;
      }
      os << "[";
      for (std::size_t i = 0; i < vars_.size(); ++i)
        os << (i ? "," : "") << vars_[i];
      os << "]";
      if (kind_ == Kind::Quotient) {
        os << "/(";
        for (std::size_t i = 0; i < defining_gb_.basis.size(); ++i)
          os << (i ? "," : "") << poly_str(defining_gb_.basis[i], vars_);
        os << ")";
      }
      break;
    }
  }
  return os.str();
}

bool RingElement::is_zero() const {
  return ring->is_polynomial() ? p.is_zero() : z == 0;
}

namespace {
void check_same(const RingElement& a, const RingElement& b) {
  if (!Ring::same(a.ring, b.ring)) throw std::invalid_argument("ring mismatch");
}
} // namespace

RingElement RingElement::operator+(const RingElement& o) const {
  check_same(*this, o);
  if (!ring->is_polynomial()) return ring->from_int(z + o.z);
  return ring->from_mpoly(MPoly::add(p, o.p, ring->coeff(), ring->order()));
}

RingElement RingElement::operator-(const RingElement& o) const {
  check_same(*this, o);
  if (!ring->is_polynomial()) return ring->from_int(z - o.z);
  return ring->from_mpoly(MPoly::sub(p, o.p, ring->coeff(), ring->order()));
}

RingElement RingElement::operator*(const RingElement& o) const {
  check_same(*this, o);
  if (!ring->is_polynomial()) return ring->from_int(z * o.z);
  return ring->from_mpoly(MPoly::mul_scalar_poly(p, o.p, ring->coeff(), ring->order()));
}

RingElement RingElement::operator-() const {
  if (!ring->is_polynomial()) return ring->from_int(-z);
  return ring->from_mpoly(MPoly::neg(p, ring->coeff()));
}

bool RingElement::operator==(const RingElement& o) const {
  check_same(*this, o);
  return ring->is_polynomial() ? p == o.p : z == o.z;
}

RingElement RingElement::pow(unsigned long n) const {
  RingElement r = ring->one();
  RingElement b = *this;
  while (n) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

std::string poly_str(const MPoly& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.t) {
    mpq_class c = t.c;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string ms = mono_str(t.m, vars);
    if (c != 1 || ms == "1") {
      os << c.get_str();
      if (ms != "1") os << "*";
    }
    if (ms != "1") os << ms;
  }
  return os.str();
}

std::string RingElement::str() const {
  if (!ring->is_polynomial()) return z.get_str();
  return poly_str(p, ring->vars());
}

} // namespace adicert

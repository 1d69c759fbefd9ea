#pragma once

#include <memory>
#include <string>
#include <vector>

#include "adicert/groebner.hpp"

namespace adicert {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Element of a supported base ring, stored in canonical normal form:
/// an integer (Integers / IntegersMod, reduced into [0, m)) or a reduced
/// polynomial (Poly / Quotient, reduced modulo the defining basis).
struct RingElement {
  RingPtr ring;
  mpz_class z;
  MPoly p;

  bool is_zero() const;
  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator-() const;
  bool operator==(const RingElement& o) const;
  bool operator!=(const RingElement& o) const { return !(*this == o); }
  RingElement pow(unsigned long n) const;
  std::string str() const;
};

/// One of the supported Noetherian base rings.  Immutable after
/// construction; shared by pointer.  The defining ideal of a quotient is
/// stored as a reduced Groebner basis.
class Ring : public std::enable_shared_from_this<Ring> {
public:
  enum class Kind { Integers, IntegersMod, Poly, Quotient };

  static RingPtr integers();
  static RingPtr integers_mod(const mpz_class& m);
  static RingPtr poly(const CoeffDomain& coeff, const std::vector<std::string>& vars,
                      MonomialOrder ord = MonomialOrder::Grevlex);
  /// base must be a Poly ring; defining generators are elements of it.
  static RingPtr quotient(const RingPtr& base, const std::vector<RingElement>& defining);

  Kind kind() const { return kind_; }
  const mpz_class& modulus() const { return modulus_; }
  const CoeffDomain& coeff() const { return coeff_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermOrder& order() const { return order_; }
  const std::vector<MPoly>& defining_basis() const { return defining_gb_.basis; }
  const GroebnerBasis& defining_gb() const { return defining_gb_; }
  bool is_euclidean() const { return kind_ == Kind::Integers || kind_ == Kind::IntegersMod; }
  bool is_polynomial() const { return kind_ == Kind::Poly || kind_ == Kind::Quotient; }
  /// Poly ring underlying a Quotient (self for Poly).
  RingPtr ambient() const;

  RingElement zero() const;
  RingElement one() const;
  RingElement from_int(const mpz_class& n) const;
  RingElement var(std::size_t i, std::uint32_t k = 1) const;
  RingElement from_mpoly(const MPoly& p) const; // reduces into normal form
  RingElement element(const mpz_class& n) const { return from_int(n); }

  /// Normal form of a scalar polynomial modulo the defining ideal.
  MPoly reduce_scalar(const MPoly& p) const;

  /// Bound on resolution length after which syzygies must vanish for the
  /// ring to be regular at desk scale: 1 over Z, nvars over Poly; no
  /// finite bound for the other kinds (returns fallback).
  int resolution_bound(int fallback = 6) const;

  std::string description() const;

  static bool same(const RingPtr& a, const RingPtr& b);

private:
  friend struct RingElement;
  Ring() = default;
  Kind kind_ = Kind::Integers;
  mpz_class modulus_;
  CoeffDomain coeff_ = CoeffDomain::rational();
  std::vector<std::string> vars_;
  TermOrder order_;
  GroebnerBasis defining_gb_; // empty basis for Poly
};

std::string poly_str(const MPoly& p, const std::vector<std::string>& vars);

} // namespace adicert

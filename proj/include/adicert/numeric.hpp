#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace adicert {

enum class CoeffKind { Rational, PrimeField, Integer };

/// Exact scalar arithmetic for the three supported coefficient domains:
/// Q, F_p (p prime), and Z.  Values are carried as mpq_class; PrimeField
/// and Integer values always have denominator 1, PrimeField values are
/// canonical representatives in [0, p).
class CoeffDomain {
public:
  static CoeffDomain rational() { return CoeffDomain(CoeffKind::Rational, 0); }
  static CoeffDomain prime_field(unsigned long p) {
    if (p < 2) throw std::invalid_argument("prime field characteristic must be >= 2");
    return CoeffDomain(CoeffKind::PrimeField, p);
  }
  static CoeffDomain integer() { return CoeffDomain(CoeffKind::Integer, 0); }

  CoeffKind kind() const { return kind_; }
  unsigned long char_p() const { return p_; }
  bool is_field() const { return kind_ != CoeffKind::Integer; }

  bool operator==(const CoeffDomain& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const CoeffDomain& o) const { return !(*this == o); }

  mpq_class normalize(const mpq_class& a) const {
    if (kind_ == CoeffKind::PrimeField) {
      mpz_class n = a.get_num() % mpz_class(p_);
      if (n < 0) n += p_;
      // denominators are inverted away; a PrimeField value should never
      // carry one, but be tolerant when embedding rationals.
      if (a.get_den() != 1) {
        mpq_class d(a.get_den());
        return mul(mpq_class(n), inv(normalize(d)));
      }
      return mpq_class(n);
    }
    mpq_class r = a;
    r.canonicalize();
    return r;
  }

  mpq_class add(const mpq_class& a, const mpq_class& b) const { return normalize(a + b); }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return normalize(a - b); }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return normalize(a * b); }
  mpq_class neg(const mpq_class& a) const { return normalize(-a); }

  bool is_zero(const mpq_class& a) const { return normalize(a) == 0; }

  bool is_unit(const mpq_class& a) const {
    if (is_zero(a)) return false;
    if (kind_ == CoeffKind::Integer) return a == 1 || a == -1;
    return true;
  }

  mpq_class inv(const mpq_class& a) const {
    if (kind_ == CoeffKind::PrimeField) {
      mpq_class an = normalize(a);
      mpz_class r;
      if (mpz_invert(r.get_mpz_t(), an.get_num().get_mpz_t(), mpz_class(p_).get_mpz_t()) == 0)
        throw std::domain_error("not invertible mod p");
      return mpq_class(r);
    }
    if (!is_unit(a)) throw std::domain_error("not a unit");
    return normalize(1 / a);
  }

  mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }

  /// Integer domain only: a = q*b + r with 0 <= r < |b|.
  void divmod(const mpq_class& a, const mpq_class& b, mpq_class& q, mpq_class& r) const {
    mpz_class qz, rz;
    mpz_fdiv_qr(qz.get_mpz_t(), rz.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    if (rz < 0) { // fdiv already gives sign of divisor; force 0 <= r < |b|
      if (b.get_num() > 0) { rz += b.get_num(); qz -= 1; }
      else { rz -= b.get_num(); qz += 1; }
    }
    q = mpq_class(qz);
    r = mpq_class(rz);
  }

  std::string str(const mpq_class& a) const { return normalize(a).get_str(); }

private:
  CoeffDomain(CoeffKind k, unsigned long p) : kind_(k), p_(p) {}
  CoeffKind kind_;
  unsigned long p_;
};

inline mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline void gcdext_z(const mpz_class& a, const mpz_class& b,
                     mpz_class& g, mpz_class& u, mpz_class& v) {
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

} // namespace adicert

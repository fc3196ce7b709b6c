#pragma once

#include <iosfwd>
#include <string>

#include "qaffine/qfield/poly.hpp"

namespace qaffine {

/*
 * Element of Q(q^{1/2}) as num/den, both Laurent polynomials in s = q^{1/2}.
 * Canonical form: gcd(num, den) = 1, den.low() == 0, den's lowest coefficient > 0.
 * Two scalars are equal iff their canonical forms coincide.
 */
class Scalar {
 public:
  Scalar() : den_(Poly::constant(1)) {}
  Scalar(long long n) : num_(Poly::constant(n)), den_(Poly::constant(1)) {}  // NOLINT
  Scalar(int n) : Scalar(static_cast<long long>(n)) {}                        // NOLINT
  explicit Scalar(const Poly& laurent) : num_(laurent), den_(Poly::constant(1)) {}
  static Scalar fraction(Poly num, Poly den);
  static Scalar rational(const Integer& n, const Integer& d);
  // s^e = q^{e/2}
  static Scalar s_pow(int e) { return Scalar(Poly::monomial(1, e)); }
  static Scalar q_pow(int e) { return s_pow(2 * e); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  Scalar operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Scalar& operator+=(const Scalar& o) { return *this = add(*this, o); }
  Scalar& operator-=(const Scalar& o) { return *this = add(*this, -o); }
  Scalar& operator*=(const Scalar& o) { return *this = mul(*this, o); }
  Scalar& operator/=(const Scalar& o) { return *this = mul(*this, o.inverse()); }
  friend Scalar operator+(const Scalar& a, const Scalar& b) { return add(a, b); }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return add(a, -b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) { return mul(a, b); }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return mul(a, b.inverse()); }

  static Scalar add(const Scalar& a, const Scalar& b);
  static Scalar mul(const Scalar& a, const Scalar& b);
  Scalar inverse() const;
  Scalar pow(int e) const;
  // multiply by s^e without touching the denominator
  Scalar times_s_pow(int e) const {
    Scalar r = *this;
    r.num_ = r.num_.shifted(e);
    return r;
  }
  // q -> q^{-1}
  Scalar bar() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  size_t hash() const { return num_.hash() * 31 + den_.hash(); }

  // human readable, in powers of q (half-integer exponents allowed)
  std::string str() const;
  // lossless compact text form "low:c0,c1,..|low:c0,c1,.."
  std::string encode() const;
  static Scalar decode(const std::string& s);

 private:
  static Scalar canonical(Poly num, Poly den);
  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

// Laurent polynomial in s printed in powers of q
std::string poly_in_q(const Poly& p);

}  // namespace qaffine

#pragma once

#include <string>
#include <vector>

#include "qaffine/qfield/integer.hpp"

namespace qaffine {

/*
 * Laurent polynomial with Integer coefficients in the variable s.
 * Stored as s^low * (c[0] + c[1] s + ...), trimmed so c.front() and c.back() are nonzero.
 * The zero polynomial has empty c and low == 0.
 */
class Poly {
 public:
  Poly() = default;
  static Poly constant(const Integer& c) { return monomial(c, 0); }
  static Poly monomial(const Integer& c, int e);
  static Poly from_coeffs(int low, std::vector<Integer> c);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return low_ == 0 && c_.size() == 1 && c_[0].is_one(); }
  bool is_monomial() const { return c_.size() == 1; }
  // constant polynomial (low power zero, single term)
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && low_ == 0); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  size_t size() const { return c_.size(); }
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer coeff(int e) const;
  const Integer& lowest() const { return c_.front(); }
  const Integer& leading() const { return c_.back(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }
  static Poly mul(const Poly& a, const Poly& b);
  Poly scaled(const Integer& k) const;
  Poly shifted(int e) const {
    Poly r = *this;
    if (!r.is_zero()) r.low_ += e;
    return r;
  }
  // s -> s^{-1}
  Poly inverted() const;

  // positive gcd of the coefficients (0 for the zero polynomial)
  Integer content() const;
  Poly divexact_int(const Integer& k) const;

  // Exact division in the Laurent ring. Returns false when d does not divide a.
  static bool try_divide(const Poly& a, const Poly& d, Poly* q);
  static Poly divexact(const Poly& a, const Poly& d);

  // gcd in Z[s, s^-1], normalized to low() == 0 with positive lowest coefficient
  static Poly gcd(const Poly& a, const Poly& b);

  // the unit-normalized representative: low() == 0 and positive lowest coefficient
  Poly unit_normal() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.low_ == b.low_ && a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  static int cmp(const Poly& a, const Poly& b);
  size_t hash() const;

  // evaluates the polynomial part (ignoring s^low) at an integer point
  void eval_poly(const mpz_class& x, mpz_class& out) const;

  std::string str(const char* var = "s") const;

 private:
  void trim();
  int low_ = 0;
  std::vector<Integer> c_;
};

}  // namespace qaffine

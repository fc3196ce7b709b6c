#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

namespace qaffine {

/*
 * Arbitrary precision integer with an inline int64 fast path.
 * The value lives in small_ unless it does not fit, in which case big_ holds it.
 */
class Integer {
 public:
  Integer() = default;
  Integer(long long v) : small_(static_cast<int64_t>(v)) {}  // NOLINT
  Integer(int v) : small_(v) {}                              // NOLINT
  explicit Integer(const mpz_class& v) { assign(v); }
  explicit Integer(__int128 v);
  static Integer from_string(const std::string& s);

  Integer(const Integer& o) : small_(o.small_) {
    if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
  }
  Integer(Integer&& o) noexcept = default;
  Integer& operator=(const Integer& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Integer& operator=(Integer&& o) noexcept = default;

  bool is_small() const { return !big_; }
  int64_t small() const { return small_; }
  mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(small_)); }
  void to_mpz(mpz_t out) const;

  int sign() const {
    if (!big_) return (small_ > 0) - (small_ < 0);
    return sgn(*big_);
  }
  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_one() const { return !big_ && small_ == 1; }
  size_t bits() const;

  Integer operator-() const;
  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);
  // this += a*b
  void addmul(const Integer& a, const Integer& b);
  void submul(const Integer& a, const Integer& b);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  // exact division; behaviour undefined when b does not divide a
  static Integer divexact(const Integer& a, const Integer& b);
  // floor division remainder test
  static bool divisible(const Integer& a, const Integer& b);
  static Integer gcd(const Integer& a, const Integer& b);
  Integer abs() const { return sign() < 0 ? -*this : *this; }

  friend bool operator==(const Integer& a, const Integer& b);
  friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
  static int cmp(const Integer& a, const Integer& b);
  friend bool operator<(const Integer& a, const Integer& b) { return cmp(a, b) < 0; }

  std::string str() const;
  size_t hash() const;

 private:
  void assign(const mpz_class& v);
  void normalize();

  int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

}  // namespace qaffine

#include "qaffine/qfield/integer.hpp"

#include <limits>
#include <stdexcept>

namespace qaffine {

namespace {

mpz_class from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class r(static_cast<unsigned long>(u >> 64));
  r <<= 64;
  r += mpz_class(static_cast<unsigned long>(u & ~static_cast<uint64_t>(0)));
  if (neg) r = -r;
  return r;
}

}  // namespace

Integer::Integer(__int128 v) {
  if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max()) {
    small_ = static_cast<int64_t>(v);
  } else {
    big_ = std::make_unique<mpz_class>(from_i128(v));
  }
}

Integer Integer::from_string(const std::string& s) {
  mpz_class v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad integer literal: " + s);
  return Integer(v);
}

void Integer::assign(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    small_ = v.get_si();
    big_.reset();
  } else {
    big_ = std::make_unique<mpz_class>(v);
  }
}

void Integer::normalize() {
  if (big_ && mpz_fits_slong_p(big_->get_mpz_t())) {
    small_ = big_->get_si();
    big_.reset();
  }
}

void Integer::to_mpz(mpz_t out) const {
  if (big_) {
    mpz_set(out, big_->get_mpz_t());
  } else {
    mpz_set_si(out, small_);
  }
}

size_t Integer::bits() const {
  if (big_) return mpz_sizeinbase(big_->get_mpz_t(), 2);
  uint64_t u = small_ < 0 ? -static_cast<uint64_t>(small_) : static_cast<uint64_t>(small_);
  return u == 0 ? 0 : 64 - __builtin_clzll(u);
}

Integer Integer::operator-() const {
  Integer r;
  if (!big_ && small_ != std::numeric_limits<int64_t>::min()) {
    r.small_ = -small_;
    return r;
  }
  r.assign(-to_mpz());
  return r;
}

Integer& Integer::operator+=(const Integer& o) {
  if (!big_ && !o.big_) {
    int64_t r;
    if (!__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign(to_mpz() + o.to_mpz());
  return *this;
}

Integer& Integer::operator-=(const Integer& o) {
  if (!big_ && !o.big_) {
    int64_t r;
    if (!__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign(to_mpz() - o.to_mpz());
  return *this;
}

Integer& Integer::operator*=(const Integer& o) {
  if (!big_ && !o.big_) {
    int64_t r;
    if (!__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign(to_mpz() * o.to_mpz());
  return *this;
}

void Integer::addmul(const Integer& a, const Integer& b) {
  if (!big_ && !a.big_ && !b.big_) {
    __int128 r = static_cast<__int128>(a.small_) * b.small_ + small_;
    if (r >= std::numeric_limits<int64_t>::min() && r <= std::numeric_limits<int64_t>::max()) {
      small_ = static_cast<int64_t>(r);
      return;
    }
  }
  mpz_class t = to_mpz();
  mpz_class bb = b.to_mpz();
  mpz_addmul(t.get_mpz_t(), a.to_mpz().get_mpz_t(), bb.get_mpz_t());
  assign(t);
}

void Integer::submul(const Integer& a, const Integer& b) {
  if (!big_ && !a.big_ && !b.big_) {
    __int128 r = static_cast<__int128>(small_) - static_cast<__int128>(a.small_) * b.small_;
    if (r >= std::numeric_limits<int64_t>::min() && r <= std::numeric_limits<int64_t>::max()) {
      small_ = static_cast<int64_t>(r);
      return;
    }
  }
  mpz_class t = to_mpz();
  mpz_class bb = b.to_mpz();
  mpz_submul(t.get_mpz_t(), a.to_mpz().get_mpz_t(), bb.get_mpz_t());
  assign(t);
}

Integer Integer::divexact(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_ && !(a.small_ == std::numeric_limits<int64_t>::min() && b.small_ == -1)) {
    return Integer(static_cast<long long>(a.small_ / b.small_));
  }
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(r);
}

bool Integer::divisible(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) {
    if (b.small_ == -1) return true;
    return a.small_ % b.small_ == 0;
  }
  return mpz_divisible_p(a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t()) != 0;
}

Integer Integer::gcd(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) {
    uint64_t x = a.small_ < 0 ? -static_cast<uint64_t>(a.small_) : static_cast<uint64_t>(a.small_);
    uint64_t y = b.small_ < 0 ? -static_cast<uint64_t>(b.small_) : static_cast<uint64_t>(b.small_);
    while (y) {
      uint64_t t = x % y;
      x = y;
      y = t;
    }
    if (x <= static_cast<uint64_t>(std::numeric_limits<int64_t>::max())) {
      return Integer(static_cast<long long>(x));
    }
  }
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(r);
}

bool operator==(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (!a.big_ || !b.big_) return false;  // normalized: big never fits in int64
  return *a.big_ == *b.big_;
}

int Integer::cmp(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return (a.small_ > b.small_) - (a.small_ < b.small_);
  return ::cmp(a.to_mpz(), b.to_mpz());
}

std::string Integer::str() const { return big_ ? big_->get_str() : std::to_string(small_); }

size_t Integer::hash() const {
  if (!big_) return std::hash<int64_t>()(small_);
  return std::hash<std::string>()(big_->get_str(16));
}

}  // namespace qaffine

#include "qaffine/qfield/scalar.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qaffine {

Scalar Scalar::canonical(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("Scalar with zero denominator");
  Scalar r;
  if (num.is_zero()) return r;
  num = num.shifted(-den.low());
  den = den.shifted(-den.low());
  if (den.size() == 1) {
    Integer d = den.lowest();
    Integer g = Integer::gcd(num.content(), d);
    if (d.sign() < 0) g = -g;
    r.num_ = num.divexact_int(g);
    r.den_ = Poly::constant(Integer::divexact(d, g));
    return r;
  }
  Poly g = Poly::gcd(num, den);
  if (!g.is_one()) {
    num = Poly::divexact(num, g);
    den = Poly::divexact(den, g);
  }
  if (den.lowest().sign() < 0) {
    num = -num;
    den = -den;
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

Scalar Scalar::fraction(Poly num, Poly den) { return canonical(std::move(num), std::move(den)); }

Scalar Scalar::rational(const Integer& n, const Integer& d) {
  return canonical(Poly::constant(n), Poly::constant(d));
}

Scalar Scalar::add(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Scalar r;
  if (a.den_.is_one() && b.den_.is_one()) {
    r.num_ = a.num_ + b.num_;
    return r;
  }
  if (a.den_ == b.den_) return canonical(a.num_ + b.num_, a.den_);
  if (a.den_.is_one()) {
    r.num_ = a.num_ * b.den_ + b.num_;
    r.den_ = b.den_;
    return r;
  }
  if (b.den_.is_one()) {
    r.num_ = b.num_ * a.den_ + a.num_;
    r.den_ = a.den_;
    return r;
  }
  Poly g = Poly::gcd(a.den_, b.den_);
  if (g.is_one()) {
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
    if (r.num_.is_zero()) return Scalar();
    return r;
  }
  Poly ad = Poly::divexact(a.den_, g), bd = Poly::divexact(b.den_, g);
  Poly n = a.num_ * bd + b.num_ * ad;
  if (n.is_zero()) return Scalar();
  Poly g2 = Poly::gcd(n, g);
  if (!g2.is_one()) {
    n = Poly::divexact(n, g2);
    g = Poly::divexact(g, g2);
  }
  Poly d = ad * bd * g;
  if (d.lowest().sign() < 0) {
    n = -n;
    d = -d;
  }
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  return r;
}

Scalar Scalar::mul(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  Scalar r;
  if (a.den_.is_one() && b.den_.is_one()) {
    r.num_ = a.num_ * b.num_;
    return r;
  }
  Poly an = a.num_, bn = b.num_, ad = a.den_, bd = b.den_;
  if (!bd.is_one()) {
    Poly g = Poly::gcd(an, bd);
    if (!g.is_one()) {
      an = Poly::divexact(an, g);
      bd = Poly::divexact(bd, g);
    }
  }
  if (!ad.is_one()) {
    Poly g = Poly::gcd(bn, ad);
    if (!g.is_one()) {
      bn = Poly::divexact(bn, g);
      ad = Poly::divexact(ad, g);
    }
  }
  Poly n = an * bn, d = ad * bd;
  if (d.lowest().sign() < 0) {
    n = -n;
    d = -d;
  }
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero Scalar");
  return canonical(den_, num_);
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Scalar Scalar::bar() const { return canonical(num_.inverted(), den_.inverted()); }

std::string poly_in_q(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coeffs();
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    int e = p.low() + static_cast<int>(i);
    bool neg = c[i].sign() < 0;
    Integer a = c[i].abs();
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (e == 0) {
      os << a.str();
      continue;
    }
    if (!a.is_one()) os << a.str() << "*";
    os << "q";
    if (e != 2) {
      if (e % 2 == 0) {
        os << "^" << (e / 2 < 0 ? "(" + std::to_string(e / 2) + ")" : std::to_string(e / 2));
      } else {
        os << "^(" << e << "/2)";
      }
    }
  }
  return os.str();
}

std::string Scalar::str() const {
  if (den_.is_one()) return poly_in_q(num_);
  std::string n = poly_in_q(num_);
  if (num_.size() > 1) n = "(" + n + ")";
  return n + "/(" + poly_in_q(den_) + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

namespace {

std::string encode_poly(const Poly& p) {
  std::string s = std::to_string(p.low()) + ":";
  bool first = true;
  for (const auto& c : p.coeffs()) {
    if (!first) s += ",";
    s += c.str();
    first = false;
  }
  return s;
}

Poly decode_poly(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad scalar encoding: " + s);
  int low = std::stoi(s.substr(0, colon));
  std::vector<Integer> c;
  std::string rest = s.substr(colon + 1);
  size_t pos = 0;
  while (pos < rest.size()) {
    size_t comma = rest.find(',', pos);
    if (comma == std::string::npos) comma = rest.size();
    c.push_back(Integer::from_string(rest.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return Poly::from_coeffs(low, std::move(c));
}

}  // namespace

std::string Scalar::encode() const { return encode_poly(num_) + "|" + encode_poly(den_); }

Scalar Scalar::decode(const std::string& s) {
  auto bar = s.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("bad scalar encoding: " + s);
  return canonical(decode_poly(s.substr(0, bar)), decode_poly(s.substr(bar + 1)));
}

}  // namespace qaffine

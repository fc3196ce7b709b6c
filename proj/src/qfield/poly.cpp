#include "qaffine/qfield/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qaffine {

Poly Poly::monomial(const Integer& c, int e) {
  Poly p;
  if (!c.is_zero()) {
    p.low_ = e;
    p.c_.push_back(c);
  }
  return p;
}

Poly Poly::from_coeffs(int low, std::vector<Integer> c) {
  Poly p;
  p.low_ = low;
  p.c_ = std::move(c);
  p.trim();
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  size_t k = 0;
  while (k < c_.size() && c_[k].is_zero()) ++k;
  if (k == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  if (k > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
    low_ += static_cast<int>(k);
  }
}

Integer Poly::coeff(int e) const {
  if (c_.empty() || e < low_ || e > high()) return Integer(0);
  return c_[static_cast<size_t>(e - low_)];
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  if (lo < low_ || hi > high()) {
    std::vector<Integer> nc(static_cast<size_t>(hi - lo + 1));
    for (size_t i = 0; i < c_.size(); ++i) nc[i + static_cast<size_t>(low_ - lo)] = std::move(c_[i]);
    c_ = std::move(nc);
    low_ = lo;
  }
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i + static_cast<size_t>(o.low_ - low_)] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = -o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  if (lo < low_ || hi > high()) {
    std::vector<Integer> nc(static_cast<size_t>(hi - lo + 1));
    for (size_t i = 0; i < c_.size(); ++i) nc[i + static_cast<size_t>(low_ - lo)] = std::move(c_[i]);
    c_ = std::move(nc);
    low_ = lo;
  }
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i + static_cast<size_t>(o.low_ - low_)] -= o.c_[i];
  trim();
  return *this;
}

namespace {

bool all_small(const std::vector<Integer>& v, size_t& maxbits) {
  maxbits = 0;
  for (const auto& x : v) {
    if (!x.is_small()) return false;
    maxbits = std::max(maxbits, x.bits());
  }
  return true;
}

}  // namespace

Poly Poly::mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  r.low_ = a.low_ + b.low_;
  const size_t n = a.c_.size(), m = b.c_.size();
  if (n == 1 && a.c_[0].is_one()) {
    r.c_ = b.c_;
    return r;
  }
  if (m == 1 && b.c_[0].is_one()) {
    r.c_ = a.c_;
    return r;
  }
  size_t ba, bb;
  if (all_small(a.c_, ba) && all_small(b.c_, bb)) {
    size_t lenbits = 64 - __builtin_clzll(std::min(n, m));
    if (ba + bb + lenbits <= 125) {
      std::vector<__int128> acc(n + m - 1, 0);
      for (size_t i = 0; i < n; ++i) {
        const __int128 ai = a.c_[i].small();
        if (ai == 0) continue;
        for (size_t j = 0; j < m; ++j) acc[i + j] += ai * b.c_[j].small();
      }
      r.c_.reserve(acc.size());
      for (auto v : acc) r.c_.emplace_back(v);
      r.trim();
      return r;
    }
  }
  r.c_.assign(n + m - 1, Integer(0));
  for (size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < m; ++j) r.c_[i + j].addmul(a.c_[i], b.c_[j]);
  }
  r.trim();
  return r;
}

Poly Poly::scaled(const Integer& k) const {
  if (k.is_zero()) return Poly();
  if (k.is_one()) return *this;
  Poly r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

Poly Poly::inverted() const {
  if (is_zero()) return *this;
  Poly r;
  r.low_ = -high();
  r.c_.assign(c_.rbegin(), c_.rend());
  return r;
}

Integer Poly::content() const {
  Integer g(0);
  for (const auto& x : c_) {
    g = Integer::gcd(g, x);
    if (g.is_one()) break;
  }
  return g;
}

Poly Poly::divexact_int(const Integer& k) const {
  if (k.is_one()) return *this;
  Poly r = *this;
  for (auto& x : r.c_) x = Integer::divexact(x, k);
  return r;
}

bool Poly::try_divide(const Poly& a, const Poly& d, Poly* q) {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) {
    if (q) *q = Poly();
    return true;
  }
  const int qlow = a.low_ - d.low_;
  if (d.c_.size() == 1) {
    const Integer& dc = d.c_[0];
    for (const auto& x : a.c_) {
      if (!Integer::divisible(x, dc)) return false;
    }
    if (q) {
      q->low_ = qlow;
      q->c_.clear();
      q->c_.reserve(a.c_.size());
      for (const auto& x : a.c_) q->c_.push_back(Integer::divexact(x, dc));
    }
    return true;
  }
  const size_t n = a.c_.size(), m = d.c_.size();
  if (n < m) return false;
  if (!Integer::divisible(a.c_.back(), d.c_.back())) return false;
  if (!Integer::divisible(a.c_.front(), d.c_.front())) return false;
  std::vector<Integer> rem = a.c_;
  std::vector<Integer> quo(n - m + 1);
  const Integer& lc = d.c_.back();
  for (size_t i = n - m + 1; i-- > 0;) {
    Integer& top = rem[i + m - 1];
    if (top.is_zero()) continue;
    if (!Integer::divisible(top, lc)) return false;
    Integer c = Integer::divexact(top, lc);
    for (size_t j = 0; j < m; ++j) rem[i + j].submul(c, d.c_[j]);
    quo[i] = std::move(c);
  }
  for (size_t i = 0; i + 1 < m; ++i) {
    if (!rem[i].is_zero()) return false;
  }
  if (q) *q = from_coeffs(qlow, std::move(quo));
  return true;
}

Poly Poly::divexact(const Poly& a, const Poly& d) {
  Poly q;
  if (!try_divide(a, d, &q)) throw std::domain_error("inexact polynomial division");
  return q;
}

Poly Poly::unit_normal() const {
  if (is_zero()) return *this;
  Poly r = *this;
  r.low_ = 0;
  if (r.c_.front().sign() < 0) r = -r;
  return r;
}

namespace {

Poly primitive(const Poly& p) {
  Integer c = p.content();
  Poly r = p.divexact_int(c);
  if (r.leading().sign() < 0) r = -r;
  return r;
}

// pseudo-remainder of a by b (both with low() == 0)
Poly prem(const Poly& a, const Poly& b) {
  std::vector<Integer> r = a.coeffs();
  const auto& bc = b.coeffs();
  const size_t m = bc.size();
  const Integer& lc = b.leading();
  while (r.size() >= m) {
    Integer t = r.back();
    size_t shift = r.size() - m;
    for (auto& x : r) x *= lc;
    for (size_t j = 0; j < m; ++j) r[shift + j].submul(t, bc[j]);
    while (!r.empty() && r.back().is_zero()) r.pop_back();
  }
  return Poly::from_coeffs(0, std::move(r));
}

Poly gcd_prs(Poly a, Poly b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.is_zero()) {
    Poly r = prem(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : primitive(r.shifted(-r.low()));
    if (b.size() == 1) return Poly::constant(1);
  }
  return primitive(a);
}

Poly from_digits(mpz_class h, const mpz_class& xi) {
  std::vector<Integer> c;
  mpz_class half = xi / 2, r;
  while (h != 0) {
    mpz_fdiv_r(r.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
    if (r > half) r -= xi;
    c.emplace_back(r);
    h -= r;
    mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
  }
  return Poly::from_coeffs(0, std::move(c));
}

mpz_class max_norm(const Poly& p) {
  mpz_class m = 0;
  for (const auto& x : p.coeffs()) {
    mpz_class v = abs(x.to_mpz());
    if (v > m) m = v;
  }
  return m;
}

// both arguments primitive with low() == 0 and at least two terms
Poly gcd_primitive(const Poly& a, const Poly& b) {
  if (a == b || a == -b) return primitive(a);
  mpz_class na = max_norm(a), nb = max_norm(b);
  mpz_class xi = 2 * std::min(na, nb) + 29;
  const size_t deg = std::max(a.size(), b.size());
  mpz_class va, vb, h;
  for (int iter = 0; iter < 6; ++iter) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * deg > 40000) break;
    a.eval_poly(xi, va);
    b.eval_poly(xi, vb);
    mpz_gcd(h.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
    Poly g = from_digits(h, xi);
    if (!g.is_zero()) {
      g = primitive(g.shifted(-g.low()));
      if (g.size() == 1) return Poly::constant(1);
      if (Poly::try_divide(a, g, nullptr) && Poly::try_divide(b, g, nullptr)) return g;
    }
    xi = xi * 73794 / 27011;
  }
  return gcd_prs(a, b);
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.unit_normal();
  if (b.is_zero()) return a.unit_normal();
  Poly A = a.shifted(-a.low_), B = b.shifted(-b.low_);
  Integer ca = A.content(), cb = B.content();
  Integer g = Integer::gcd(ca, cb);
  if (A.size() == 1 || B.size() == 1) return Poly::constant(g);
  Poly pa = A.divexact_int(ca), pb = B.divexact_int(cb);
  Poly G = gcd_primitive(pa, pb);
  if (G.size() == 1) return Poly::constant(g);
  return G.scaled(g).unit_normal();
}

int Poly::cmp(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size() ? -1 : 1;
  if (a.low_ != b.low_) return a.low_ < b.low_ ? -1 : 1;
  for (size_t i = 0; i < a.c_.size(); ++i) {
    int c = Integer::cmp(a.c_[i], b.c_[i]);
    if (c) return c;
  }
  return 0;
}

size_t Poly::hash() const {
  size_t h = std::hash<int>()(low_) ^ (c_.size() * 0x9e3779b97f4a7c15ULL);
  for (const auto& x : c_) h = h * 1000003u ^ x.hash();
  return h;
}

void Poly::eval_poly(const mpz_class& x, mpz_class& out) const {
  out = 0;
  mpz_class t;
  for (size_t i = c_.size(); i-- > 0;) {
    out *= x;
    c_[i].to_mpz(t.get_mpz_t());
    out += t;
  }
}

std::string Poly::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const Integer& c = c_[i];
    if (c.is_zero()) continue;
    int e = low_ + static_cast<int>(i);
    bool neg = c.sign() < 0;
    Integer a = c.abs();
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << a.str();
      continue;
    }
    if (!a.is_one()) os << a.str() << "*";
    os << var;
    if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
  }
  return os.str();
}

}  // namespace qaffine

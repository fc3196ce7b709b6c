#include "qaffine/fockvo/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace qaffine::fock {

namespace {
constexpr int kUnbounded = 1 << 28;
Half clamp(int t) { return Half{std::min(t, kUnbounded)}; }
}  // namespace

std::string Half::str() const {
  if (integral()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

Half times(Half a, Half b) {
  const int p = a.twice * b.twice;
  if (p % 2 != 0) throw std::domain_error("exponent leaves (1/2)Z: " + a.str() + " * " + b.str());
  return Half{p / 2};
}

Scalar q_pow_half(int e, Half x) { return Scalar::s_pow(e * x.twice); }

PowerSeries PowerSeries::one(int order) {
  PowerSeries p(order);
  p[0] = Scalar(1);
  return p;
}

PowerSeries PowerSeries::geometric(int order, const Scalar& c) {
  PowerSeries p(order);
  Scalar x(1);
  for (int k = 0; k <= order; ++k) {
    p[k] = x;
    x *= c;
  }
  return p;
}

PowerSeries PowerSeries::linear(int order, const Scalar& c) {
  PowerSeries p = one(order);
  if (order >= 1) p[1] = -c;
  return p;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  const int n = std::min(order(), o.order());
  PowerSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
    }
  }
  return r;
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  const int n = std::min(order(), o.order());
  PowerSeries r(n);
  for (int i = 0; i <= n; ++i) r[i] = c_[i] + o.c_[i];
  return r;
}

PowerSeries PowerSeries::scaled(const Scalar& s) const {
  PowerSeries r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

// e' = f' e, solved term by term
PowerSeries PowerSeries::exp() const {
  if (!c_[0].is_zero()) throw std::domain_error("exp of a series with constant term");
  const int n = order();
  PowerSeries e = one(n);
  for (int m = 1; m <= n; ++m) {
    Scalar s;
    for (int k = 1; k <= m; ++k) {
      if (!c_[k].is_zero()) s += Scalar(k) * c_[k] * e[m - k];
    }
    e[m] = s / Scalar(m);
  }
  return e;
}

// f' = g'/g
PowerSeries PowerSeries::log() const {
  if (!c_[0].is_one()) throw std::domain_error("log of a series with constant term other than 1");
  const int n = order();
  PowerSeries l(n);
  for (int m = 1; m <= n; ++m) {
    Scalar s = Scalar(m) * c_[m];
    for (int k = 1; k < m; ++k) {
      if (!l[k].is_zero()) s -= Scalar(k) * l[k] * c_[m - k];
    }
    l[m] = s / Scalar(m);
  }
  return l;
}

PowerSeries PowerSeries::inverse() const {
  if (c_[0].is_zero()) throw std::domain_error("inverse of a series without constant term");
  const int n = order();
  PowerSeries r(n);
  const Scalar inv = c_[0].inverse();
  r[0] = inv;
  for (int m = 1; m <= n; ++m) {
    Scalar s;
    for (int k = 1; k <= m; ++k) {
      if (!c_[k].is_zero()) s += c_[k] * r[m - k];
    }
    r[m] = -s * inv;
  }
  return r;
}

nlohmann::ordered_json PowerSeries::to_json() const {
  auto a = nlohmann::ordered_json::array();
  for (const auto& c : c_) a.push_back(c.str());
  return a;
}

PowerSeries qproduct_log(const QProduct& p, int order) {
  PowerSeries l(order);
  Scalar bn(1), sn(1);
  for (int n = 1; n <= order; ++n) {
    bn *= p.base;
    sn *= p.step;
    if (bn.is_zero()) continue;
    l[n] = -bn / (Scalar(n) * (Scalar(1) - sn));
  }
  return l;
}

PowerSeries qproduct_expand(const std::vector<std::pair<QProduct, int>>& factors, int order) {
  PowerSeries l(order);
  for (const auto& [p, e] : factors) l = l + qproduct_log(p, order).scaled(Scalar(e));
  return l.exp();
}

Half Series::height(const Exps& e) const {
  int h = 0;
  for (int m = 0; m < vars_; ++m) h -= (vars_ - 1 - m) * e[m].twice;
  return Half{h};
}

void Series::put(const Exps& e, const Scalar& c) {
  if (c.is_zero() || height(e) > valid_) return;
  auto [it, fresh] = t_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Series Series::monomial(int vars, const Scalar& c, Exps e) {
  if (static_cast<int>(e.size()) != vars) throw std::invalid_argument("monomial: wrong number of exponents");
  Series s(vars, Half{kUnbounded});
  s.put(e, c);
  return s;
}

Series Series::in_ratio(int vars, int i, int j, const PowerSeries& p) {
  if (!(0 <= i && i < j && j < vars)) throw std::invalid_argument("in_ratio: need i < j");
  Series s(vars, Half::whole(p.order()));
  for (int k = 0; k <= p.order(); ++k) {
    Exps e(vars);
    e[i] = Half::whole(-k);
    e[j] = Half::whole(k);
    s.put(e, p[k]);
  }
  return s;
}

Scalar Series::at(const Exps& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? Scalar() : it->second;
}

std::optional<Half> Series::min_height() const {
  std::optional<Half> m;
  for (const auto& [e, c] : t_) {
    Half h = height(e);
    if (!m || h < *m) m = h;
  }
  return m;
}

Series Series::operator*(const Series& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("series in different variables");
  const int ma = min_height() ? min_height()->twice : kUnbounded;
  const int mb = o.min_height() ? o.min_height()->twice : kUnbounded;
  Series r(vars_, clamp(std::min(valid_.twice + mb, o.valid_.twice + ma)));
  for (const auto& [ea, ca] : t_) {
    for (const auto& [eb, cb] : o.t_) {
      Exps e(vars_);
      for (int m = 0; m < vars_; ++m) e[m] = ea[m] + eb[m];
      r.put(e, ca * cb);
    }
  }
  return r;
}

Series Series::scaled(const Scalar& s) const {
  Series r(vars_, valid_);
  for (const auto& [e, c] : t_) r.put(e, c * s);
  return r;
}

Series::Diff Series::compare(const Series& a, const Series& b) {
  Diff d;
  if (a.vars_ != b.vars_) {
    d.equal = false;
    d.witness = "different numbers of variables";
    return d;
  }
  d.common = std::min(a.valid_, b.valid_);
  std::map<Exps, bool> keys;
  for (const auto& [e, c] : a.t_) keys[e] = true;
  for (const auto& [e, c] : b.t_) keys[e] = true;
  for (const auto& [e, unused] : keys) {
    if (a.height(e) > d.common) continue;
    ++d.compared;
    Scalar x = a.at(e), y = b.at(e);
    if (x != y && d.equal) {
      d.equal = false;
      d.witness = "u^" + exps_str(e) + ": " + x.str() + " vs " + y.str();
    }
  }
  return d;
}

nlohmann::ordered_json Series::to_json() const {
  nlohmann::ordered_json j;
  j["vars"] = vars_;
  j["valid_to"] = valid_.str();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : t_) terms.push_back({exps_str(e), c.str()});
  j["terms"] = terms;
  return j;
}

std::string exps_str(const Series::Exps& e) {
  std::string s = "(";
  for (size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + e[i].str();
  return s + ")";
}

}  // namespace qaffine::fock

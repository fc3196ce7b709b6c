#include "qaffine/fockvo/fock.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "qaffine/qfield/qnumbers.hpp"

namespace qaffine::fock {

OscillatorAlgebra a_oscillators(int level) {
  return {"a[level " + std::to_string(level) + "]",
          [level](int k) { return qint(2 * k) * qint(level * k) / Scalar(k); }, false};
}

OscillatorAlgebra b_oscillators() {
  return {"b", [](int k) { return (Scalar::q_pow(2 * k) - Scalar(1) + Scalar::q_pow(-2 * k)) / Scalar(k); }, true};
}

int FockState::degree() const {
  int d = 0;
  for (int p : parts) d += p;
  return d;
}

std::string FockState::str() const {
  std::string s = "[";
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + "]v(" + charge.str() + ")";
}

bool FockOrder::operator()(const FockState& a, const FockState& b) const {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  std::vector<int> sa(a.parts.rbegin(), a.parts.rend()), sb(b.parts.rbegin(), b.parts.rend());
  if (sa != sb) return sa < sb;
  return a.charge < b.charge;
}

FockVector vacuum(Half charge) { return FockVector{{FockState{{}, charge}, Scalar(1)}}; }

bool is_zero(const FockVector& v) {
  for (const auto& [s, c] : v) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void add_to(FockVector& acc, const FockVector& v, const Scalar& c) {
  for (const auto& [s, x] : v) {
    Scalar y = x * c;
    if (y.is_zero()) continue;
    auto [it, fresh] = acc.emplace(s, y);
    if (!fresh) {
      it->second += y;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

FockVector scaled(const FockVector& v, const Scalar& c) {
  FockVector r;
  add_to(r, v, c);
  return r;
}

std::string str(const FockVector& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [st, c] : v) s += (s.empty() ? "" : " + ") + ("(" + c.str() + ")") + st.str();
  return s;
}

FockVector apply_beta(const OscillatorAlgebra& alg, int k, const FockVector& v) {
  FockVector r;
  for (const auto& [st, c] : v) {
    if (k == 0) {
      if (!alg.zero_mode) throw std::invalid_argument(alg.name + " has no zero mode");
      FockVector one{{st, Scalar(1)}};
      add_to(r, one, c * Scalar::rational(st.charge.twice, 2));
    } else if (k < 0) {
      FockState t = st;
      t.parts.push_back(-k);
      std::sort(t.parts.rbegin(), t.parts.rend());
      add_to(r, FockVector{{t, Scalar(1)}}, c);
    } else {
      const long m = std::count(st.parts.begin(), st.parts.end(), k);
      if (m == 0) continue;
      FockState t = st;
      t.parts.erase(std::find(t.parts.begin(), t.parts.end(), k));
      add_to(r, FockVector{{t, Scalar(1)}}, c * Scalar(static_cast<int>(m)) * alg.kappa(k));
    }
  }
  return r;
}

FockVector apply_shift(Half r, const FockVector& v) {
  FockVector out;
  for (const auto& [st, c] : v) {
    FockState t = st;
    t.charge = t.charge + r;
    out.emplace(t, c);
  }
  return out;
}

std::vector<FockState> fock_basis(Half charge, int max_degree) {
  std::vector<FockState> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    out.push_back(FockState{cur, charge});
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(max_degree, max_degree);
  std::sort(out.begin(), out.end(), FockOrder{});
  return out;
}

}  // namespace qaffine::fock

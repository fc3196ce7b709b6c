#include "qaffine/fockvo/vertex.hpp"

#include <functional>
#include <stdexcept>

#include "qaffine/linalg/blockop.hpp"
#include "qaffine/qfield/qnumbers.hpp"

namespace qaffine::fock {

namespace {

// gamma^{k/2} at level l
Scalar gamma_half_pow(int level, int k) { return Scalar::s_pow(level * k); }

VertexOpSpec single(std::string name, VertexFactor f) { return VertexOpSpec{std::move(name), {std::move(f)}}; }

FockVector exp_part(const OscillatorAlgebra& alg, const std::function<Scalar(int)>& c, int d, const FockVector& v,
                    int sign) {
  FockVector out;
  if (d < 0) return out;
  for_each_partition(d, [&](const std::vector<int>& mult) {
    Scalar coef(1);
    FockVector w = v;
    for (int k = 1; k < static_cast<int>(mult.size()) && !w.empty(); ++k) {
      if (mult[k] == 0) continue;
      const Scalar ck = c(k);
      if (ck.is_zero()) {
        w.clear();
        break;
      }
      for (int n = 1; n <= mult[k]; ++n) {
        coef *= ck / Scalar(n);
        w = apply_beta(alg, sign * k, w);
      }
    }
    if (!w.empty()) add_to(out, w, coef);
  });
  return out;
}

}  // namespace

// calls fn(multiplicities) for every partition of d; mult[k] = number of parts equal to k
void for_each_partition(int d, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> mult(d + 1);
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      fn(mult);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      ++mult[p];
      rec(left - p, p);
      --mult[p];
    }
  };
  rec(d, d);
}

VertexOpSpec rescaled(const VertexOpSpec& v, int e, const std::string& name) {
  VertexOpSpec r{name.empty() ? v.name + "(q^" + std::to_string(e) + " z)" : name, {}};
  for (const auto& f : v.factors) {
    VertexFactor g = f;
    auto cm = f.cminus, cp = f.cplus;
    g.cminus = [cm, e](int k) { return cm(k) * Scalar::q_pow(e * k); };
    g.cplus = [cp, e](int k) { return cp(k) * Scalar::q_pow(-e * k); };
    g.arg_qpow = f.arg_qpow + e;
    g.dconj_coeff = f.dconj_coeff * q_pow_half(e, f.dconj_pow);
    r.factors.push_back(std::move(g));
  }
  return r;
}

VertexOpSpec tensor(const VertexOpSpec& a, const VertexOpSpec& b, const std::string& name) {
  VertexOpSpec r{name, a.factors};
  for (const auto& f : b.factors) {
    for (const auto& g : a.factors) {
      if (g.alg.name == f.alg.name) throw std::invalid_argument("tensor: repeated algebra " + f.alg.name);
    }
    r.factors.push_back(f);
  }
  return r;
}

VertexOpSpec phi0(int level) {
  VertexFactor f;
  f.alg = a_oscillators(level);
  f.cminus = [level](int k) { return gamma_half_pow(level, k) / qint(2 * k); };
  f.cplus = [level](int k) { return -gamma_half_pow(level, k) / qint(2 * k); };
  f.slope = Half{1};
  f.shift = Half::whole(level);
  f.dhat = 1;
  return single("Phi0_l" + std::to_string(level), f);
}

VertexOpSpec psi_lowest(int level) {
  VertexFactor f;
  f.alg = a_oscillators(level);
  f.cminus = [level](int k) { return -gamma_half_pow(level, -k) * Scalar::q_pow(2 * k) / qint(2 * k); };
  f.cplus = [level](int k) { return gamma_half_pow(level, -k) * Scalar::q_pow(-2 * k) / qint(2 * k); };
  f.slope = Half{-1};
  f.arg_qpow = 2;
  f.shift = Half::whole(-level);
  f.dhat = -1;
  return single("Psi_l" + std::to_string(level), f);
}

VertexOpSpec omega0() {
  VertexFactor f;
  f.alg = b_oscillators();
  f.cminus = [](int k) { return Scalar::q_pow(k); };
  f.cplus = [](int k) { return -Scalar::q_pow(k); };
  f.slope = Half::whole(1);
  f.shift = Half::whole(1);
  return single("Omega0", f);
}

VertexOpSpec omega2() {
  VertexFactor f;
  f.alg = b_oscillators();
  f.cminus = [](int k) { return -Scalar::q_pow(-k); };
  f.cplus = [](int k) { return Scalar::q_pow(-k); };
  f.slope = Half::whole(-1);
  f.shift = Half::whole(-1);
  return single("Omega2", f);
}

VertexOpSpec x_current(int sign, int level) {
  VertexFactor f;
  f.alg = a_oscillators(level);
  f.atomic = true;
  f.cminus = [sign, level](int k) { return Scalar(sign) * gamma_half_pow(level, -sign * k) / qint(level * k); };
  f.cplus = [sign, level](int k) { return Scalar(-sign) * gamma_half_pow(level, -sign * k) / qint(level * k); };
  f.shift = Half::whole(2 * sign);
  f.dconj_coeff = Scalar(-1);
  f.dconj_pow = Half::whole(-sign);
  return single(sign > 0 ? "Xp" : "Xm", f);
}

VertexOpSpec y_current(int sign) {
  if (sign > 0) return tensor(rescaled(psi_lowest(2), -2), omega2(), "Yp");
  return tensor(phi0(2), omega0(), "Ym");
}

std::vector<std::string> spec_names() {
  return {"Phi0_l1", "Phi0_l2", "Phi0_l3", "Psi_l1", "Psi_l2", "Psi_l3", "Omega0", "Omega2", "Xp", "Xm", "Yp", "Ym"};
}

VertexOpSpec named_spec(const std::string& name) {
  for (int l = 1; l <= 3; ++l) {
    if (name == "Phi0_l" + std::to_string(l)) return phi0(l);
    if (name == "Psi_l" + std::to_string(l)) return psi_lowest(l);
  }
  if (name == "Omega0") return omega0();
  if (name == "Omega2") return omega2();
  if (name == "Xp") return x_current(1, 2);
  if (name == "Xm") return x_current(-1, 2);
  if (name == "Yp") return y_current(1);
  if (name == "Ym") return y_current(-1);
  throw std::invalid_argument("unknown vertex operator: " + name);
}

nlohmann::ordered_json spec_json(const VertexOpSpec& v, int order) {
  nlohmann::ordered_json j;
  j["name"] = v.name;
  auto fs = nlohmann::ordered_json::array();
  for (const auto& f : v.factors) {
    nlohmann::ordered_json o;
    o["algebra"] = f.alg.name;
    o["atomic"] = f.atomic;
    auto cm = nlohmann::ordered_json::array(), cp = nlohmann::ordered_json::array();
    for (int k = 1; k <= order; ++k) {
      cm.push_back(f.cminus(k).str());
      cp.push_back(f.cplus(k).str());
    }
    o["cminus"] = cm;
    o["cplus"] = cp;
    o["slope"] = f.slope.str();
    o["arg_qpow"] = f.arg_qpow;
    o["shift"] = f.shift.str();
    o["dhat"] = f.dhat;
    o["dconj"] = {f.dconj_coeff.str(), f.dconj_pow.str()};
    fs.push_back(o);
  }
  j["factors"] = fs;
  return j;
}

Series pair_contraction(const VertexOpSpec& a, const VertexOpSpec& b, int vars, int i, int j, int order) {
  PowerSeries expo(order);
  Scalar coeff(1);
  Series::Exps lead(vars);
  for (const auto& fa : a.factors) {
    for (const auto& fb : b.factors) {
      if (fa.alg.name != fb.alg.name) continue;
      if (fa.atomic && fb.atomic) throw std::invalid_argument("no contraction between two atomic factors");
      for (int k = 1; k <= order; ++k) expo[k] += fa.cplus(k) * fb.cminus(k) * fa.alg.kappa(k);
      const Half z = times(fa.slope, fb.shift);
      lead[i] = lead[i] + z;
      coeff *= q_pow_half(fa.arg_qpow, z);
      if (fa.dhat != 0) {
        coeff *= fb.dconj_coeff.pow(fa.dhat);
        lead[j] = lead[j] + fb.dconj_pow * fa.dhat;
      }
    }
  }
  return Series::monomial(vars, coeff, lead) * Series::in_ratio(vars, i, j, expo.exp());
}

Series contraction(const VertexOpSpec& a, const VertexOpSpec& b, int order) {
  return pair_contraction(a, b, 2, 0, 1, order);
}

Series contraction_multi(const std::vector<VertexOpSpec>& ops, int order) {
  const int n = static_cast<int>(ops.size());
  Series s = Series::monomial(n, Scalar(1), Series::Exps(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) s = s * pair_contraction(ops[i], ops[j], n, i, j, order);
  }
  return s;
}

Scalar bracket_coefficient(const VertexOpSpec& v, const std::string& alg, int k) {
  if (k == 0) throw std::invalid_argument("bracket_coefficient: k = 0");
  for (const auto& f : v.factors) {
    if (f.alg.name != alg) continue;
    return k > 0 ? f.cminus(k) * f.alg.kappa(k) : -f.cplus(-k) * f.alg.kappa(-k);
  }
  return Scalar();
}

FockVector creation_part(const OscillatorAlgebra& alg, const std::function<Scalar(int)>& cm, int d,
                         const FockVector& v) {
  return exp_part(alg, cm, d, v, -1);
}

FockVector annihilation_part(const OscillatorAlgebra& alg, const std::function<Scalar(int)>& cp, int d,
                             const FockVector& v) {
  return exp_part(alg, cp, d, v, 1);
}

FockVector apply_mode(const VertexOpSpec& v, Half m, const FockVector& x, int cap) {
  if (v.factors.size() != 1 || !v.factors[0].alg.zero_mode || v.factors[0].dhat != 0 || v.factors[0].atomic) {
    throw std::invalid_argument("apply_mode needs a single Fock factor: " + v.name);
  }
  const VertexFactor& f = v.factors[0];
  FockVector out;
  for (const auto& [st, c] : x) {
    const Half z0 = times(f.slope, st.charge);
    FockState moved = st;
    moved.charge = st.charge + f.shift;
    const FockVector w{{moved, c * q_pow_half(f.arg_qpow, z0)}};
    for (int dann = 0; dann <= st.degree(); ++dann) {
      const Half dcre = m - z0 + Half::whole(dann);
      if (!dcre.integral() || dcre.twice < 0) continue;
      FockVector a = annihilation_part(f.alg, f.cplus, dann, w);
      if (a.empty()) continue;
      if (st.degree() - dann + dcre.twice / 2 > cap) {
        throw TruncationOverflow("vertex operator mode " + m.str() + " on " + st.str() + " exceeds degree " +
                                 std::to_string(cap));
      }
      add_to(out, creation_part(f.alg, f.cminus, dcre.twice / 2, a));
    }
  }
  return out;
}

}  // namespace qaffine::fock

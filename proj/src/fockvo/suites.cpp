#include "qaffine/fockvo/suites.hpp"

#include "qaffine/qfield/qnumbers.hpp"

namespace qaffine::fock {

namespace {

Scalar q(int e) { return Scalar::q_pow(e); }
std::string lstr(int l) { return "l=" + std::to_string(l); }

using Exps = Series::Exps;

Series mono(int vars, const Scalar& c, std::vector<int> twice) {
  Exps e;
  for (int t : twice) e.push_back(Half{t});
  return Series::monomial(vars, c, e);
}

// prefactor of A(z)B(w) given as a monomial c z^a w^b times factors in w/z
struct Pair {
  std::string id;
  VertexOpSpec a, b;
  Series want;
};

}  // namespace

Series euler_factor(int vars, int i, int j, const Scalar& c, const Scalar& p, int power, int order) {
  // (c x; p) = sum (-1)^n p^{n(n-1)/2} c^n x^n / (p;p)_n and 1/(c x; p) = sum c^n x^n / (p;p)_n
  PowerSeries s(order);
  Scalar cn(1), pp(1);
  for (int n = 0; n <= order; ++n) {
    if (n > 0) {
      cn *= c;
      pp *= Scalar(1) - p.pow(n);
    }
    Scalar t = cn / pp;
    if (power > 0) t *= p.pow(n * (n - 1) / 2) * Scalar(n % 2 ? -1 : 1);
    s[n] = t;
  }
  return Series::in_ratio(vars, i, j, s);
}

Series linear_factor(int vars, int i, int j, const Scalar& c, int order) {
  return Series::in_ratio(vars, i, j, PowerSeries::linear(order, c));
}

Series geometric_factor(int vars, int i, int j, const Scalar& c, int order) {
  return Series::in_ratio(vars, i, j, PowerSeries::geometric(order, c));
}

void check_series(RelationEntry& e, const Series& got, const Series& want, const std::string& instance) {
  auto d = Series::compare(got, want);
  ++e.instances;
  e.states_checked += d.compared;
  if (!d.equal) e.fail({instance, "", d.witness});
  if (d.compared == 0) e.fail({instance, "", "nothing compared"});
}

RelationReport qexp_inverse_suite(int order) {
  RelationReport r;
  r.suite = "qexp-inverse";
  r.config = {{"order", order}};
  auto& e = r.add("exp_q(x) exp_{q^-1}(-x) = 1", "order <= " + std::to_string(order));
  for (int n = 0; n <= order; ++n) {
    Scalar s;
    for (int a = 0; a <= n; ++a) s += qexp_coeff(a, 1) * qexp_coeff(n - a, -1) * Scalar((n - a) % 2 ? -1 : 1);
    e.check(s == Scalar(n == 0 ? 1 : 0), "x^" + std::to_string(n), "", s.str());
  }
  auto& f = r.add("exp_{q^-1}(x) exp_q(-x) = 1", "order <= " + std::to_string(order));
  for (int n = 0; n <= order; ++n) {
    Scalar s;
    for (int a = 0; a <= n; ++a) s += qexp_coeff(a, -1) * qexp_coeff(n - a, 1) * Scalar((n - a) % 2 ? -1 : 1);
    f.check(s == Scalar(n == 0 ? 1 : 0), "x^" + std::to_string(n), "", s.str());
  }
  return r;
}

RelationReport log_identity_suite(int order) {
  RelationReport r;
  r.suite = "log-identity";
  r.config = {{"order", order}, {"product_step", "q^4"}};
  auto& e = r.add("-sum (1/k)([lk]/[2k]) z^k = log (q^{2-l} z; q^4)/(q^{2+l} z; q^4)",
                  "l in {1,2,3}, order <= " + std::to_string(order));
  auto& x = r.add("exp of the series equals the product ratio expanded termwise",
                  "l in {1,2,3}, order <= " + std::to_string(order));
  for (int l = 1; l <= 3; ++l) {
    PowerSeries lhs(order);
    for (int k = 1; k <= order; ++k) lhs[k] = -qint(l * k) / (qint(2 * k) * Scalar(k));
    PowerSeries rhs = qproduct_log({q(2 - l), q(4)}, order) + qproduct_log({q(2 + l), q(4)}, order).scaled(Scalar(-1));
    for (int k = 1; k <= order; ++k) {
      e.check(lhs[k] == rhs[k], lstr(l) + " z^" + std::to_string(k), "", (lhs[k] - rhs[k]).str());
    }
    Series ratio = euler_factor(2, 0, 1, q(2 - l), q(4), 1, order) * euler_factor(2, 0, 1, q(2 + l), q(4), -1, order);
    check_series(x, Series::in_ratio(2, 0, 1, lhs.exp()), ratio, lstr(l));
  }
  return r;
}

RelationReport omega_suite(int order) {
  RelationReport r;
  r.suite = "omega";
  r.config = {{"order", order}};
  const int n = order;
  const VertexOpSpec o0 = omega0(), o2 = omega2();
  std::vector<Pair> pairs = {
      {"Omega0(z) Omega0(w) = z (1 - w/z)(1 - q^4 w/z)/(1 - q^2 w/z) :Omega0(z) Omega0(w):", o0, o0,
       mono(2, Scalar(1), {2, 0}) * linear_factor(2, 0, 1, Scalar(1), n) * linear_factor(2, 0, 1, q(4), n) *
           geometric_factor(2, 0, 1, q(2), n)},
      {"Omega0(z) Omega2(w) = z^-1 (1 - w/z)/((1 - w/q^2 z)(1 - q^2 w/z)) :Omega0(z) Omega2(w):", o0, o2,
       mono(2, Scalar(1), {-2, 0}) * linear_factor(2, 0, 1, Scalar(1), n) * geometric_factor(2, 0, 1, q(-2), n) *
           geometric_factor(2, 0, 1, q(2), n)},
      {"Omega2(z) Omega0(w) = z^-1 (1 - w/z)/((1 - w/q^2 z)(1 - q^2 w/z)) :Omega2(z) Omega0(w):", o2, o0,
       mono(2, Scalar(1), {-2, 0}) * linear_factor(2, 0, 1, Scalar(1), n) * geometric_factor(2, 0, 1, q(-2), n) *
           geometric_factor(2, 0, 1, q(2), n)},
      {"Omega2(z) Omega2(w) = z (1 - w/z)(1 - w/q^4 z)/(1 - w/q^2 z) :Omega2(z) Omega2(w):", o2, o2,
       mono(2, Scalar(1), {2, 0}) * linear_factor(2, 0, 1, Scalar(1), n) * linear_factor(2, 0, 1, q(-4), n) *
           geometric_factor(2, 0, 1, q(-2), n)},
  };
  for (const auto& p : pairs) {
    auto& e = r.add(p.id, "order <= " + std::to_string(order));
    check_series(e, contraction(p.a, p.b, order), p.want, "");
  }
  auto& same = r.entries[1];
  check_series(same, contraction(o0, o2, order), contraction(o2, o0, order), "Omega0 Omega2 vs Omega2 Omega0");
  return r;
}

RelationReport normal_ordering_suite(int order) {
  RelationReport r;
  r.suite = "normal-ordering";
  r.config = {{"order", order}};
  const int n = order;
  const std::string win = "order <= " + std::to_string(order);
  const Scalar p4 = q(4);

  // general level
  struct General {
    std::string id;
    bool phi_a, phi_b;
  };
  const General gen[] = {
      {"Phi0(z) Phi0(w) = z^{l/2} (q^2 w/z; q^4)/(q^{2+2l} w/z; q^4) :Phi0(z) Phi0(w):", true, true},
      {"Phi0(z) Psi_l(w) = z^{-l/2} (q^{4+l} w/z; q^4)/(q^{4-l} w/z; q^4) :Phi0(z) Psi_l(w):", true, false},
      {"Psi_l(z) Phi0(w) = (q^2 z)^{-l/2} (q^l w/z; q^4)/(q^{-l} w/z; q^4) :Psi_l(z) Phi0(w):", false, true},
      {"Psi_l(z) Psi_l(w) = (q^2 z)^{l/2} (q^{2-2l} w/z; q^4)/(q^2 w/z; q^4) :Psi_l(z) Psi_l(w):", false, false},
  };
  for (int g = 0; g < 4; ++g) {
    auto& e = r.add(gen[g].id, "l in {1,2,3}, " + win);
    for (int l = 1; l <= 3; ++l) {
      Series want(2, Half{});
      if (g == 0) {
        want = mono(2, Scalar(1), {l, 0}) * euler_factor(2, 0, 1, q(2), p4, 1, n) *
               euler_factor(2, 0, 1, q(2 + 2 * l), p4, -1, n);
      } else if (g == 1) {
        want = mono(2, Scalar(1), {-l, 0}) * euler_factor(2, 0, 1, q(4 + l), p4, 1, n) *
               euler_factor(2, 0, 1, q(4 - l), p4, -1, n);
      } else if (g == 2) {
        want = mono(2, q(-l), {-l, 0}) * euler_factor(2, 0, 1, q(l), p4, 1, n) *
               euler_factor(2, 0, 1, q(-l), p4, -1, n);
      } else {
        want = mono(2, q(l), {l, 0}) * euler_factor(2, 0, 1, q(2 - 2 * l), p4, 1, n) *
               euler_factor(2, 0, 1, q(2), p4, -1, n);
      }
      const VertexOpSpec a = gen[g].phi_a ? phi0(l) : psi_lowest(l);
      const VertexOpSpec b = gen[g].phi_b ? phi0(l) : psi_lowest(l);
      const Series got = contraction(a, b, order);
      check_series(e, got, want, lstr(l));
      if (l == 2) {
        // the closed level 2 forms
        Series closed(2, Half{});
        if (g == 0) closed = mono(2, Scalar(1), {2, 0}) * linear_factor(2, 0, 1, q(2), n);
        if (g == 1) closed = mono(2, Scalar(1), {-2, 0}) * geometric_factor(2, 0, 1, q(2), n);
        if (g == 2) closed = mono(2, q(-2), {-2, 0}) * geometric_factor(2, 0, 1, q(-2), n);
        if (g == 3) closed = mono(2, q(2), {2, 0}) * linear_factor(2, 0, 1, q(-2), n);
        check_series(e, got, closed, "l=2 closed form");
      }
    }
  }

  r.append(omega_suite(order));

  // level 2 currents
  const VertexOpSpec xp = x_current(1, 2), xm = x_current(-1, 2), yp = y_current(1), ym = y_current(-1);
  std::vector<Pair> pairs = {
      {"X+(z) Y+(w) = 1/(1 - w/q^2 z) :X+(z) Y+(w):", xp, yp, geometric_factor(2, 0, 1, q(-2), n)},
      {"Y+(z) X+(w) = -(w/z)/(1 - w/q^2 z) :Y+(z) X+(w):", yp, xp,
       mono(2, Scalar(-1), {-2, 2}) * geometric_factor(2, 0, 1, q(-2), n)},
      {"X-(z) Y-(w) = 1/(1 - q^2 w/z) :X-(z) Y-(w):", xm, ym, geometric_factor(2, 0, 1, q(2), n)},
      {"Y-(z) X-(w) = -(w/z)/(1 - q^2 w/z) :Y-(z) X-(w):", ym, xm,
       mono(2, Scalar(-1), {-2, 2}) * geometric_factor(2, 0, 1, q(2), n)},
      {"Y+(z) Y+(w) = (z - q^-4 w)(z - w) :Y+(z) Y+(w):", yp, yp,
       mono(2, Scalar(1), {4, 0}) * linear_factor(2, 0, 1, q(-4), n) * linear_factor(2, 0, 1, Scalar(1), n)},
      {"Y-(z) Y-(w) = (z - w)(z - q^4 w) :Y-(z) Y-(w):", ym, ym,
       mono(2, Scalar(1), {4, 0}) * linear_factor(2, 0, 1, Scalar(1), n) * linear_factor(2, 0, 1, q(4), n)},
      {"Y+(z) Y-(w) = z^-2 /((1 - q^2 w/z)(1 - w/q^2 z)) :Y+(z) Y-(w):", yp, ym,
       mono(2, Scalar(1), {-4, 0}) * geometric_factor(2, 0, 1, q(2), n) * geometric_factor(2, 0, 1, q(-2), n)},
      {"Y-(z) Y+(w) = z^-2 /((1 - q^2 w/z)(1 - w/q^2 z)) :Y-(z) Y+(w):", ym, yp,
       mono(2, Scalar(1), {-4, 0}) * geometric_factor(2, 0, 1, q(2), n) * geometric_factor(2, 0, 1, q(-2), n)},
  };
  for (const auto& p : pairs) {
    auto& e = r.add(p.id, win);
    check_series(e, contraction(p.a, p.b, order), p.want, "");
  }

  auto& ea = r.add("[a(k), Y+-(z)] = -+([2k]/k) q^{-+|k|} z^k Y+-(z)", "0 < |k| <= " + std::to_string(order));
  auto& eb = r.add("[b(k), Y+-(z)] = -+((q^{2k} - 1 + q^{-2k})/|k|) q^{-+|k|} z^k Y+-(z)",
                   "0 < |k| <= " + std::to_string(order));
  const std::string aname = a_oscillators(2).name;
  for (int s : {1, -1}) {
    const VertexOpSpec& y = s > 0 ? yp : ym;
    for (int k = -order; k <= order; ++k) {
      if (k == 0) continue;
      const int ak = k < 0 ? -k : k;
      const std::string inst = std::string(s > 0 ? "Y+" : "Y-") + " k=" + std::to_string(k);
      Scalar wa = Scalar(-s) * qint(2 * k) / Scalar(k) * q(-s * ak);
      Scalar ga = bracket_coefficient(y, aname, k);
      ea.check(ga == wa, inst, "", (ga - wa).str());
      Scalar wb = Scalar(-s) * (q(2 * k) - Scalar(1) + q(-2 * k)) / Scalar(ak) * q(-s * ak);
      Scalar gb = bracket_coefficient(y, "b", k);
      eb.check(gb == wb, inst, "", (gb - wb).str());
    }
  }

  // three currents: variables in the order of the product
  auto& e20 = r.add("X+-(w) Y+-(z1) Y+-(z2) = prod 1/(1 - q^{-+2} z_i/w) (z1 - q^{-+4} z2)(z1 - z2) :...:", win);
  auto& e21 = r.add(
      "Y+-(z1) X+-(w) Y+-(z2) = -(w/z1) 1/(1 - q^{-+2} w/z1) 1/(1 - q^{-+2} z2/w) (z1 - q^{-+4} z2)(z1 - z2) :...:",
      win);
  auto& e22 = r.add(
      "Y+-(z1) Y+-(z2) X+-(w) = (w^2/z1 z2) prod 1/(1 - q^{-+2} w/z_i) (z1 - q^{-+4} z2)(z1 - z2) :...:", win);
  e20.note = "the Y Y factor is taken as in the two-current Y+ Y+ and Y- Y- identities";
  for (int s : {1, -1}) {
    const VertexOpSpec& x = s > 0 ? xp : xm;
    const VertexOpSpec& y = s > 0 ? yp : ym;
    const std::string inst = s > 0 ? "+" : "-";
    const Scalar c2 = q(-2 * s), c4 = q(-4 * s);
    // (w, z1, z2)
    Series w20 = geometric_factor(3, 0, 1, c2, n) * geometric_factor(3, 0, 2, c2, n) *
                 mono(3, Scalar(1), {0, 4, 0}) * linear_factor(3, 1, 2, c4, n) * linear_factor(3, 1, 2, Scalar(1), n);
    check_series(e20, contraction_multi({x, y, y}, order), w20, inst);
    // (z1, w, z2)
    Series w21 = mono(3, Scalar(-1), {-2, 2, 0}) * geometric_factor(3, 0, 1, c2, n) *
                 geometric_factor(3, 1, 2, c2, n) * mono(3, Scalar(1), {4, 0, 0}) * linear_factor(3, 0, 2, c4, n) *
                 linear_factor(3, 0, 2, Scalar(1), n);
    check_series(e21, contraction_multi({y, x, y}, order), w21, inst);
    // (z1, z2, w)
    Series w22 = mono(3, Scalar(1), {-2, -2, 4}) * geometric_factor(3, 0, 2, c2, n) *
                 geometric_factor(3, 1, 2, c2, n) * mono(3, Scalar(1), {4, 0, 0}) * linear_factor(3, 0, 1, c4, n) *
                 linear_factor(3, 0, 1, Scalar(1), n);
    check_series(e22, contraction_multi({y, y, x}, order), w22, inst);
  }
  return r;
}

}  // namespace qaffine::fock

#include "qaffine/sl2mod/suites.hpp"

#include <chrono>

#include "qaffine/charoracle/freudenthal.hpp"
#include "qaffine/linalg/elimination.hpp"
#include "qaffine/qfield/qnumbers.hpp"

namespace qaffine::sl2 {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  RelationEntry& e;
  Clock::time_point t0 = Clock::now();
  explicit Timer(RelationEntry& x) : e(x) {}
  ~Timer() { e.seconds += std::chrono::duration<double>(Clock::now() - t0).count(); }
};

std::string win(int k) { return "|k|<=" + std::to_string(k); }
std::string modes2(const char* a, int k, const char* b, int l) {
  return std::string(a) + "=" + std::to_string(k) + "," + b + "=" + std::to_string(l);
}

const int kCartan[2][2] = {{2, -2}, {-2, 2}};

LinearOp pow_op(const LinearOp& a, int n, const LinearOp& id) {
  LinearOp r = id;
  for (int i = 0; i < n; ++i) r = a * r;
  return r;
}

// sum_k (-1)^k [3 choose k] x_i^{3-k} x_j x_i^k
LinearOp serre(const LinearOp& xi, const LinearOp& xj, const LinearOp& id) {
  const Scalar b3 = qint(3);
  return lincomb({{Scalar(1), product({xi, xi, xi, xj})},
                  {-b3, product({xi, xi, xj, xi})},
                  {b3, product({xi, xj, xi, xi})},
                  {Scalar(-1), product({xj, xi, xi, xi})}});
}

}  // namespace

RelationReport module_suite(const Family& fam, Weight w) {
  RelationReport rep;
  rep.suite = "sl2-module";
  rep.config = {{"lambda", w.str()}, {"depth", fam.depth()}};
  const Chevalley& c = fam.chev(w);
  const Module& m = c.module();
  const auto blocks = m.blocks();
  {
    auto& e = rep.add("weight multiplicities equal the Freudenthal oracle", "depth<=" + std::to_string(fam.depth()));
    Timer t(e);
    auto table = chars::freudenthal(chars::RootSystem::a1(), {w.m0, w.m1}, fam.depth());
    std::map<chars::RootVec, int64_t> built;
    for (const auto& k : blocks) built[{k[0], k[1], 0}] = static_cast<int64_t>(*m.dim(k));
    chars::Table mine = table;
    mine.mult = built;
    auto d = chars::compare(mine, table);
    e.check(d.equal, m.name(), "", d.str());
    e.states_checked = 0;
    for (const auto& k : blocks) e.states_checked += *m.dim(k);
  }
  {
    auto& e = rep.add("[e_i, f_j] = delta_ij (t_i - t_i^-1)/(q - q^-1)", "i,j in {0,1}");
    Timer t(e);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        LinearOp op = qcommutator(c.e(i), c.f(j));
        if (i == j) op = op - qdiff().inverse() * (c.t(i) - c.t(i, -1));
        e.check_zero(op, blocks, modes2("i", i, "j", j));
      }
    }
  }
  {
    auto& e = rep.add("t_i e_j t_i^-1 = q^a_ij e_j, t_i f_j t_i^-1 = q^-a_ij f_j", "i,j in {0,1}");
    Timer t(e);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        e.check_zero(c.t(i) * c.e(j) - Scalar::q_pow(kCartan[i][j]) * (c.e(j) * c.t(i)), blocks, modes2("i", i, "j", j));
        e.check_zero(c.t(i) * c.f(j) - Scalar::q_pow(-kCartan[i][j]) * (c.f(j) * c.t(i)), blocks, modes2("i", i, "j", j));
      }
    }
  }
  {
    auto& e = rep.add("t_0 t_1 = q^level", "");
    Timer t(e);
    e.check_zero(c.t(0) * c.t(1) - c.gamma() * c.id(), blocks, "");
  }
  {
    auto& e = rep.add("q-Serre relations for e and f", "i != j");
    Timer t(e);
    for (int i = 0; i < 2; ++i) {
      e.check_zero(serre(c.e(i), c.e(1 - i), c.id()), blocks, "e,i=" + std::to_string(i));
      e.check_zero(serre(c.f(i), c.f(1 - i), c.id()), blocks, "f,i=" + std::to_string(i));
    }
  }
  {
    auto& e = rep.add("f_i^(h_i+1) kills the kernel of e_i", "i in {0,1}");
    Timer t(e);
    for (int i = 0; i < 2; ++i) {
      for (const auto& k : blocks) {
        const int h = i == 0 ? m.h0(k) : m.h1(k);
        if (h < 0) continue;
        auto eb = c.e(i)(k);
        std::vector<Vec> ker;
        if (eb->zero) {
          for (size_t j = 0; j < *m.dim(k); ++j) {
            Vec v(*m.dim(k));
            v[j] = 1;
            ker.push_back(v);
          }
        } else {
          ker = nullspace(eb->m);
        }
        LinearOp fp = pow_op(c.f(i), h + 1, c.id());
        auto r = fp(k);
        if (!r) {
          ++e.blocks_skipped;
          continue;
        }
        for (const auto& v : ker) {
          bool zero = r->zero;
          if (!zero) {
            Vec y = r->m.apply(v);
            zero = true;
            for (const auto& s : y) zero = zero && s.is_zero();
          }
          e.check(zero, m.state_label(k, 0), "i=" + std::to_string(i), "f_i^(h+1) v != 0");
        }
      }
    }
  }
  return rep;
}

RelationReport drinfeld_suite(const Family& fam, Weight w, int window) {
  RelationReport rep;
  rep.suite = "sl2-drinfeld";
  rep.config = {{"lambda", w.str()}, {"depth", fam.depth()}, {"window", window}};
  const DrinfeldModes& d = fam.modes(w);
  const Chevalley& c = d.chevalley();
  const auto blocks = c.module().blocks();
  const int K = window;
  const int level = c.level();
  {
    auto& e = rep.add("[a(k), a(l)] = delta_{k+l,0} [2k][level k]/k", win(K));
    Timer t(e);
    for (int k = -K; k <= K; ++k) {
      for (int l = k + 1; l <= K; ++l) {
        if (k == 0 || l == 0) continue;
        LinearOp op = qcommutator(d.a(k), d.a(l));
        if (k + l == 0) op = op - (qint(2 * k) * qint(level * k) / Scalar(k)) * c.id();
        e.check_zero(op, blocks, modes2("k", k, "l", l));
      }
    }
  }
  {
    auto& e = rep.add("K a(k) K^-1 = a(k)", win(K));
    Timer t(e);
    for (int k = -K; k <= K; ++k) {
      if (k != 0) e.check_zero(qcommutator(d.K(), d.a(k)), blocks, "k=" + std::to_string(k));
    }
  }
  {
    auto& e = rep.add("K x+-(k) K^-1 = q^+-2 x+-(k)", win(K));
    Timer t(e);
    for (int sgn : {1, -1}) {
      for (int k = -K; k <= K; ++k) {
        e.check_zero(qcommutator(d.K(), d.x(sgn, k), Scalar::q_pow(2 * sgn)), blocks,
                     std::string(sgn > 0 ? "+" : "-") + ",k=" + std::to_string(k));
      }
    }
  }
  {
    auto& e = rep.add("q^d x+-(k) q^-d = q^k x+-(k), q^d a(k) q^-d = q^k a(k)", win(K));
    Timer t(e);
    for (int k = -K; k <= K; ++k) {
      for (int sgn : {1, -1}) {
        e.check_zero(qcommutator(c.qd(), d.x(sgn, k), Scalar::q_pow(k)), blocks,
                     std::string(sgn > 0 ? "x+" : "x-") + ",k=" + std::to_string(k));
      }
      if (k != 0) e.check_zero(qcommutator(c.qd(), d.a(k), Scalar::q_pow(k)), blocks, "a,k=" + std::to_string(k));
    }
  }
  {
    auto& e = rep.add("[a(k), x+-(m)] = +-[2k]/k gamma^(-+|k|/2) x+-(m+k)", win(K));
    Timer t(e);
    for (int sgn : {1, -1}) {
      for (int k = -K; k <= K; ++k) {
        if (k == 0) continue;
        for (int m = -K; m <= K; ++m) {
          if (m + k < -K || m + k > K) continue;
          const int ak = k > 0 ? k : -k;
          Scalar coef = Scalar(sgn) * qint(2 * k) / Scalar(k) * c.gamma_half().pow(-sgn * ak);
          e.check_zero(qcommutator(d.a(k), d.x(sgn, m)) - coef * d.x(sgn, m + k), blocks,
                       std::string(sgn > 0 ? "+" : "-") + "," + modes2("k", k, "m", m));
        }
      }
    }
  }
  {
    auto& e = rep.add("(z - q^+-2 w) X+-(z) X+-(w) + (w - q^+-2 z) X+-(w) X+-(z) = 0", win(K));
    Timer t(e);
    for (int sgn : {1, -1}) {
      const Scalar v = Scalar::q_pow(2 * sgn);
      for (int m = -K; m < K; ++m) {
        for (int n = m; n < K; ++n) {
          LinearOp op = lincomb({{Scalar(1), d.x(sgn, m + 1) * d.x(sgn, n)},
                                 {-v, d.x(sgn, m) * d.x(sgn, n + 1)},
                                 {Scalar(1), d.x(sgn, n + 1) * d.x(sgn, m)},
                                 {-v, d.x(sgn, n) * d.x(sgn, m + 1)}});
          e.check_zero(op, blocks, std::string(sgn > 0 ? "+" : "-") + "," + modes2("m", m, "n", n));
        }
      }
    }
  }
  {
    auto& e = rep.add("[x+(k), x-(l)] = (gamma^((k-l)/2) psi(k+l) - gamma^((l-k)/2) phi(k+l))/(q - q^-1)",
                      win(K) + ",|k+l|<=" + std::to_string(K));
    Timer t(e);
    for (int k = -K; k <= K; ++k) {
      for (int l = -K; l <= K; ++l) {
        const int s = k + l;
        if (s < -K || s > K) continue;
        std::vector<std::pair<Scalar, LinearOp>> rhs;
        if (s >= 0) rhs.push_back({c.gamma_half().pow(k - l) / qdiff(), d.psi(s)});
        if (s <= 0) rhs.push_back({-c.gamma_half().pow(l - k) / qdiff(), d.phi(s)});
        e.check_zero(qcommutator(d.xp(k), d.xm(l)) - lincomb(rhs), blocks, modes2("k", k, "l", l));
      }
    }
    e.note = "a(k) for |k|>=2 is extracted from the l=0 and k=0 instances; the remaining instances are independent";
  }
  return rep;
}

RelationReport reflection_suite(const Family& fam, Weight w) {
  RelationReport rep;
  rep.suite = "s-reflection";
  rep.config = {{"lambda", w.str()}, {"depth", fam.depth()}};
  const Chevalley& c = fam.chev(w);
  const auto blocks = c.module().blocks();
  const Scalar q = Scalar::q_pow(1), two = qint(2);
  struct Rel {
    std::string id;
    std::function<std::pair<LinearOp, LinearOp>(int, int)> sides;  // S X = Y S
  };
  std::vector<Rel> rels = {
      {"S_i e_i S_i^-1 = -f_i t_i", [&](int i, int) { return std::make_pair(c.e(i), Scalar(-1) * (c.f(i) * c.t(i))); }},
      {"S_i f_i S_i^-1 = -t_i^-1 e_i",
       [&](int i, int) { return std::make_pair(c.f(i), Scalar(-1) * (c.t(i, -1) * c.e(i))); }},
      {"S_i t_i S_i^-1 = t_i^-1", [&](int i, int) { return std::make_pair(c.t(i), c.t(i, -1)); }},
      {"S_i e_j S_i^-1 = (q^-2 e_j e_i^2 - q^-1 [2] e_i e_j e_i + e_i^2 e_j)/[2]",
       [&](int i, int j) {
         return std::make_pair(c.e(j), lincomb({{q.pow(-2) / two, product({c.e(j), c.e(i), c.e(i)})},
                                                {-q.inverse(), product({c.e(i), c.e(j), c.e(i)})},
                                                {two.inverse(), product({c.e(i), c.e(i), c.e(j)})}}));
       }},
      {"S_i f_j S_i^-1 = (q^2 f_i^2 f_j - q [2] f_i f_j f_i + f_j f_i^2)/[2]",
       [&](int i, int j) {
         return std::make_pair(c.f(j), lincomb({{q.pow(2) / two, product({c.f(i), c.f(i), c.f(j)})},
                                                {-q, product({c.f(i), c.f(j), c.f(i)})},
                                                {two.inverse(), product({c.f(j), c.f(i), c.f(i)})}}));
       }},
      {"S_i t_j S_i^-1 = t_j t_i^2", [&](int i, int j) { return std::make_pair(c.t(j), product({c.t(j), c.t(i), c.t(i)})); }},
  };
  for (const auto& r : rels) {
    auto& e = rep.add(r.id, "i in {0,1}, j = 1-i");
    Timer t(e);
    for (int i = 0; i < 2; ++i) {
      auto [x, y] = r.sides(i, 1 - i);
      LinearOp S = fam.S(w, i);
      e.check_zero(S * x - y * S, blocks, "i=" + std::to_string(i));
    }
  }
  {
    auto& e = rep.add("S_i S_i^-1 = S_i^-1 S_i = 1", "i in {0,1}");
    Timer t(e);
    for (int i = 0; i < 2; ++i) {
      e.check_zero(fam.S(w, i) * fam.S_inverse(w, i) - c.id(), blocks, "i=" + std::to_string(i));
      e.check_zero(fam.S_inverse(w, i) * fam.S(w, i) - c.id(), blocks, "i=" + std::to_string(i));
    }
  }
  return rep;
}

RelationReport dhat_suite(const Family& fam, Weight w, int window) {
  RelationReport rep;
  rep.suite = "dhat";
  rep.config = {{"lambda", w.str()}, {"depth", fam.depth()}, {"window", window}};
  const Weight to = w.flipped();
  const DrinfeldModes& d = fam.modes(w);
  const DrinfeldModes& d2 = fam.modes(to);
  const Chevalley& c = d.chevalley();
  const auto blocks = c.module().blocks();
  const LinearOp D = fam.dhat(w);
  const int K = window;
  {
    auto& e = rep.add("Dhat a(n) Dhat^-1 = a(n)", win(K));
    Timer t(e);
    for (int n = -K; n <= K; ++n) {
      if (n != 0) e.check_zero(D * d.a(n) - d2.a(n) * D, blocks, "n=" + std::to_string(n));
    }
  }
  {
    auto& e = rep.add("Dhat K Dhat^-1 = gamma^-1 K", "");
    Timer t(e);
    e.check_zero(D * d.K() - c.gamma().inverse() * (d2.K() * D), blocks, "");
  }
  {
    auto& e = rep.add("Dhat x+-(k) Dhat^-1 = -x+-(k -+ 1)", win(K));
    Timer t(e);
    for (int sgn : {1, -1}) {
      for (int k = -K; k <= K; ++k) {
        const int k2 = k - sgn;
        if (k2 < -K || k2 > K) continue;
        e.check_zero(D * d.x(sgn, k) + d2.x(sgn, k2) * D, blocks,
                     std::string(sgn > 0 ? "+" : "-") + ",k=" + std::to_string(k));
      }
    }
  }
  {
    auto& e = rep.add("sigma S_1 t_1^-1 = S_0 t_0^-1 sigma", "");
    Timer t(e);
    e.check_zero(D - fam.dhat_literal(w), blocks, "");
  }
  {
    auto& e = rep.add("Dhat Dhat^-1 = Dhat^-1 Dhat = 1", "");
    Timer t(e);
    e.check_zero(fam.dhat_inverse(w) * D - c.id(), blocks, "");
    e.check_zero(D * fam.dhat_inverse(w) - fam.chev(to).id(), fam.module(to)->blocks(), "");
  }
  return rep;
}

RelationReport evaluation_suite(int level) {
  RelationReport rep;
  rep.suite = "evaluation-module";
  rep.config = {{"level", level}};
  EvaluationModule V(level);
  using E = EvaluationModule;
  auto check = [](RelationEntry& e, const ZOp& op, const std::string& modes) {
    e.check(op.m.is_zero(), "V_z", modes, op.m.is_zero() ? "" : "nonzero z^" + std::to_string(op.zpow) + " part");
    e.states_checked += op.m.cols() - 1;
  };
  {
    auto& e = rep.add("[e_i, f_j] = delta_ij (t_i - t_i^-1)/(q - q^-1)", "i,j in {0,1}");
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        ZOp op = E::add(E::mul(V.e(i), V.f(j)), E::mul(V.f(j), V.e(i)), Scalar(-1));
        if (i == j) op = E::add(op, E::add(V.t(i), V.t(i, -1), Scalar(-1)), -qdiff().inverse());
        check(e, op, modes2("i", i, "j", j));
      }
    }
  }
  {
    auto& e = rep.add("t_i e_j t_i^-1 = q^a_ij e_j, t_i f_j t_i^-1 = q^-a_ij f_j", "i,j in {0,1}");
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        check(e, E::add(E::mul(V.t(i), V.e(j)), E::mul(V.e(j), V.t(i)), -Scalar::q_pow(kCartan[i][j])),
              modes2("i", i, "j", j));
        check(e, E::add(E::mul(V.t(i), V.f(j)), E::mul(V.f(j), V.t(i)), -Scalar::q_pow(-kCartan[i][j])),
              modes2("i", i, "j", j));
      }
    }
  }
  {
    auto& e = rep.add("t_0 t_1 = 1", "");
    ZOp one{0, Matrix::identity(level + 1)};
    check(e, E::add(E::mul(V.t(0), V.t(1)), one, Scalar(-1)), "");
  }
  {
    auto& e = rep.add("q-Serre relations for e and f", "i != j");
    const Scalar b3 = qint(3);
    for (int i = 0; i < 2; ++i) {
      for (bool raise : {true, false}) {
        ZOp xi = raise ? V.e(i) : V.f(i), xj = raise ? V.e(1 - i) : V.f(1 - i);
        ZOp s = E::mul(E::mul(E::mul(xi, xi), xi), xj);
        s = E::add(s, E::mul(E::mul(E::mul(xi, xi), xj), xi), -b3);
        s = E::add(s, E::mul(E::mul(E::mul(xi, xj), xi), xi), b3);
        s = E::add(s, E::mul(E::mul(E::mul(xj, xi), xi), xi), Scalar(-1));
        check(e, s, std::string(raise ? "e" : "f") + ",i=" + std::to_string(i));
      }
    }
  }
  return rep;
}

}  // namespace qaffine::sl2

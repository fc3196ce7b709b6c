#include "qaffine/spfour/suites.hpp"

#include <algorithm>
#include <chrono>

#include "qaffine/qfield/qnumbers.hpp"

namespace qaffine::sp4 {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  RelationEntry& e;
  Clock::time_point t0 = Clock::now();
  explicit Timer(RelationEntry& x) : e(x) {}
  ~Timer() { e.seconds += std::chrono::duration<double>(Clock::now() - t0).count(); }
};

std::string modes(std::initializer_list<std::pair<const char*, int>> xs) {
  std::string s;
  for (const auto& [n, v] : xs) {
    if (!s.empty()) s += ",";
    s += std::string(n) + "=" + std::to_string(v);
  }
  return s;
}

std::string sgn(int s) { return s > 0 ? "+" : "-"; }

std::string win(int K) { return "|k|<=" + std::to_string(K); }

// c with got = c * want, if any
std::optional<Scalar> proportional(const BlockVector& got, const BlockVector& want) {
  std::optional<Scalar> c;
  for (const auto& [k, w] : want) {
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i].is_zero()) continue;
      auto it = got.find(k);
      Scalar g = it == got.end() ? Scalar() : it->second[i];
      c = g / w[i];
      break;
    }
    if (c) break;
  }
  if (!c) return std::nullopt;
  for (const auto& [k, g] : got) {
    auto it = want.find(k);
    for (size_t i = 0; i < g.size(); ++i) {
      Scalar w = it == want.end() ? Scalar() : it->second[i];
      if (!(g[i] - *c * w).is_zero()) return std::nullopt;
    }
  }
  for (const auto& [k, w] : want) {
    if (got.count(k)) continue;
    for (const auto& v : w) {
      if (!(*c * v).is_zero()) return std::nullopt;
    }
  }
  return c;
}

bool same(const BlockVector& a, const BlockVector& b) {
  BlockVector d = a;
  for (const auto& [k, v] : b) {
    auto& t = d[k];
    if (t.empty()) t.assign(v.size(), Scalar());
    for (size_t i = 0; i < v.size(); ++i) t[i] -= v[i];
  }
  return is_zero(d);
}

size_t partitions(int n) {
  if (n < 0) return 0;
  std::vector<size_t> p(n + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int m = k; m <= n; ++m) p[m] += p[m - k];
  }
  return p[n];
}

}  // namespace

RelationReport relations_suite(const Sp4Action& A, int window) {
  const BigSpace& S = A.space();
  const int K = window;
  const auto blocks = S.blocks();
  const Scalar gamma = Scalar::q_pow(2);
  RelationReport rep;
  rep.suite = "sp4-relations";
  rep.config = {{"space", S.name()}, {"j", S.j()}, {"depth", S.depth()}, {"window", K}};

  {
    auto& en = rep.add("[a_i(k), a_j(l)] = delta_{k+l,0} [a_ij k]_i/k (gamma^k - gamma^-k)/(q_j - q_j^-1)",
                       "1<=|k|,|l|<=" + std::to_string(K));
    Timer t(en);
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j) {
        for (int k = -K; k <= K; ++k) {
          for (int l = -K; l <= K; ++l) {
            if (k == 0 || l == 0) continue;
            LinearOp br = qcommutator(A.a(i, k), A.a(j, l));
            if (k + l == 0) {
              Scalar c = Sp4Action::qint_i(i, Sp4Action::cartan(i, j) * k) / Scalar(k) *
                         (gamma.pow(k) - gamma.pow(-k)) / (Sp4Action::qi(j) - Sp4Action::qi(j).inverse());
              br = br - c * A.id();
            }
            en.check_zero(br, blocks, modes({{"i", i}, {"j", j}, {"k", k}, {"l", l}}));
          }
        }
      }
    }
  }
  {
    auto& en = rep.add("K_i K_j = K_j K_i, K_i K_i^-1 = 1, [q^d, K_i] = 0", "");
    Timer t(en);
    en.check_zero(A.K(1) * A.K(2) - A.K(2) * A.K(1), blocks, "");
    for (int i = 1; i <= 2; ++i) {
      en.check_zero(A.K(i) * A.K(i, -1) - A.id(), blocks, modes({{"i", i}}));
      en.check_zero(A.qd() * A.K(i) - A.K(i) * A.qd(), blocks, modes({{"i", i}}));
    }
  }
  {
    auto& en = rep.add("K_j a_i(k) K_j^-1 = a_i(k), q^d a_i(k) q^-d = q^k a_i(k)", "1<=" + win(K));
    Timer t(en);
    for (int i = 1; i <= 2; ++i) {
      for (int k = -K; k <= K; ++k) {
        if (k == 0) continue;
        for (int j = 1; j <= 2; ++j) {
          en.check_zero(A.K(j) * A.a(i, k) - A.a(i, k) * A.K(j), blocks, modes({{"i", i}, {"j", j}, {"k", k}}));
        }
        en.check_zero(A.qd() * A.a(i, k) - Scalar::q_pow(k) * (A.a(i, k) * A.qd()), blocks,
                      modes({{"i", i}, {"k", k}}));
      }
    }
  }
  {
    auto& en = rep.add("K_j X_i+-(z) K_j^-1 = q_i^{+-a_ij} X_i+-(z), q^d x_i+-(k) q^-d = q^k x_i+-(k)", win(K));
    Timer t(en);
    for (int i = 1; i <= 2; ++i) {
      for (int s : {1, -1}) {
        for (int k = -K; k <= K; ++k) {
          LinearOp x = A.x(i, s, k);
          for (int j = 1; j <= 2; ++j) {
            Scalar c = Sp4Action::qi(i).pow(s * Sp4Action::cartan(i, j));
            en.check_zero(A.K(j) * x - c * (x * A.K(j)), blocks,
                          modes({{"i", i}, {"j", j}, {"sign", s}, {"k", k}}));
          }
          en.check_zero(A.qd() * x - Scalar::q_pow(k) * (x * A.qd()), blocks, modes({{"i", i}, {"sign", s}, {"k", k}}));
        }
      }
    }
  }
  {
    auto& en = rep.add("[a_i(k), X_j+-(z)] = +-[a_ij k]_i/k gamma^{-+|k|/2} z^k X_j+-(z)",
                       "1<=|k|, |l|, |l+k|<=" + std::to_string(K));
    Timer t(en);
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j) {
        for (int s : {1, -1}) {
          for (int k = -K; k <= K; ++k) {
            if (k == 0) continue;
            const int ak = k > 0 ? k : -k;
            Scalar c = Scalar(s) * Sp4Action::qint_i(i, Sp4Action::cartan(i, j) * k) / Scalar(k) *
                       Scalar::q_pow(-s * ak);
            for (int l = -K; l <= K; ++l) {
              if (l + k < -K || l + k > K) continue;
              en.check_zero(qcommutator(A.a(i, k), A.x(j, s, l)) - c * A.x(j, s, l + k), blocks,
                            modes({{"i", i}, {"j", j}, {"sign", s}, {"k", k}, {"l", l}}));
            }
          }
        }
      }
    }
  }
  {
    auto& en = rep.add(
        "x_i(k+1) x_j(l) - q_i^{+-a_ij} x_i(k) x_j(l+1) = q_i^{+-a_ij} x_j(l) x_i(k+1) - x_j(l+1) x_i(k)",
        "k, k+1, l, l+1 in [-" + std::to_string(K) + "," + std::to_string(K) + "]");
    Timer t(en);
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j) {
        for (int s : {1, -1}) {
          Scalar c = Sp4Action::qi(i).pow(s * Sp4Action::cartan(i, j));
          for (int k = -K; k < K; ++k) {
            for (int l = -K; l < K; ++l) {
              LinearOp op = lincomb({{Scalar(1), A.x(i, s, k + 1) * A.x(j, s, l)},
                                     {-c, A.x(i, s, k) * A.x(j, s, l + 1)},
                                     {Scalar(1), A.x(j, s, l + 1) * A.x(i, s, k)},
                                     {-c, A.x(j, s, l) * A.x(i, s, k + 1)}});
              en.check_zero(op, blocks, modes({{"i", i}, {"j", j}, {"sign", s}, {"k", k}, {"l", l}}));
            }
          }
        }
      }
    }
  }
  {
    auto& en = rep.add(
        "[x_i+(k), x_j-(l)] = delta_ij/(q_i - q_i^-1) (gamma^{(k-l)/2} psi_i(k+l) - gamma^{(l-k)/2} phi_i(k+l))", win(K));
    Timer t(en);
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j) {
        for (int k = -K; k <= K; ++k) {
          for (int l = -K; l <= K; ++l) {
            LinearOp op = qcommutator(A.x(i, 1, k), A.x(j, -1, l));
            if (i == j) {
              Scalar c = (Sp4Action::qi(i) - Sp4Action::qi(i).inverse()).inverse();
              op = op - c * (Scalar::q_pow(k - l) * A.psi(i, k + l) - Scalar::q_pow(l - k) * A.phi(i, k + l));
            }
            en.check_zero(op, blocks, modes({{"i", i}, {"j", j}, {"k", k}, {"l", l}}));
          }
        }
      }
    }
  }
  return rep;
}

RelationReport serre_suite(const Sp4Action& A, const std::vector<int>& qw, const std::vector<int>& cw) {
  const BigSpace& S = A.space();
  const auto blocks = S.blocks();
  RelationReport rep;
  rep.suite = "sp4-serre";
  auto list = [](const std::vector<int>& w) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (int v : w) a.push_back(v);
    return a;
  };
  rep.config = {{"space", S.name()}, {"j", S.j()}, {"depth", S.depth()}, {"quartic", list(qw)}, {"cubic", list(cw)}};
  auto wstr = [](const std::vector<int>& w) {
    std::string s;
    for (int v : w) s += (s.empty() ? "" : ",") + std::to_string(v);
    return "modes in {" + s + "}";
  };

  const Scalar q3 = qint(3);
  const Scalar q22 = Sp4Action::qint_i(2, 2);
  for (int s : {1, -1}) {
    {
      auto& en = rep.add("Sym_{k1,k2,k3} sum_r (-1)^r [3 r]_1 x1" + sgn(s) + "^r x2" + sgn(s) + "(l) x1" + sgn(s) +
                             "^{3-r} = 0",
                         wstr(qw));
      Timer t(en);
      for (size_t a = 0; a < qw.size(); ++a) {
        for (size_t b = a; b < qw.size(); ++b) {
          for (size_t c = b; c < qw.size(); ++c) {
            std::vector<int> ks{qw[a], qw[b], qw[c]};
            for (int l : qw) {
              std::vector<std::pair<Scalar, LinearOp>> terms;
              std::vector<int> p = ks;
              std::sort(p.begin(), p.end());
              do {
                LinearOp x1 = A.x(1, s, p[0]), x2 = A.x(1, s, p[1]), x3 = A.x(1, s, p[2]), y = A.x(2, s, l);
                terms.push_back({Scalar(1), product({y, x1, x2, x3})});
                terms.push_back({-q3, product({x1, y, x2, x3})});
                terms.push_back({q3, product({x1, x2, y, x3})});
                terms.push_back({-Scalar(1), product({x1, x2, x3, y})});
              } while (std::next_permutation(p.begin(), p.end()));
              en.check_zero(lincomb(terms), blocks, modes({{"k1", ks[0]}, {"k2", ks[1]}, {"k3", ks[2]}, {"l", l}}));
            }
          }
        }
      }
    }
    {
      auto& en = rep.add("Sym_{k1,k2} sum_r (-1)^r [2 r]_2 x2" + sgn(s) + "^r x1" + sgn(s) + "(l) x2" + sgn(s) +
                             "^{2-r} = 0",
                         wstr(cw));
      Timer t(en);
      for (size_t a = 0; a < cw.size(); ++a) {
        for (size_t b = a; b < cw.size(); ++b) {
          std::vector<int> ks{cw[a], cw[b]};
          for (int l : cw) {
            std::vector<std::pair<Scalar, LinearOp>> terms;
            std::vector<int> p = ks;
            do {
              LinearOp y1 = A.x(2, s, p[0]), y2 = A.x(2, s, p[1]), x = A.x(1, s, l);
              terms.push_back({Scalar(1), product({x, y1, y2})});
              terms.push_back({-q22, product({y1, x, y2})});
              terms.push_back({Scalar(1), product({y1, y2, x})});
            } while (std::next_permutation(p.begin(), p.end()));
            en.check_zero(lincomb(terms), blocks, modes({{"k1", ks[0]}, {"k2", ks[1]}, {"l", l}}));
          }
        }
      }
    }
  }
  return rep;
}

RelationReport y_ops_suite(const Sp4Action& A, int window) {
  const BigSpace& S = A.space();
  const int K = window;
  const auto blocks = S.blocks();
  RelationReport rep;
  rep.suite = "y-ops";
  rep.config = {{"space", S.name()}, {"j", S.j()}, {"depth", S.depth()}, {"window", K}};
  const std::string w = "1<=|k|, |l|, |l+k|<=" + std::to_string(K);
  auto brackets = [&](RelationEntry& en, const std::function<LinearOp(int)>& osc,
                      const std::function<Scalar(int, int)>& coef) {
    for (int s : {1, -1}) {
      for (int k = -K; k <= K; ++k) {
        if (k == 0) continue;
        for (int l = -K; l <= K; ++l) {
          if (l + k < -K || l + k > K) continue;
          en.check_zero(qcommutator(osc(k), A.y(s, l)) - coef(s, k) * A.y(s, l + k), blocks,
                        modes({{"sign", s}, {"k", k}, {"l", l}}));
        }
      }
    }
  };
  {
    auto& en = rep.add("[a(k), y+-(l)] = -+[2k]/k q^{-+|k|} y+-(l+k)", w);
    Timer t(en);
    brackets(en, [&](int k) { return A.a(1, k); },
             [](int s, int k) { return Scalar(-s) * qint(2 * k) / Scalar(k) * Scalar::q_pow(-s * std::abs(k)); });
  }
  {
    auto& en = rep.add("[b(k), y+-(l)] = -+(q^{2k} - 1 + q^{-2k})/|k| q^{-+|k|} y+-(l+k)", w);
    Timer t(en);
    brackets(en, [&](int k) { return A.b(k); }, [](int s, int k) {
      return Scalar(-s) * (Scalar::q_pow(2 * k) - Scalar(1) + Scalar::q_pow(-2 * k)) / Scalar(std::abs(k)) *
             Scalar::q_pow(-s * std::abs(k));
    });
  }
  {
    auto& en = rep.add("y+-(k) shifts the charge by -+1", win(K));
    Timer t(en);
    for (int s : {1, -1}) {
      for (int k = -K; k <= K; ++k) {
        LinearOp y = A.y(s, k);
        for (const auto& b : blocks) {
          auto r = y(b);
          if (!r || r->zero) continue;
          en.check(BigSpace::charge(r->dst) == BigSpace::charge(b) - Half::whole(s), key_str(b),
                   modes({{"sign", s}, {"k", k}}), "lands in " + key_str(r->dst));
        }
      }
    }
  }
  return rep;
}

RelationReport highest_weight_suite(const Sp4Action& A) {
  const BigSpace& S = A.space();
  const int j = S.j();
  RelationReport rep;
  rep.suite = "highest-weight";
  rep.config = {{"space", S.name()}, {"j", j}, {"depth", S.depth()}};
  const BlockVector w = S.top_vector();
  const std::string label = S.state_label(S.top_key(), 0);
  for (int i = 0; i <= 2; ++i) {
    auto& en = rep.add("e_" + std::to_string(i) + " w = 0", "");
    Timer t(en);
    try {
      en.check(is_zero(act(A.e(i), w)), label, "", "nonzero image");
    } catch (const TruncationOverflow& ex) {
      en.check(false, label, "", std::string("truncation: ") + ex.what());
    }
  }
  {
    auto& en = rep.add("w has weight Lambda_j: h_i w = delta_ij w, K1 w = q^{h1} w, K2 w = q^{2 h2} w, q^d w = w", "");
    Timer t(en);
    auto h = S.h_values(S.top_key());
    for (int i = 0; i <= 2; ++i) {
      en.check(h[i] == (i == j ? 1 : 0), label, modes({{"i", i}}), "h_" + std::to_string(i) + " = " + std::to_string(h[i]));
    }
    auto scaled = [&](const Scalar& c) {
      BlockVector r = w;
      for (auto& [k, v] : r)
        for (auto& x : v) x *= c;
      return r;
    };
    en.check(same(act(A.K(1), w), scaled(Scalar::q_pow(h[1]))), label, "K1", "eigenvalue");
    en.check(same(act(A.K(2), w), scaled(Scalar::q_pow(2 * h[2]))), label, "K2", "eigenvalue");
    en.check(same(act(A.qd(), w), w), label, "q^d", "eigenvalue");
  }
  {
    auto& en = rep.add("e_0, e_1, e_2 are not identically zero", "degree 1 blocks");
    Timer t(en);
    for (int i = 0; i <= 2; ++i) {
      bool nonzero = false;
      LinearOp e = A.e(i);
      for (const auto& b : S.blocks()) {
        if (b[0] != 1) continue;
        auto r = e(b);
        if (r && !r->zero && !r->m.is_zero()) nonzero = true;
      }
      en.check(nonzero, "degree 1", modes({{"i", i}}), "e_" + std::to_string(i) + " vanishes");
    }
  }
  return rep;
}

RelationReport linking_suite(const Sp4Action& A) {
  const BigSpace& S = A.space();
  RelationReport rep;
  rep.suite = "lemma-linking";
  rep.config = {{"space", S.name()}, {"j", S.j()}, {"depth", S.depth()}};
  const Half one = Half::whole(1), half = Half::half(1);

  struct Link {
    std::string id;
    Weight from;
    int dir;  // target charge = source + dir
    std::function<std::vector<LinearOp>(Half)> ops;
  };
  const Weight w20{2, 0}, w02{0, 2}, w11{1, 1};
  // mode indices are written for the charge p of the statement
  std::vector<Link> links{
      {"v_{2L1} (x) v(p+1) ~ y-(-(p+1)) v_{2L0} (x) v(p)", w20, 1,
       [&](Half s) { return std::vector<LinearOp>{A.y(-1, -(s + one).floor())}; }},
      {"v (x) v(p+1/2) ~ x-(1) y-(-(p+1)) v (x) v(p-1/2)", w11, 1,
       [&](Half s) {
         const Half p = s + half;
         return std::vector<LinearOp>{A.x(1, -1, 1), A.y(-1, -(p + one).floor())};
       }},
      {"v_{2L0} (x) v(p+1) ~ x-(1)^2 y-(-(p+2)) v_{2L1} (x) v(p)", w02, 1,
       [&](Half s) {
         return std::vector<LinearOp>{A.x(1, -1, 1), A.x(1, -1, 1), A.y(-1, -(s + Half::whole(2)).floor())};
       }},
      {"v_{2L1} (x) v(p-1) ~ x+(0)^2 y+(p-1) v_{2L0} (x) v(p)", w20, -1,
       [&](Half s) { return std::vector<LinearOp>{A.x(1, 1, 0), A.x(1, 1, 0), A.y(1, (s - one).floor())}; }},
      {"v (x) v(p-1/2) ~ x+(0) y+(p) v (x) v(p+1/2)", w11, -1,
       [&](Half s) {
         const Half p = s - half;
         return std::vector<LinearOp>{A.x(1, 1, 0), A.y(1, p.floor())};
       }},
      {"v_{2L0} (x) v(p-1) ~ y+(p) v_{2L1} (x) v(p)", w02, -1,
       [&](Half s) { return std::vector<LinearOp>{A.y(1, s.floor())}; }},
  };
  for (const auto& L : links) {
    auto& en = rep.add(L.id, "all charges within the truncation");
    Timer t(en);
    std::string note;
    for (Half s : S.charges()) {
      if (!(S.weight_of(s) == L.from)) continue;
      const Half to = s + Half::whole(L.dir);
      if (!S.has_charge(to)) continue;
      BlockVector src, dst, got;
      try {
        src = S.extremal(s);
        dst = S.extremal(to);
        got = act(product(L.ops(s)), src);
      } catch (const TruncationOverflow&) {
        ++en.blocks_skipped;
        continue;
      }
      auto c = proportional(got, dst);
      const bool ok = c && !c->is_zero();
      en.check(ok, "v (x) v(" + s.str() + ")", "", ok ? "" : "image is not a nonzero multiple of the target");
      if (c) note += (note.empty() ? "" : "; ") + std::string("charge ") + s.str() + ": " + c->str();
    }
    en.note = note;
  }
  return rep;
}

chars::Table character(const BigSpace& S) {
  std::vector<int> lam(3, 0);
  lam[S.j()] = 1;
  chars::Table t;
  t.type = chars::Type::C2;
  t.lambda = lam;
  t.depth = S.depth();
  for (const auto& k : S.blocks()) {
    auto d = S.dim(k);
    if (d && *d) t.mult[S.root_coords(k)] += static_cast<int64_t>(*d);
  }
  return t;
}

RelationReport character_suite(const BigSpace& S) {
  const int N = S.depth();
  RelationReport rep;
  rep.suite = "chars";
  rep.config = {{"space", S.name()}, {"j", S.j()}, {"depth", N}};
  std::vector<int> lam(3, 0);
  lam[S.j()] = 1;
  const chars::Table oracle = chars::freudenthal(chars::RootSystem::c2(), lam, N);
  const chars::Table mine = character(S);
  {
    auto& en = rep.add("weight multiplicities of V(j) equal the C2 Freudenthal oracle", "degree<=" + std::to_string(N));
    Timer t(en);
    auto d = chars::compare(mine, oracle);
    en.states_checked += oracle.mult.size();
    en.check(d.equal, "", "", d.str());
  }
  {
    auto& en = rep.add("sum_p ch V(lambda_p) q^{c(p)} / (q)_inf has the C2 degree totals", "degree<=" + std::to_string(N));
    Timer t(en);
    std::map<Weight, chars::Table> a1;
    for (Half p : S.charges()) {
      Weight w = S.weight_of(p);
      if (!a1.count(w)) a1.emplace(w, chars::freudenthal(chars::RootSystem::a1(), {w.m0, w.m1}, N));
    }
    std::string note;
    for (int D = 0; D <= N; ++D) {
      int64_t total = 0;
      for (Half p : S.charges()) {
        const auto& ch = a1.at(S.weight_of(p));
        for (int x = 0; x + S.charge_degree(p) <= D; ++x) {
          total += ch.degree_total(x) * static_cast<int64_t>(partitions(D - x - S.charge_degree(p)));
        }
      }
      note += (D ? " " : "") + std::to_string(total);
      en.check(total == oracle.degree_total(D), "degree " + std::to_string(D), "",
               std::to_string(total) + " vs " + std::to_string(oracle.degree_total(D)));
    }
    en.note = "degree totals " + note;
  }
  return rep;
}

}  // namespace qaffine::sp4

#include "qaffine/charoracle/freudenthal.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qaffine::chars {

RootSystem RootSystem::a1() {
  RootSystem rs;
  rs.type = Type::A1;
  rs.rank = 2;
  rs.a = {{2, -2}, {-2, 2}};
  rs.d = {1, 1};
  rs.delta = {1, 1, 0};
  rs.imaginary_mult = 1;
  rs.finite_roots = {{0, 1, 0}, {0, -1, 0}};
  return rs;
}

RootSystem RootSystem::c2() {
  RootSystem rs;
  rs.type = Type::C2;
  rs.rank = 3;
  rs.a = {{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}};
  rs.d = {2, 1, 2};
  rs.delta = {1, 2, 1};
  rs.imaginary_mult = 2;
  for (RootVec r : std::vector<RootVec>{{0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {0, 2, 1}}) {
    rs.finite_roots.push_back(r);
    rs.finite_roots.push_back({0, -r[1], -r[2]});
  }
  return rs;
}

int RootSystem::form(const RootVec& u, const RootVec& v) const {
  int s = 0;
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) s += u[i] * v[j] * d[i] * a[i][j];
  }
  return s;
}

std::string RootSystem::name() const { return type == Type::A1 ? "A1(1)" : "C2(1)"; }

namespace {

bool below(const RootVec& r, const RootVec& b) {
  for (int i = 0; i < 3; ++i) {
    if (r[i] < 0 || r[i] > b[i]) return false;
  }
  return true;
}

RootVec add(RootVec u, const RootVec& v, int k = 1) {
  for (int i = 0; i < 3; ++i) u[i] += k * v[i];
  return u;
}

}  // namespace

std::vector<PositiveRoot> positive_roots_below(const RootSystem& rs, const RootVec& beta) {
  std::vector<PositiveRoot> out;
  for (int m = 0; m <= beta[0]; ++m) {
    const RootVec md{m * rs.delta[0], m * rs.delta[1], m * rs.delta[2]};
    for (const auto& r : rs.finite_roots) {
      const bool positive_finite = r[1] > 0 || r[2] > 0;
      if (m == 0 && !positive_finite) continue;
      RootVec a = add(md, r);
      if (below(a, beta)) out.push_back({a, 1});
    }
    if (m > 0 && below(md, beta)) out.push_back({md, rs.imaginary_mult});
  }
  return out;
}

int64_t Table::at(const RootVec& beta) const {
  auto it = mult.find(beta);
  return it == mult.end() ? 0 : it->second;
}

int64_t Table::degree_total(int x0) const {
  int64_t n = 0;
  for (const auto& [b, m] : mult) {
    if (b[0] == x0) n += m;
  }
  return n;
}

std::string weight_label(Type type, const std::vector<int>& lambda, const RootVec& beta) {
  RootSystem rs = type == Type::A1 ? RootSystem::a1() : RootSystem::c2();
  std::string s = "(";
  for (int i = 0; i < rs.rank; ++i) {
    int h = lambda[i];
    for (int j = 0; j < rs.rank; ++j) h -= rs.a[i][j] * beta[j];
    s += (i ? "," : "") + std::to_string(h);
  }
  return s + ")";
}

std::string Table::tsv() const {
  std::ostringstream os;
  os << "depth\tx0\tx1\tx2\th\tmult\n";
  for (const auto& [b, m] : mult) {
    os << b[0] << '\t' << b[0] << '\t' << b[1] << '\t' << b[2] << '\t' << weight_label(type, lambda, b) << '\t' << m
       << '\n';
  }
  return os.str();
}

nlohmann::ordered_json Table::to_json() const {
  nlohmann::ordered_json j;
  j["type"] = type == Type::A1 ? "A1(1)" : "C2(1)";
  j["lambda"] = lambda;
  j["depth"] = depth;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& [b, m] : mult) {
    rows.push_back({{"beta", b}, {"h", weight_label(type, lambda, b)}, {"mult", m}});
  }
  j["weights"] = rows;
  return j;
}

Table freudenthal(const RootSystem& rs, const std::vector<int>& lambda, int depth,
                  std::optional<uint64_t> root_order_seed) {
  if (static_cast<int>(lambda.size()) != rs.rank) throw std::invalid_argument("freudenthal: weight has wrong rank");
  for (int v : lambda) {
    if (v < 0) throw std::invalid_argument("freudenthal: weight is not dominant");
  }
  if (depth < 0) throw std::invalid_argument("freudenthal: negative depth");
  Table t;
  t.type = rs.type;
  t.lambda = lambda;
  t.depth = depth;

  // finite-direction box; the outer kMargin layers must come out empty
  constexpr int kMargin = 3;
  int lev = std::accumulate(lambda.begin(), lambda.end(), 0);
  auto bound = [&](int x0, int i) { return (2 * rs.delta[i] + 1) * x0 + lev + 2 * kMargin; };
  std::vector<RootVec> betas;
  for (int x0 = 0; x0 <= depth; ++x0) {
    for (int x1 = 0; x1 <= bound(x0, 1); ++x1) {
      const int top2 = rs.rank == 3 ? bound(x0, 2) : 0;
      for (int x2 = 0; x2 <= top2; ++x2) betas.push_back({x0, x1, x2});
    }
  }
  std::stable_sort(betas.begin(), betas.end(), [](const RootVec& u, const RootVec& v) {
    return u[0] + u[1] + u[2] < v[0] + v[1] + v[2];
  });

  auto lam_form = [&](const RootVec& v, int shift) {
    int s = 0;
    for (int i = 0; i < rs.rank; ++i) s += v[i] * rs.d[i] * (lambda[i] + shift);
    return s;
  };
  std::mt19937_64 rng(root_order_seed.value_or(0));

  for (const RootVec& beta : betas) {
    if (beta == RootVec{0, 0, 0}) {
      t.mult[beta] = 1;
      continue;
    }
    const int64_t coef = 2 * lam_form(beta, 1) - rs.form(beta, beta);
    auto roots = positive_roots_below(rs, beta);
    if (root_order_seed) std::shuffle(roots.begin(), roots.end(), rng);
    int64_t rhs = 0;
    for (const auto& [alpha, am] : roots) {
      const int la = lam_form(alpha, 0), ba = rs.form(beta, alpha), aa = rs.form(alpha, alpha);
      for (int k = 1;; ++k) {
        RootVec b2 = add(beta, alpha, -k);
        if (b2[0] < 0 || b2[1] < 0 || b2[2] < 0) break;
        const int64_t m = t.at(b2);
        if (m) rhs += static_cast<int64_t>(am) * m * (la - ba + k * aa);
      }
    }
    rhs *= 2;
    if (coef == 0) {
      if (rhs != 0) throw std::logic_error("freudenthal: vanishing norm difference with nonzero sum");
      continue;
    }
    if (rhs % coef != 0) throw std::logic_error("freudenthal: non-integral multiplicity");
    const int64_t m = rhs / coef;
    if (m < 0) throw std::logic_error("freudenthal: negative multiplicity");
    if (m == 0) continue;
    if (beta[1] > bound(beta[0], 1) - kMargin || (rs.rank == 3 && beta[2] > bound(beta[0], 2) - kMargin)) {
      throw std::logic_error("freudenthal: weight support reaches the enumeration margin");
    }
    t.mult[beta] = m;
  }
  return t;
}

std::string Diff::str() const {
  std::ostringstream os;
  if (depth_mismatch) os << "compared on common depth range 0.." << common_depth << "\n";
  for (const auto& [b, mm] : witnesses) {
    os << "beta=(" << b[0] << "," << b[1] << "," << b[2] << ") " << mm.first << " != " << mm.second << "\n";
  }
  return os.str();
}

Diff compare(const Table& a, const Table& b) {
  Diff d;
  d.common_depth = std::min(a.depth, b.depth);
  d.depth_mismatch = a.depth != b.depth;
  std::map<RootVec, std::pair<int64_t, int64_t>> all;
  for (const auto& [k, m] : a.mult) {
    if (k[0] <= d.common_depth) all[k].first = m;
  }
  for (const auto& [k, m] : b.mult) {
    if (k[0] <= d.common_depth) all[k].second = m;
  }
  for (const auto& [k, mm] : all) {
    if (mm.first != mm.second) {
      d.equal = false;
      d.witnesses.push_back({k, mm});
      break;
    }
  }
  return d;
}

}  // namespace qaffine::chars

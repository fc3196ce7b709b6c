#include <doctest.h>

#include <filesystem>

#include "qaffine/qfield/qnumbers.hpp"
#include "qaffine/sl2mod/suites.hpp"

using namespace qaffine;
using namespace qaffine::sl2;

namespace {

Scalar q(int e) { return Scalar::q_pow(e); }

const Key kTop{0, 0, 0};

// op applied to the highest weight vector
BlockVector on_top(const LinearOp& op, const Module& m) { return act(op, basis_vector(m, kTop, 0)); }

bool same(const BlockVector& a, const BlockVector& b) {
  BlockVector d = a;
  for (const auto& [k, v] : b) {
    auto& x = d[k];
    if (x.empty()) x.resize(v.size());
    for (size_t i = 0; i < v.size(); ++i) x[i] -= v[i];
  }
  return is_zero(d);
}

BlockVector scaled(BlockVector v, const Scalar& c) {
  for (auto& [k, x] : v) {
    for (auto& s : x) s *= c;
  }
  return v;
}

void require_pass(const RelationReport& r) {
  for (const auto& e : r.entries) {
    INFO(r.suite << ": " << e.id << (e.witness ? " at " + e.witness->state + " " + e.witness->modes + " " + e.witness->entry : ""));
    CHECK(e.pass);
    CHECK(!e.vacuous());
  }
}

}  // namespace

TEST_CASE("module construction examples") {
  auto m = Module::build({2, 0}, 0);
  CHECK(m->blocks().size() == 1);
  CHECK(*m->dim(kTop) == 1);
  Chevalley c(m);
  CHECK(same(on_top(c.t(0), *m), scaled(basis_vector(*m, kTop, 0), q(2))));

  auto m11 = Module::build({1, 1}, 1);
  CHECK(*m11->dim({1, 0, 0}) == 1);
  CHECK(*m11->dim({0, 1, 0}) == 1);
  CHECK(m11->total_dim(0) == 2);
  // degree two is past the truncation, except where the weight is absent
  CHECK(!m11->dim({2, 1, 0}));
  CHECK(*m11->dim({2, 9, 0}) == 0);
  CHECK_THROWS(Module::build({-1, 3}, 2));
}

TEST_CASE("dimensions of the level two modules") {
  const size_t expect[3][5] = {{1, 3, 9, 15, 30}, {2, 6, 12, 26, 48}, {3, 4, 12, 21, 43}};
  int idx = 0;
  for (Weight w : {Weight{2, 0}, Weight{1, 1}, Weight{0, 2}}) {
    auto m = Module::build(w, 4);
    for (int d = 0; d <= 4; ++d) CHECK(m->total_dim(d) == expect[idx][d]);
    ++idx;
  }
}

TEST_CASE("Chevalley action examples") {
  auto m = Module::build({2, 0}, 2);
  Chevalley c(m);
  BlockVector v = basis_vector(*m, kTop, 0);
  CHECK(same(act(c.t(1), v), v));
  CHECK(same(act(c.e(0) * c.f(0), v), scaled(v, qint(2))));
  CHECK(is_zero(act(c.e(0), v)));
  CHECK(is_zero(act(c.f(1), v)));

  auto m11 = Module::build({1, 1}, 2);
  Chevalley c11(m11);
  BlockVector u = basis_vector(*m11, kTop, 0);
  CHECK(same(act(c11.e(1) * c11.f(1), u), u));

  // leaving the truncation is reported, not guessed
  std::optional<Key> edge;
  for (const Key& k : m->blocks()) {
    if (!edge && *m->dim(k) > 0 && !c.f(0)(k)) edge = k;
  }
  REQUIRE(edge);
  CHECK((*edge)[0] == 2);
  CHECK_THROWS_AS(act(c.f(0), basis_vector(*m, *edge, 0)), TruncationOverflow);
}

TEST_CASE("Drinfeld mode examples") {
  Family fam(2, 3);
  const Weight w{2, 0};
  const DrinfeldModes& d = fam.modes(w);
  const Module& m = *fam.module(w);
  const Chevalley& c = d.chevalley();
  BlockVector v = basis_vector(m, kTop, 0);
  CHECK(same(act(d.xm(1), v), scaled(act(c.e(0), v), q(-2))));
  // [a(1), a(-1)] = [2][2] on every state where it can be evaluated
  RelationEntry e;
  e.check_zero(qcommutator(d.a(1), d.a(-1)) - (qint(2) * qint(2)) * c.id(), m.blocks(), "");
  CHECK(e.pass);
  CHECK(!e.vacuous());
  RelationEntry kx;
  for (int k = -2; k <= 2; ++k) kx.check_zero(qcommutator(d.K(), d.xp(k), q(2)), m.blocks(), "");
  CHECK(kx.pass);
  // a wrong constant is caught
  RelationEntry bad;
  bad.check_zero(qcommutator(d.a(1), d.a(-1)) - qint(4) * c.id(), m.blocks(), "");
  CHECK(!bad.pass);
  CHECK(bad.witness);
}

TEST_CASE("reflection examples") {
  Family fam(2, 3);
  const Weight w{2, 0};
  const Module& m = *fam.module(w);
  const Chevalley& c = fam.chev(w);
  BlockVector v = basis_vector(m, kTop, 0);
  CHECK(same(act(fam.S(w, 1), v), v));
  LinearOp S1 = fam.S(w, 1), S1i = fam.S_inverse(w, 1), S0 = fam.S(w, 0), S0i = fam.S_inverse(w, 0);
  RelationEntry e;
  e.check_zero(S1 * c.t(1) * S1i - c.t(1, -1), m.blocks(), "");
  e.check_zero(S0 * c.e(0) * S0i + c.f(0) * c.t(0), m.blocks(), "");
  CHECK(e.pass);
  CHECK(!e.vacuous());
  RelationEntry wrong;
  wrong.check_zero(S0 * c.e(0) * S0i - c.f(0) * c.t(0), m.blocks(), "");
  CHECK(!wrong.pass);
  // S_0 reaches deeper blocks; some of them fall outside the truncation
  size_t cut = 0, kept = 0;
  for (const Key& k : m.blocks()) (S0(k) ? kept : cut)++;
  CHECK(cut > 0);
  CHECK(kept > 0);
  CHECK(S0({3, 0, 0}));
}

TEST_CASE("sigma and Dhat examples") {
  Family fam(2, 3);
  const Weight w{2, 0}, w2{0, 2}, w11{1, 1};
  const Module& m = *fam.module(w);
  const Module& m2 = *fam.module(w2);
  BlockVector v = basis_vector(m, kTop, 0);
  CHECK(same(act(fam.sigma(w), v), basis_vector(m2, kTop, 0)));
  CHECK(same(act(fam.sigma(w) * fam.chev(w).f(0), v), act(fam.chev(w2).f(1), basis_vector(m2, kTop, 0))));
  RelationEntry inv;
  inv.check_zero(fam.sigma(w11) * fam.sigma(w11) - fam.chev(w11).id(), fam.module(w11)->blocks(), "");
  CHECK(inv.pass);
  CHECK(!inv.vacuous());

  const DrinfeldModes& d = fam.modes(w11);
  LinearOp D = fam.dhat(w11), Di = fam.dhat_inverse(w11);
  RelationEntry e;
  e.check_zero(D * d.K() * Di - q(-2) * d.K(), fam.module(w11)->blocks(), "");
  e.check_zero(D * d.xp(0) * Di + d.xp(-1), fam.module(w11)->blocks(), "");
  CHECK(e.pass);
  CHECK(!e.vacuous());
  BlockVector top = basis_vector(*fam.module(w11), kTop, 0);
  BlockVector img = act(D, top);
  REQUIRE(img.size() == 1);
  CHECK(img.begin()->first == Key{1, 0, 0});
  CHECK(*fam.module(w11)->dim({1, 0, 0}) == 1);
  CHECK(!is_zero(img));
}

TEST_CASE("relation suites pass at small depth") {
  Family fam(2, 3);
  for (Weight w : fam.weights()) {
    require_pass(module_suite(fam, w));
    require_pass(drinfeld_suite(fam, w, 2));
    require_pass(reflection_suite(fam, w));
    require_pass(dhat_suite(fam, w, 2));
  }
  Family one(1, 4);
  for (Weight w : one.weights()) {
    require_pass(module_suite(one, w));
    require_pass(drinfeld_suite(one, w, 2));
    require_pass(dhat_suite(one, w, 2));
  }
  for (int l = 1; l <= 3; ++l) require_pass(evaluation_suite(l));
}

TEST_CASE("module cache round trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "qaffine_test_cache";
  fs::remove_all(dir);
  auto a = load_or_build({1, 1}, 3, dir.string());
  CHECK(fs::exists(dir / "sl2_1_1_d3.json"));
  auto b = load_or_build({1, 1}, 3, dir.string());
  CHECK(a->to_json() == b->to_json());
  CHECK(b->blocks() == a->blocks());
  fs::remove_all(dir);
}

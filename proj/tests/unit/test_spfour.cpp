#include <doctest.h>

#include "qaffine/qfield/qnumbers.hpp"
#include "qaffine/spfour/suites.hpp"

using namespace qaffine;
using namespace qaffine::sp4;

namespace {

Scalar q(int e) { return Scalar::q_pow(e); }

void require_pass(const RelationReport& r) {
  for (const auto& e : r.entries) {
    INFO(r.suite << ": " << e.id << (e.witness ? " at " + e.witness->state + " " + e.witness->modes + " " + e.witness->entry : ""));
    CHECK(e.pass);
  }
}

struct Setup {
  sl2::Family fam;
  iw::Intertwiners I;
  BigSpace S;
  Sp4Action A;
  Setup(int j, int depth) : fam(2, depth), I(fam), S(j, depth, fam), A(S, I) {}
};

BlockVector scaled(BlockVector v, const Scalar& c) {
  for (auto& [k, x] : v)
    for (auto& s : x) s *= c;
  return v;
}

bool equal(const BlockVector& a, const BlockVector& b) {
  BlockVector d = a;
  for (const auto& [k, v] : b) {
    auto& t = d[k];
    if (t.empty()) t.assign(v.size(), Scalar());
    for (size_t i = 0; i < v.size(); ++i) t[i] -= v[i];
  }
  return is_zero(d);
}

}  // namespace

TEST_CASE("V(j) degree dimensions") {
  const std::vector<std::vector<size_t>> expect{{1, 10, 30, 85}, {4, 20, 60, 160}, {5, 15, 56, 130}};
  sl2::Family fam(2, 3);
  for (int j = 0; j < 3; ++j) {
    BigSpace S(j, 3, fam);
    std::vector<size_t> got(4, 0);
    for (const auto& k : S.blocks()) got[k[0]] += *S.dim(k);
    CHECK(got == expect[j]);
    CHECK(S.dim(BigSpace::key(4, 0, Half::whole(0))) == std::nullopt);
  }
  CHECK_THROWS_AS(BigSpace(3, 2, fam), std::invalid_argument);
  sl2::Family one(1, 3);
  CHECK_THROWS_AS(BigSpace(0, 2, one), std::invalid_argument);
  CHECK_THROWS_AS(BigSpace(0, 4, fam), std::invalid_argument);
}

TEST_CASE("charge degrees and modules") {
  sl2::Family fam(2, 4);
  BigSpace v0(0, 4, fam), v1(1, 4, fam), v2(2, 4, fam);
  CHECK(v0.charge_degree(Half::whole(0)) == 0);
  CHECK(v0.charge_degree(Half::whole(1)) == 1);
  CHECK(v0.charge_degree(Half::whole(-2)) == 2);
  CHECK(v1.charge_degree(Half::half(1)) == 0);
  CHECK(v1.charge_degree(Half::half(-1)) == 0);
  CHECK(v1.charge_degree(Half::half(3)) == 1);
  CHECK(v1.charge_degree(Half::half(5)) == 3);
  CHECK(v2.charge_degree(Half::whole(-1)) == 0);
  CHECK(v2.charge_degree(Half::whole(1)) == 0);
  CHECK(v2.charge_degree(Half::whole(0)) == 0);
  CHECK(v2.charge_degree(Half::whole(2)) == 2);
  CHECK(v0.weight_of(Half::whole(1)) == Weight{0, 2});
  CHECK(v2.weight_of(Half::whole(1)) == Weight{2, 0});
  CHECK(v1.weight_of(Half::half(3)) == Weight{1, 1});
  CHECK_FALSE(v1.has_charge(Half::whole(0)));
}

TEST_CASE("examples on extremal vectors") {
  Setup s2(2, 3);
  // K2 on v_{2L0} (x) v(-1) is q^2
  BlockVector w = s2.S.top_vector();
  CHECK(equal(act(s2.A.K(2), w), scaled(w, q(2))));
  CHECK(equal(act(s2.A.K(1), w), w));

  Setup s0(0, 3);
  CHECK(is_zero(act(s0.A.e(1), s0.S.top_vector())));
  // q^d v(p) = q^{-c(p)} v(p)
  for (Half p : s0.S.charges()) {
    BlockVector v;
    try {
      v = s0.S.extremal(p);
    } catch (const TruncationOverflow&) {
      continue;
    }
    CHECK(equal(act(s0.A.qd(), v), scaled(v, q(-s0.S.charge_degree(p)))));
  }
  // y-(-1) (v_{2L0} (x) v(0)) = v_{2L1} (x) v(1)
  BlockVector img = act(s0.A.y(-1, -1), s0.S.extremal(Half::whole(0)));
  CHECK(equal(img, s0.S.extremal(Half::whole(1))));
  CHECK(is_zero(act(s0.A.y(-1, 0), s0.S.extremal(Half::whole(0)))));
}

TEST_CASE("suites at small depth") {
  for (int j = 0; j < 3; ++j) {
    Setup s(j, 3);
    CAPTURE(j);
    require_pass(highest_weight_suite(s.A));
    require_pass(linking_suite(s.A));
    require_pass(character_suite(s.S));
    require_pass(y_ops_suite(s.A, 2));
    require_pass(relations_suite(s.A, 1));
    require_pass(serre_suite(s.A, {0}, {-1, 0}));
  }
}

TEST_CASE("linking scalars are nonzero and recorded") {
  Setup s(1, 3);
  auto r = linking_suite(s.A);
  size_t used = 0;
  for (const auto& e : r.entries) {
    if (e.states_checked == 0) continue;
    ++used;
    CHECK(e.note.find("charge") != std::string::npos);
  }
  CHECK(used == 2);
  Setup t(0, 3);
  auto r0 = linking_suite(t.A);
  CHECK(r0.entries[0].note == "charge -2: 1; charge 0: 1");
}

TEST_CASE("negative controls") {
  Setup s(0, 3);
  const auto blocks = s.S.blocks();
  SUBCASE("a-Y bracket with the opposite sign") {
    RelationEntry e;
    Scalar c = qint(2) * q(-1);
    e.check_zero(qcommutator(s.A.a(1, 1), s.A.y(1, 0)) - c * s.A.y(1, 1), blocks, "");
    CHECK_FALSE(e.pass);
  }
  SUBCASE("cubic Serre with [2] in place of [2]_2") {
    RelationEntry e;
    LinearOp y = s.A.y(1, 0), x = s.A.x(1, 1, 0);
    e.check_zero(lincomb({{Scalar(2), product({x, y, y})}, {-Scalar(2) * qint(2), product({y, x, y})},
                          {Scalar(2), product({y, y, x})}}),
                 blocks, "");
    CHECK_FALSE(e.pass);
  }
  SUBCASE("[x2+, x2-] without gamma") {
    RelationEntry e;
    Scalar c = (q(2) - q(-2)).inverse();
    e.check_zero(qcommutator(s.A.y(1, 1), s.A.y(-1, -1)) - c * (s.A.psi(2, 0) - s.A.phi(2, 0)), blocks, "");
    CHECK_FALSE(e.pass);
  }
  SUBCASE("K2 with the wrong power of q") {
    RelationEntry e;
    e.check_zero(s.A.K(2) * s.A.y(1, 0) - q(2) * (s.A.y(1, 0) * s.A.K(2)), blocks, "");
    CHECK_FALSE(e.pass);
  }
}

TEST_CASE("reports are deterministic") {
  std::string a, b;
  {
    Setup s(1, 2);
    a = relations_suite(s.A, 1).to_json().dump() + linking_suite(s.A).to_json().dump();
  }
  {
    Setup s(1, 2);
    b = relations_suite(s.A, 1).to_json().dump() + linking_suite(s.A).to_json().dump();
  }
  CHECK(a == b);
  CHECK(a.find("seconds") == std::string::npos);
}

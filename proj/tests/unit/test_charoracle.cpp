#include <doctest.h>

#include "qaffine/charoracle/freudenthal.hpp"

using namespace qaffine::chars;

TEST_CASE("highest weight has multiplicity one") {
  for (auto lam : std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}, {3, 1}}) {
    CHECK(freudenthal(RootSystem::a1(), lam, 3).at({0, 0, 0}) == 1);
  }
  for (int j = 0; j < 3; ++j) {
    std::vector<int> l(3, 0);
    l[j] = 1;
    CHECK(freudenthal(RootSystem::c2(), l, 2).at({0, 0, 0}) == 1);
  }
}

TEST_CASE("A1 examples") {
  Table t = freudenthal(RootSystem::a1(), {2, 0}, 3);
  CHECK(t.at({1, 0, 0}) == 1);
  CHECK(t.at({0, 1, 0}) == 0);
  // level one: Lambda_0 - n delta has multiplicity p(n)
  Table b = freudenthal(RootSystem::a1(), {1, 0}, 8);
  const int64_t p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) CHECK(b.at({n, n, 0}) == p[n]);
}

TEST_CASE("Cartan data") {
  RootSystem c = RootSystem::c2();
  // delta is orthogonal to every simple root
  for (int i = 0; i < 3; ++i) {
    RootVec e{0, 0, 0};
    e[i] = 1;
    CHECK(c.form(c.delta, e) == 0);
  }
  CHECK(c.form({0, 1, 0}, {0, 1, 0}) == 2);
  CHECK(c.form({0, 0, 1}, {0, 0, 1}) == 4);
  RootSystem a = RootSystem::a1();
  CHECK(a.form(a.delta, a.delta) == 0);
}

TEST_CASE("C2 level one low degrees") {
  // degree 0 carries the finite irreducible modules of dimensions 1, 4, 5
  const int64_t top[] = {1, 4, 5};
  for (int j = 0; j < 3; ++j) {
    std::vector<int> l(3, 0);
    l[j] = 1;
    Table t = freudenthal(RootSystem::c2(), l, 2);
    CHECK(t.degree_total(0) == top[j]);
  }
  Table t0 = freudenthal(RootSystem::c2(), {1, 0, 0}, 2);
  // degree one of the basic module is the adjoint representation of sp4
  CHECK(t0.degree_total(1) == 10);
  CHECK(t0.at({1, 2, 1}) == 2);
}

TEST_CASE("result does not depend on the positive root order") {
  for (uint64_t seed : {1u, 7u, 123u}) {
    CHECK(compare(freudenthal(RootSystem::c2(), {0, 1, 0}, 4), freudenthal(RootSystem::c2(), {0, 1, 0}, 4, seed))
              .equal);
    CHECK(compare(freudenthal(RootSystem::a1(), {1, 1}, 5), freudenthal(RootSystem::a1(), {1, 1}, 5, seed)).equal);
  }
}

TEST_CASE("compare") {
  Table a = freudenthal(RootSystem::a1(), {2, 0}, 3);
  Diff same = compare(a, a);
  CHECK(same.equal);
  CHECK(same.witnesses.empty());
  Table b = a;
  b.mult[{2, 2, 0}] += 1;
  Diff off = compare(a, b);
  CHECK(!off.equal);
  REQUIRE(off.witnesses.size() == 1);
  CHECK(off.witnesses[0].first == RootVec{2, 2, 0});
  Table c = freudenthal(RootSystem::a1(), {2, 0}, 5);
  Diff dm = compare(a, c);
  CHECK(dm.equal);
  CHECK(dm.depth_mismatch);
  CHECK(dm.common_depth == 3);
}

TEST_CASE("invalid input") {
  CHECK_THROWS(freudenthal(RootSystem::a1(), {-1, 1}, 2));
  CHECK_THROWS(freudenthal(RootSystem::c2(), {1, 0}, 2));
}

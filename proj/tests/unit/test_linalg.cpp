#include <doctest.h>

#include <random>

#include "qaffine/linalg/blockop.hpp"
#include "qaffine/linalg/sparse.hpp"
#include "qaffine/report.hpp"

using namespace qaffine;

namespace {

Scalar q(int e) { return Scalar::q_pow(e); }

Matrix random_matrix(std::mt19937_64& rng, size_t r, size_t c, int zero_bias) {
  std::uniform_int_distribution<int> coef(-3, 3), expo(-2, 2), z(0, 9);
  Matrix m(r, c);
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < c; ++j) {
      if (z(rng) < zero_bias) continue;
      Scalar num = Scalar(coef(rng)) * q(expo(rng)) + Scalar(coef(rng));
      Scalar den = q(expo(rng)) + Scalar(1 + z(rng) % 3);
      m(i, j) = num / den;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("nullspace examples") {
  SparseMatrix z(1, 1);
  auto ns = nullspace(z);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0].get(0).is_one());

  SparseMatrix id(Matrix::identity(2));
  CHECK(nullspace(id).empty());

  Matrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = q(1);
  m(1, 0) = q(-1);
  m(1, 1) = 1;
  auto n2 = nullspace(SparseMatrix(m));
  REQUIRE(n2.size() == 1);
  SparseVector expect;
  expect.set(0, -q(1));
  expect.set(1, 1);
  CHECK(proportional(n2[0], expect).kind == Proportionality::kProportional);
}

TEST_CASE("solve examples") {
  SparseMatrix id(Matrix::identity(2));
  SparseVector e1;
  e1.set(0, 1);
  auto x = solve(id, e1);
  REQUIRE(x);
  CHECK(*x == e1);

  SparseMatrix row(1, 2);
  row.set(0, 0, 1);
  row.set(0, 1, 1);
  auto x0 = solve(row, SparseVector());
  REQUIRE(x0);
  CHECK(x0->is_zero());
  SparseVector one;
  one.set(0, 1);
  auto x1 = solve(row, one);
  REQUIRE(x1);
  CHECK(x1->get(0).is_one());
  CHECK(x1->get(1).is_zero());

  SparseMatrix sing(2, 1);
  sing.set(0, 0, 1);
  sing.set(1, 0, 1);
  SparseVector rhs;
  rhs.set(0, 1);
  CHECK(!solve(sing, rhs));
}

TEST_CASE("proportional examples") {
  SparseVector a, b, c;
  a.set(0, q(1));
  b.set(0, 1);
  auto p = proportional(a, b);
  CHECK(p.kind == Proportionality::kProportional);
  CHECK(p.factor == q(1));
  c.set(0, 1);
  c.set(1, 1);
  CHECK(proportional(c, b).kind == Proportionality::kNotProportional);
  CHECK(proportional(SparseVector(), b).kind == Proportionality::kZeroLeft);
  CHECK(proportional(SparseVector(), SparseVector()).factor.is_one());
}

TEST_CASE("rank-nullity and nullspace exactness on seeded random matrices") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 30; ++it) {
    size_t r = 1 + it % 5, c = 1 + (it * 7) % 6;
    Matrix m = random_matrix(rng, r, c, 5);
    // force dependent rows now and then
    if (r > 2 && it % 3 == 0) {
      for (size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * q(2) - m(1, j);
    }
    auto ns = nullspace(m);
    CHECK(rank(m) + ns.size() == c);
    for (const auto& w : ns) {
      Vec y = m.apply(w);
      for (const auto& e : y) CHECK(e.is_zero());
    }
  }
}

TEST_CASE("inverse and solve agree with multiplication") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 10; ++it) {
    Matrix m = random_matrix(rng, 4, 4, 2);
    if (rank(m) < 4) continue;
    Matrix inv = inverse(m);
    CHECK(m * inv == Matrix::identity(4));
    Vec b = {q(1), Scalar(2), Scalar(), q(-3)};
    auto x = solve(m, b);
    REQUIRE(x);
    CHECK(m.apply(*x) == b);
  }
}

namespace {

struct Line : GradedSpace {
  int n;
  explicit Line(int n_) : n(n_) {}
  std::optional<size_t> dim(const Key& k) const override {
    if (k[0] < 0) return 0;
    if (k[0] > n) return std::nullopt;
    return 1;
  }
  std::vector<Key> blocks() const override {
    std::vector<Key> b;
    for (int i = 0; i <= n; ++i) b.push_back({i, 0, 0});
    return b;
  }
  std::string name() const override { return "line"; }
};

}  // namespace

TEST_CASE("block operators: composition, truncation and zero checks") {
  Line sp(3);
  LinearOp up(&sp, &sp, [&](const Key& k) -> std::optional<Block> {
    Key d{k[0] + 1, 0, 0};
    auto dd = sp.dim(d);
    if (!dd) return std::nullopt;
    Matrix m(*dd, 1);
    if (*dd) m(0, 0) = k[0] + 1;
    return Block{d, m, false};
  });
  LinearOp up2 = up * up;
  CHECK(up2({0, 0, 0})->m(0, 0) == Scalar(2));
  CHECK(!up2({2, 0, 0}));
  BlockVector v = basis_vector(sp, {3, 0, 0}, 0);
  CHECK_THROWS_AS(act(up, v), TruncationOverflow);
  RelationEntry e;
  e.check_zero(up2 - Scalar(2) * up2 + up2, sp.blocks(), "n/a");
  CHECK(e.pass);
  CHECK(e.states_checked == 2);
  CHECK(e.blocks_skipped == 2);
  RelationEntry f;
  f.check_zero(up2, sp.blocks(), "n/a");
  CHECK(!f.pass);
  CHECK(f.witness);
}

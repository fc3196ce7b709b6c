#include "qaffine/linalg/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace qaffine {

SparseVector::SparseVector(const Vec& dense) {
  for (size_t i = 0; i < dense.size(); ++i) set(i, dense[i]);
}

void SparseVector::set(size_t i, const Scalar& x) {
  if (x.is_zero()) {
    e_.erase(i);
  } else {
    e_[i] = x;
  }
}

Scalar SparseVector::get(size_t i) const {
  auto it = e_.find(i);
  return it == e_.end() ? Scalar() : it->second;
}

Vec SparseVector::dense(size_t n) const {
  Vec v(n);
  for (const auto& [i, x] : e_) {
    if (i >= n) throw std::out_of_range("SparseVector index beyond dense length");
    v[i] = x;
  }
  return v;
}

SparseMatrix::SparseMatrix(const Matrix& dense) : r_(dense.rows()), c_(dense.cols()) {
  for (size_t i = 0; i < r_; ++i) {
    for (size_t j = 0; j < c_; ++j) set(i, j, dense(i, j));
  }
}

void SparseMatrix::set(size_t i, size_t j, const Scalar& x) {
  if (i >= r_ || j >= c_) throw std::out_of_range("SparseMatrix index");
  if (x.is_zero()) {
    e_.erase({i, j});
  } else {
    e_[{i, j}] = x;
  }
}

Scalar SparseMatrix::get(size_t i, size_t j) const {
  auto it = e_.find({i, j});
  return it == e_.end() ? Scalar() : it->second;
}

Matrix SparseMatrix::dense() const {
  Matrix m(r_, c_);
  for (const auto& [ij, x] : e_) m(ij.first, ij.second) = x;
  return m;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  std::map<size_t, DotAccumulator> acc;
  for (const auto& [ij, x] : e_) {
    Scalar y = v.get(ij.second);
    if (!y.is_zero()) acc[ij.first].add_product(x, y);
  }
  SparseVector r;
  for (auto& [i, a] : acc) r.set(i, a.result());
  return r;
}

std::vector<SparseVector> nullspace(const SparseMatrix& m) {
  std::vector<SparseVector> r;
  for (const auto& v : nullspace(m.dense())) r.emplace_back(v);
  return r;
}

std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& rhs) {
  auto x = solve(m.dense(), rhs.dense(m.rows()));
  if (!x) return std::nullopt;
  return SparseVector(*x);
}

size_t rank(const SparseMatrix& m) { return rank(m.dense()); }

Proportionality proportional(const SparseVector& u, const SparseVector& v) {
  size_t n = 0;
  if (!u.entries().empty()) n = std::max(n, u.entries().rbegin()->first + 1);
  if (!v.entries().empty()) n = std::max(n, v.entries().rbegin()->first + 1);
  return proportional(u.dense(n), v.dense(n));
}

}  // namespace qaffine

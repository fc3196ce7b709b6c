#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qaffine/linalg/elimination.hpp"

namespace qaffine {

// index -> nonzero entry
class SparseVector {
 public:
  SparseVector() = default;
  explicit SparseVector(const Vec& dense);
  void set(size_t i, const Scalar& x);
  Scalar get(size_t i) const;
  const std::map<size_t, Scalar>& entries() const { return e_; }
  Vec dense(size_t n) const;
  bool is_zero() const { return e_.empty(); }
  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.e_ == b.e_; }

 private:
  std::map<size_t, Scalar> e_;
};

// (row, col) -> nonzero entry
class SparseMatrix {
 public:
  SparseMatrix(size_t rows, size_t cols) : r_(rows), c_(cols) {}
  explicit SparseMatrix(const Matrix& dense);
  void set(size_t i, size_t j, const Scalar& x);
  Scalar get(size_t i, size_t j) const;
  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  const std::map<std::pair<size_t, size_t>, Scalar>& entries() const { return e_; }
  Matrix dense() const;
  SparseVector apply(const SparseVector& v) const;

 private:
  size_t r_, c_;
  std::map<std::pair<size_t, size_t>, Scalar> e_;
};

std::vector<SparseVector> nullspace(const SparseMatrix& m);
std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& rhs);
size_t rank(const SparseMatrix& m);
Proportionality proportional(const SparseVector& u, const SparseVector& v);

}  // namespace qaffine

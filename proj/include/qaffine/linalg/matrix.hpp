#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qaffine/qfield/scalar.hpp"

namespace qaffine {

using Vec = std::vector<Scalar>;

// Dense row-major matrix over Q(q^{1/2}). Zero-sized shapes are allowed.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t r, size_t c) : r_(r), c_(c), a_(r * c) {}
  static Matrix identity(size_t n, const Scalar& diag = Scalar(1));
  static Matrix column(const Vec& v);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  Scalar& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const Scalar& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }
  Vec col(size_t j) const;
  Vec row(size_t i) const;

  bool is_zero() const;
  size_t nonzeros() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) { return mul(a, b); }
  static Matrix mul(const Matrix& a, const Matrix& b);
  Matrix scaled(const Scalar& k) const;
  // this += k*o
  void axpy(const Scalar& k, const Matrix& o);
  Vec apply(const Vec& v) const;
  Matrix transpose() const;
  static Matrix kron(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

/*
 * Sum of products a_k * b_k without intermediate reduction.
 * Terms are grouped by their (unreduced) denominator and canonicalized once at the end.
 */
class DotAccumulator {
 public:
  void add_product(const Scalar& a, const Scalar& b);
  void add(const Scalar& a);
  Scalar result() const;

 private:
  void add_frac(Poly n, const Poly& d);
  std::vector<std::pair<Poly, Poly>> groups_;  // (den, num)
};

}  // namespace qaffine

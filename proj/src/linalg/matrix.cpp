#include "qaffine/linalg/matrix.hpp"

#include <stdexcept>

namespace qaffine {

Matrix Matrix::identity(size_t n, const Scalar& diag) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = diag;
  return m;
}

Matrix Matrix::column(const Vec& v) {
  Matrix m(v.size(), 1);
  for (size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Vec Matrix::col(size_t j) const {
  Vec v(r_);
  for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Matrix::row(size_t i) const { return Vec(a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_)); }

bool Matrix::is_zero() const {
  for (const auto& x : a_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

size_t Matrix::nonzeros() const {
  size_t n = 0;
  for (const auto& x : a_) n += !x.is_zero();
  return n;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch in +");
  for (size_t k = 0; k < a_.size(); ++k) {
    if (!o.a_[k].is_zero()) a_[k] += o.a_[k];
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch in -");
  for (size_t k = 0; k < a_.size(); ++k) {
    if (!o.a_[k].is_zero()) a_[k] -= o.a_[k];
  }
  return *this;
}

void Matrix::axpy(const Scalar& k, const Matrix& o) {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch in axpy");
  if (k.is_zero()) return;
  for (size_t i = 0; i < a_.size(); ++i) {
    if (!o.a_[i].is_zero()) a_[i] += k * o.a_[i];
  }
}

Matrix Matrix::mul(const Matrix& a, const Matrix& b) {
  if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch in *");
  Matrix r(a.r_, b.c_);
  if (a.r_ == 0 || b.c_ == 0 || a.c_ == 0) return r;
  // column index lists of nonzeros in each row of b
  std::vector<std::vector<size_t>> bnz(b.r_);
  for (size_t k = 0; k < b.r_; ++k) {
    for (size_t j = 0; j < b.c_; ++j) {
      if (!b(k, j).is_zero()) bnz[k].push_back(j);
    }
  }
  std::vector<DotAccumulator> acc;
  for (size_t i = 0; i < a.r_; ++i) {
    acc.assign(b.c_, DotAccumulator());
    std::vector<char> touched(b.c_, 0);
    for (size_t k = 0; k < a.c_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j : bnz[k]) {
        acc[j].add_product(x, b(k, j));
        touched[j] = 1;
      }
    }
    for (size_t j = 0; j < b.c_; ++j) {
      if (touched[j]) r(i, j) = acc[j].result();
    }
  }
  return r;
}

Matrix Matrix::scaled(const Scalar& k) const {
  Matrix r(r_, c_);
  if (k.is_zero()) return r;
  for (size_t i = 0; i < a_.size(); ++i) {
    if (!a_[i].is_zero()) r.a_[i] = a_[i] * k;
  }
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != c_) throw std::invalid_argument("matrix-vector shape mismatch");
  Vec r(r_);
  for (size_t i = 0; i < r_; ++i) {
    DotAccumulator acc;
    for (size_t j = 0; j < c_; ++j) acc.add_product((*this)(i, j), v[j]);
    r[i] = acc.result();
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (size_t i = 0; i < r_; ++i) {
    for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.r_ * b.r_, a.c_ * b.c_);
  for (size_t i = 0; i < a.r_; ++i) {
    for (size_t j = 0; j < a.c_; ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (size_t k = 0; k < b.r_; ++k) {
        for (size_t l = 0; l < b.c_; ++l) {
          if (!b(k, l).is_zero()) r(i * b.r_ + k, j * b.c_ + l) = x * b(k, l);
        }
      }
    }
  }
  return r;
}

void DotAccumulator::add_frac(Poly n, const Poly& d) {
  for (auto& g : groups_) {
    if (g.first == d) {
      g.second += n;
      return;
    }
  }
  groups_.emplace_back(d, std::move(n));
}

void DotAccumulator::add_product(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return;
  Poly n = a.num() * b.num();
  if (a.den().is_one()) {
    add_frac(std::move(n), b.den());
  } else if (b.den().is_one()) {
    add_frac(std::move(n), a.den());
  } else if (a.den() == b.den()) {
    add_frac(std::move(n), a.den() * a.den());
  } else {
    // reduce the cross terms so the unreduced denominator stays small
    Scalar p = a * b;
    add_frac(p.num(), p.den());
  }
}

void DotAccumulator::add(const Scalar& a) {
  if (a.is_zero()) return;
  add_frac(a.num(), a.den());
}

Scalar DotAccumulator::result() const {
  Scalar r;
  for (const auto& g : groups_) {
    if (g.second.is_zero()) continue;
    r += g.first.is_one() ? Scalar(g.second) : Scalar::fraction(g.second, g.first);
  }
  return r;
}

}  // namespace qaffine

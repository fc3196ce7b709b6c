#include "qaffine/linalg/elimination.hpp"

#include <stdexcept>

namespace qaffine {

// Gauss-Jordan over the field; in each column the pivot is the cheapest nonzero candidate
Echelon row_reduce(const Matrix& m) {
  const size_t R = m.rows(), C = m.cols();
  Matrix a = m;
  Echelon e;
  size_t r = 0;
  auto cost = [](const Scalar& x) { return x.num().size() + x.den().size(); };
  for (size_t c = 0; c < C && r < R; ++c) {
    size_t p = R;
    for (size_t i = r; i < R; ++i) {
      if (a(i, c).is_zero()) continue;
      if (p == R || cost(a(i, c)) < cost(a(p, c))) p = i;
    }
    if (p == R) continue;
    if (p != r) {
      for (size_t j = c; j < C; ++j) std::swap(a(p, j), a(r, j));
    }
    const Scalar inv = a(r, c).inverse();
    for (size_t j = c; j < C; ++j) {
      if (!a(r, j).is_zero()) a(r, j) *= inv;
    }
    for (size_t i = 0; i < R; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar f = a(i, c);
      for (size_t j = c; j < C; ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  Matrix u(r, C);
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < C; ++j) u(i, j) = std::move(a(i, j));
  }
  e.rref = std::move(u);
  return e;
}

size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vec> nullspace(const Matrix& m) {
  Echelon e = row_reduce(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (size_t c : e.pivots) is_pivot[c] = 1;
  std::vector<Vec> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  Echelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.rref(i, m.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = row_reduce(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw std::domain_error("singular matrix");
  Matrix inv(n, n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
  }
  return inv;
}

Proportionality proportional(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("proportional: length mismatch");
  size_t k = 0;
  while (k < v.size() && v[k].is_zero()) ++k;
  bool uzero = true;
  for (const auto& x : u) uzero = uzero && x.is_zero();
  if (k == v.size()) {
    if (uzero) return {Proportionality::kProportional, Scalar(1)};
    return {Proportionality::kZeroRight, Scalar()};
  }
  if (uzero) return {Proportionality::kZeroLeft, Scalar()};
  Scalar c = u[k] / v[k];
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] != c * v[i]) return {Proportionality::kNotProportional, Scalar()};
  }
  return {Proportionality::kProportional, c};
}

}  // namespace qaffine

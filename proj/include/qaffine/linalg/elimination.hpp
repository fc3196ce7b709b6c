#pragma once

#include <optional>
#include <vector>

#include "qaffine/linalg/matrix.hpp"

namespace qaffine {

struct Echelon {
  std::vector<size_t> pivots;  // pivot column of each nonzero row, increasing
  Matrix rref;                 // rank x cols, pivot entries equal to 1
};

// reduced row echelon form over Q(q^{1/2})
Echelon row_reduce(const Matrix& m);
size_t rank(const Matrix& m);
// basis of the right nullspace, one vector per free column (free entry set to 1)
std::vector<Vec> nullspace(const Matrix& m);
// free variables set to zero; nullopt when inconsistent
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);
// inverse of a square matrix; throws if singular
Matrix inverse(const Matrix& m);

struct Proportionality {
  enum Kind { kProportional, kNotProportional, kZeroLeft, kZeroRight };
  Kind kind;
  Scalar factor;  // u = factor * v when kProportional or kZeroLeft (factor 0); 1 when both zero
};
// u = c v ? Both zero counts as proportional with c = 1.
Proportionality proportional(const Vec& u, const Vec& v);

}  // namespace qaffine

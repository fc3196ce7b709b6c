#pragma once

#include "qaffine/qfield/scalar.hpp"

namespace qaffine {

// [n]_i = (q_i^n - q_i^-n)/(q_i - q_i^-1) with q_i = q^i
Scalar qint(int n, int i = 1);
// [n]! with base q
Scalar qfactorial(int n);
// n-th coefficient of exp_{q^sign}(x) = sum q^{sign n(n-1)/2} x^n / [n]!
Scalar qexp_coeff(int n, int sign);
// q-commutator helper value: q^e
inline Scalar qpow(int e) { return Scalar::q_pow(e); }
// q^{e/2}
inline Scalar qhalf(int e) { return Scalar::s_pow(e); }

}  // namespace qaffine

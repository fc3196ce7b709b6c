#include "qaffine/qfield/qnumbers.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qaffine {

Scalar qint(int n, int i) {
  if (i < 1) throw std::invalid_argument("qint base index must be positive");
  if (n == 0) return Scalar();
  if (n < 0) return -qint(-n, i);
  // sum_{k=0}^{n-1} q_i^{n-1-2k}, exponents in s are twice the q exponents
  std::vector<Integer> c(static_cast<size_t>(4 * i * (n - 1) + 1));
  for (int k = 0; k < n; ++k) c[static_cast<size_t>(4 * i * (n - 1 - k))] = 1;
  return Scalar(Poly::from_coeffs(-2 * i * (n - 1), std::move(c)));
}

Scalar qfactorial(int n) {
  if (n < 0) throw std::invalid_argument("qfactorial of negative integer");
  static std::mutex mu;
  static std::map<int, Scalar> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  Scalar r(1);
  for (int m = 2; m <= n; ++m) r *= qint(m);
  memo.emplace(n, r);
  return r;
}

Scalar qexp_coeff(int n, int sign) {
  if (n < 0) throw std::invalid_argument("qexp_coeff of negative order");
  if (sign != 1 && sign != -1) throw std::invalid_argument("qexp_coeff sign must be +1 or -1");
  return Scalar::q_pow(sign * n * (n - 1) / 2) / qfactorial(n);
}

}  // namespace qaffine

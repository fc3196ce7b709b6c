#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qaffine/qfield/scalar.hpp"

namespace qaffine::fock {

// an element of (1/2)Z, stored doubled
struct Half {
  int twice = 0;
  static Half whole(int n) { return Half{2 * n}; }
  static Half half(int t) { return Half{t}; }
  bool integral() const { return twice % 2 == 0; }
  int floor() const { return twice >= 0 ? twice / 2 : -((1 - twice) / 2); }
  Half operator+(Half o) const { return Half{twice + o.twice}; }
  Half operator-(Half o) const { return Half{twice - o.twice}; }
  Half operator-() const { return Half{-twice}; }
  Half operator*(int n) const { return Half{twice * n}; }
  auto operator<=>(const Half&) const = default;
  std::string str() const;
};
// product of two half-integers; throws unless it is again a half-integer
Half times(Half a, Half b);
// q^{e * x} as a power of q^{1/2}
Scalar q_pow_half(int e, Half x);

// truncated power series sum_{k=0}^{N} c_k x^k
class PowerSeries {
 public:
  explicit PowerSeries(int order) : c_(order + 1) {}
  static PowerSeries one(int order);
  // 1/(1 - c x)
  static PowerSeries geometric(int order, const Scalar& c);
  // 1 - c x
  static PowerSeries linear(int order, const Scalar& c);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& operator[](int k) const { return c_[k]; }
  Scalar& operator[](int k) { return c_[k]; }

  PowerSeries operator*(const PowerSeries& o) const;
  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries scaled(const Scalar& s) const;
  bool operator==(const PowerSeries& o) const { return c_ == o.c_; }
  // constant term must vanish
  PowerSeries exp() const;
  // constant term must be 1
  PowerSeries log() const;
  PowerSeries inverse() const;
  nlohmann::ordered_json to_json() const;

 private:
  std::vector<Scalar> c_;
};

// (x; p) = prod_{k >= 0} (1 - x p^k) with x = base * z
struct QProduct {
  Scalar base;
  Scalar step;
};
// log (base z; step) = -sum_n base^n z^n / (n (1 - step^n))
PowerSeries qproduct_log(const QProduct& p, int order);
// prod_i (P_i)^{power_i}, computed through the logarithm
PowerSeries qproduct_expand(const std::vector<std::pair<QProduct, int>>& factors, int order);

/*
 * Laurent series in u_1 .. u_n expanded in the ratios u_{i+1}/u_i.
 * Monomials carry half-integer exponents. The height of u^e is -sum_m (n-m) e_m,
 * so every ratio u_{i+1}/u_i raises it by one; coefficients are exact up to valid_to.
 */
class Series {
 public:
  using Exps = std::vector<Half>;

  Series(int vars, Half valid_to) : vars_(vars), valid_(valid_to) {}
  static Series monomial(int vars, const Scalar& c, Exps e);
  // p(u_j / u_i) with i < j (0-based), exact to the order of p
  static Series in_ratio(int vars, int i, int j, const PowerSeries& p);

  int vars() const { return vars_; }
  Half valid_to() const { return valid_; }
  Half height(const Exps& e) const;
  const std::map<Exps, Scalar>& terms() const { return t_; }
  Scalar at(const Exps& e) const;
  // lowest height of a nonzero term
  std::optional<Half> min_height() const;

  Series operator*(const Series& o) const;
  Series scaled(const Scalar& s) const;

  struct Diff {
    bool equal = true;
    size_t compared = 0;  // monomials inside the common range
    Half common;
    std::string witness;
  };
  static Diff compare(const Series& a, const Series& b);
  nlohmann::ordered_json to_json() const;

 private:
  void put(const Exps& e, const Scalar& c);
  int vars_;
  Half valid_;
  std::map<Exps, Scalar> t_;
};

std::string exps_str(const Series::Exps& e);

}  // namespace qaffine::fock

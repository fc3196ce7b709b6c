#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qaffine/fockvo/series.hpp"

namespace qaffine::fock {

// [beta(k), beta(-k)] = kappa(k) for k >= 1
struct OscillatorAlgebra {
  std::string name;
  std::function<Scalar(int)> kappa;
  bool zero_mode = false;  // commuting beta(0) with a shift T
};

// a-oscillators of a level l module: [2k][lk]/k
OscillatorAlgebra a_oscillators(int level);
// b-oscillators: (q^{2k} - 1 + q^{-2k})/k
OscillatorAlgebra b_oscillators();

// parts sorted in decreasing order; charge in (1/2)Z
struct FockState {
  std::vector<int> parts;
  Half charge;
  int degree() const;
  std::string str() const;
};
// by degree, then parts, then charge
struct FockOrder {
  bool operator()(const FockState& a, const FockState& b) const;
};
using FockVector = std::map<FockState, Scalar, FockOrder>;

FockVector vacuum(Half charge);
bool is_zero(const FockVector& v);
void add_to(FockVector& acc, const FockVector& v, const Scalar& c = Scalar(1));
FockVector scaled(const FockVector& v, const Scalar& c);
std::string str(const FockVector& v);

// beta(k) for k != 0, beta(0) = charge
FockVector apply_beta(const OscillatorAlgebra& alg, int k, const FockVector& v);
// T^r
FockVector apply_shift(Half r, const FockVector& v);

// basis of the charge-p Fock space up to the given degree
std::vector<FockState> fock_basis(Half charge, int max_degree);

}  // namespace qaffine::fock

#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <tuple>

#include "qaffine/fockvo/vertex.hpp"
#include "qaffine/intertwine/intertwiner.hpp"
#include "qaffine/spfour/bigspace.hpp"

namespace qaffine::sp4 {

// module operator on V(lambda) paired with a Fock vector
using Term = std::pair<LinearOp, fock::FockVector>;
// the terms of an operator on v (x) fs for v in V(lambda); nullopt when the Fock part overflows
using TermFn = std::function<std::optional<std::vector<Term>>(Weight lambda, const FockState& fs)>;

// sum of (module op) (x) (Fock map) on a BigSpace
LinearOp lift(const BigSpace& sp, TermFn terms);

/*
 * Drinfeld generators of the level 1 sp4 action on V(j):
 * X1 = X, X2 = Y, a1 = a, a2 = -(a + [2k] b)/[2], K1 = K, K2 = (q^{2 b(0)} K)^{-1}.
 * Y+(z) = Psi_2(q^-2 z) (x) Omega_2(z), Y-(z) = Phi_0(z) (x) Omega_0(z); y(k) is the coefficient of z^{-k-1}.
 */
class Sp4Action {
 public:
  Sp4Action(const BigSpace& sp, const iw::Intertwiners& iw);
  const BigSpace& space() const { return sp_; }

  LinearOp id() const;
  // sl2 operator by weight, lifted
  LinearOp module_op(const std::string& tag, const std::function<LinearOp(Weight)>& f) const;
  LinearOp b(int k) const;
  LinearOp y(int sign, int k) const;
  LinearOp x(int i, int sign, int k) const;
  LinearOp a(int i, int k) const;
  LinearOp K(int i, int sign = 1) const;
  // psi_i(n), n >= 0, and phi_i(n), n <= 0
  LinearOp psi(int i, int n) const;
  LinearOp phi(int i, int n) const;
  LinearOp qd(int sign = 1) const;
  // Chevalley e_0, e_1, e_2
  LinearOp e(int i) const;

  // q_i = q^{d_i}, d = (1, 2)
  static Scalar qi(int i);
  // [n]_i
  static Scalar qint_i(int i, int n);
  // finite Cartan matrix entries a_ij, i, j in {1, 2}
  static int cartan(int i, int j);

 private:
  LinearOp cached(const std::string& tag, const std::function<LinearOp()>& make) const;
  const BigSpace& sp_;
  const iw::Intertwiners& iw_;
  fock::VertexOpSpec om0_, om2_, psi_, phi_;
  mutable std::recursive_mutex mu_;
  mutable std::map<std::string, LinearOp> memo_;
};

}  // namespace qaffine::sp4

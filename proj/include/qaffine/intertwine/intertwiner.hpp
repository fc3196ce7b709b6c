#pragma once

#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "qaffine/fockvo/vertex.hpp"
#include "qaffine/sl2mod/ops.hpp"

namespace qaffine::iw {

using fock::Half;
using sl2::Weight;

enum class Kind { TypeI, TypeII };

/*
 * Coefficients of bosonized vertex operators on the modules of one Family.
 * A coefficient is indexed by its absolute z-exponent e; on a source block with
 * h_1 = m the zero mode contributes (q^arg z)^{slope m}, so only e - slope m in Z
 * survives there.
 */
class Intertwiners {
 public:
  explicit Intertwiners(const sl2::Family& fam) : fam_(fam) {}
  const sl2::Family& family() const { return fam_; }
  int level() const { return fam_.level(); }

  // coefficient of z^e of a single-factor spec over a(k) at this level:
  // V(lambda) -> V(sigma^dhat lambda), evaluated as E- Dhat^dhat E+ z-power
  LinearOp bosonized(const fock::VertexOpSpec& v, Weight lambda, Half e) const;
  // the same with the factors in the written order E- E+ Dhat^dhat
  LinearOp bosonized_literal(const fock::VertexOpSpec& v, Weight lambda, Half e) const;

  // coefficient of z^d in exp(sum cminus(k) a(-k) z^k) on V(mu)
  LinearOp creation(const fock::VertexOpSpec& v, Weight mu, int d) const;
  // coefficient of z^-d in exp(sum cplus(k) a(k) z^-k) on V(mu)
  LinearOp annihilation(const fock::VertexOpSpec& v, Weight mu, int d) const;

  // type I: Phi_j from Phi_0 by f_1; type II: Psi_j from Psi_l by e_1
  LinearOp phi(Weight lambda, int j, Half e) const;
  LinearOp psi(Weight lambda, int j, Half e) const;
  LinearOp component(Kind k, Weight lambda, int j, Half e) const {
    return k == Kind::TypeI ? phi(lambda, j, e) : psi(lambda, j, e);
  }

  // z-exponent of the coefficient of Phi_0 (Psi_l) that raises the degree of v_lambda by d;
  // the same for both kinds
  Half exponent(Kind k, Weight lambda, int d) const;

 private:
  using MemoKey = std::tuple<std::string, Weight, int>;
  LinearOp memo(std::map<MemoKey, LinearOp>& m, const MemoKey& k, const std::function<LinearOp()>& make) const;
  LinearOp build(const fock::VertexOpSpec& v, Weight lambda, Half e, bool literal) const;
  void check_spec(const fock::VertexOpSpec& v) const;

  const sl2::Family& fam_;
  mutable std::recursive_mutex mu_;
  mutable std::map<MemoKey, LinearOp> cre_, ann_, bos_, lit_, comp_;
};

}  // namespace qaffine::iw

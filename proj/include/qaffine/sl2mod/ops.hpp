#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "qaffine/sl2mod/module.hpp"

namespace qaffine::sl2 {

// q - q^{-1}
Scalar qdiff();

// Chevalley generators e_i, f_i, t_i^{+-1}, q^{+-d} on one module; q^d v_lambda = v_lambda.
class Chevalley {
 public:
  explicit Chevalley(ModulePtr m);

  const Module& module() const { return *m_; }
  const ModulePtr& ptr() const { return m_; }
  const GradedSpace* space() const { return m_.get(); }
  int level() const { return m_->level(); }
  Scalar gamma() const;       // q^level
  Scalar gamma_half() const;  // q^{level/2}

  const LinearOp& e(int i) const { return e_[i]; }
  const LinearOp& f(int i) const { return f_[i]; }
  const LinearOp& t(int i, int sign = 1) const { return sign > 0 ? t_[i] : tinv_[i]; }
  const LinearOp& qd(int sign = 1) const { return sign > 0 ? qd_ : qdinv_; }
  const LinearOp& id() const { return id_; }
  // q^{sign h_i (h_i + 1)/2}
  LinearOp qh(int i, int sign) const;
  // arbitrary power of q^{1/2} times a function of h_1, e.g. z^{h_1/2} pieces
  LinearOp h1_diag(std::function<Scalar(int)> f) const;

 private:
  ModulePtr m_;
  LinearOp e_[2], f_[2], t_[2], tinv_[2], qd_, qdinv_, id_;
};

/*
 * Drinfeld modes built from the Chevalley generators:
 * x+(0) = e1, x-(0) = f1, x+(-1) = t0 f0, x-(1) = e0 t0^{-1}, K = t1.
 * psi(k), phi(-k) are the coefficients of K exp((q-q^{-1}) sum a(k) z^{-k}) and
 * K^{-1} exp(-(q-q^{-1}) sum a(-k) z^k).
 */
class DrinfeldModes {
 public:
  explicit DrinfeldModes(const Chevalley& c) : c_(c) {}
  const Chevalley& chevalley() const { return c_; }
  LinearOp xp(int k) const;
  LinearOp xm(int k) const;
  LinearOp x(int sign, int k) const { return sign > 0 ? xp(k) : xm(k); }
  LinearOp a(int k) const;
  LinearOp psi(int k) const;  // k >= 0
  LinearOp phi(int k) const;  // k <= 0
  const LinearOp& K(int sign = 1) const { return c_.t(1, sign); }

 private:
  LinearOp cached(std::map<int, LinearOp>& memo, int k, const std::function<LinearOp()>& make) const;
  const Chevalley& c_;
  mutable std::recursive_mutex mu_;
  mutable std::map<int, LinearOp> xp_, xm_, a_, psi_, phi_;
};

// exp_{q^{sign}}(c X) applied to a block matrix; nullopt when a term leaves the truncation
std::optional<BlockMatrix> qexp_apply(const LinearOp& x, const Scalar& c, int sign, BlockMatrix m);

// S_i = exp_{q^{-1}}(q^{-1} e_i t_i^{-1}) exp_{q^{-1}}(-f_i) exp_{q^{-1}}(q e_i t_i) q^{h_i(h_i+1)/2}
LinearOp reflection_S(const Chevalley& c, int i);
LinearOp reflection_S_inverse(const Chevalley& c, int i);

// flips the defining words: V(lambda) -> V(sigma lambda)
LinearOp flip_sigma(const ModulePtr& from, const ModulePtr& to);

/*
 * Modules of one level at one depth, with their operators.
 * dhat(lambda): V(lambda) -> V(sigma lambda), computed as sigma S_1 t_1^{-1}.
 */
class Family {
 public:
  Family(int level, int depth, std::string cache_dir = "");
  int level() const { return level_; }
  int depth() const { return depth_; }
  std::vector<Weight> weights() const;

  ModulePtr module(Weight w) const;
  const Chevalley& chev(Weight w) const;
  const DrinfeldModes& modes(Weight w) const;
  LinearOp S(Weight w, int i) const;
  LinearOp S_inverse(Weight w, int i) const;
  LinearOp sigma(Weight from) const;
  LinearOp dhat(Weight from) const;
  // inverse of dhat(from), a map V(sigma from) -> V(from)
  LinearOp dhat_inverse(Weight from) const;
  // S_0 t_0^{-1} sigma, the literal definition
  LinearOp dhat_literal(Weight from) const;

 private:
  struct Entry {
    ModulePtr m;
    std::unique_ptr<Chevalley> c;
    std::unique_ptr<DrinfeldModes> d;
    std::map<int, LinearOp> S, Sinv;
    LinearOp sigma, dhat, dhat_inv, dhat_lit;
  };
  Entry& entry(Weight w) const;
  int level_, depth_;
  std::string cache_dir_;
  mutable std::recursive_mutex mu_;
  mutable std::map<Weight, std::unique_ptr<Entry>> entries_;
};

// V_z^{(l)} with basis v_0..v_l; each operator is z^{zpow} times a matrix
struct ZOp {
  int zpow = 0;
  Matrix m;
};
class EvaluationModule {
 public:
  explicit EvaluationModule(int level);
  int level() const { return level_; }
  ZOp e(int i) const;
  ZOp f(int i) const;
  ZOp t(int i, int sign = 1) const;
  static ZOp mul(const ZOp& a, const ZOp& b);
  // a + c b; the z-powers must agree unless one side is zero
  static ZOp add(const ZOp& a, const ZOp& b, const Scalar& c = Scalar(1));

 private:
  int level_;
};

}  // namespace qaffine::sl2

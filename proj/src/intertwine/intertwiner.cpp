#include "qaffine/intertwine/intertwiner.hpp"

#include <algorithm>
#include <stdexcept>

#include "qaffine/qfield/qnumbers.hpp"

namespace qaffine::iw {

namespace {

// sum over partitions of d of prod_k c(k)^{n_k}/n_k! mode(sign k)^{n_k}
LinearOp oscillator_exp(const sl2::DrinfeldModes& dm, const std::function<Scalar(int)>& c, int d, int sign) {
  const GradedSpace* sp = dm.chevalley().space();
  if (d < 0) return LinearOp::zero(sp, sp);
  if (d == 0) return dm.chevalley().id();
  std::vector<std::pair<Scalar, LinearOp>> terms;
  fock::for_each_partition(d, [&](const std::vector<int>& mult) {
    Scalar coef(1);
    std::vector<LinearOp> ops;
    for (int k = 1; k < static_cast<int>(mult.size()); ++k) {
      for (int n = 1; n <= mult[k]; ++n) {
        coef *= c(k) / Scalar(n);
        ops.push_back(dm.a(sign * k));
      }
    }
    if (!coef.is_zero()) terms.emplace_back(coef, product(ops));
  });
  if (terms.empty()) return LinearOp::zero(sp, sp);
  return lincomb(terms);
}

}  // namespace

LinearOp Intertwiners::memo(std::map<MemoKey, LinearOp>& m, const MemoKey& k,
                            const std::function<LinearOp()>& make) const {
  std::lock_guard<std::recursive_mutex> g(mu_);
  auto it = m.find(k);
  if (it != m.end()) return it->second;
  LinearOp op = make();
  m.emplace(k, op);
  return op;
}

void Intertwiners::check_spec(const fock::VertexOpSpec& v) const {
  if (v.factors.size() != 1 || v.factors[0].atomic || v.factors[0].alg.name != fock::a_oscillators(level()).name) {
    throw std::invalid_argument(v.name + " is not a vertex operator over a(k) at level " + std::to_string(level()));
  }
  if (v.factors[0].dhat < -1 || v.factors[0].dhat > 1) throw std::invalid_argument(v.name + ": Dhat power");
}

LinearOp Intertwiners::creation(const fock::VertexOpSpec& v, Weight mu, int d) const {
  check_spec(v);
  return memo(cre_, {v.name, mu, d}, [&] { return oscillator_exp(fam_.modes(mu), v.factors[0].cminus, d, -1); });
}

LinearOp Intertwiners::annihilation(const fock::VertexOpSpec& v, Weight mu, int d) const {
  check_spec(v);
  return memo(ann_, {v.name, mu, d}, [&] { return oscillator_exp(fam_.modes(mu), v.factors[0].cplus, d, 1); });
}

LinearOp Intertwiners::bosonized(const fock::VertexOpSpec& v, Weight lambda, Half e) const {
  check_spec(v);
  return memo(bos_, {v.name, lambda, e.twice}, [&] { return build(v, lambda, e, false); });
}

LinearOp Intertwiners::bosonized_literal(const fock::VertexOpSpec& v, Weight lambda, Half e) const {
  check_spec(v);
  return memo(lit_, {v.name, lambda, e.twice}, [&] { return build(v, lambda, e, true); });
}

LinearOp Intertwiners::build(const fock::VertexOpSpec& v, Weight lambda, Half e, bool literal) const {
  const fock::VertexFactor& f = v.factors[0];
  const Weight target = f.dhat == 0 ? lambda : lambda.flipped();
  LinearOp D = f.dhat == 0   ? fam_.chev(lambda).id()
               : f.dhat > 0 ? fam_.dhat(lambda)
                            : fam_.dhat_inverse(target);
  const sl2::Module& src = *fam_.module(lambda);
  const GradedSpace* dst = fam_.chev(target).space();
  Intertwiners const* self = this;
  auto fn = [self, v, f, lambda, target, D, e, literal, &src](const Key& k) -> std::optional<Block> {
    const Half z0 = fock::times(f.slope, Half::whole(src.h1(k)));
    const Half n = e - z0;
    if (!n.integral()) return Block::zero_block();
    const auto dim = src.dim(k);
    if (!dim || *dim == 0) return Block::zero_block();
    const BlockMatrix one{{k, Matrix::identity(*dim)}};
    std::optional<BlockMatrix> after_d;
    int amax = k[0];
    if (literal) {
      after_d = act(D, one);
      if (!after_d) return std::nullopt;
      amax = 0;
      for (const auto& [kk, x] : *after_d) amax = std::max(amax, kk[0]);
    }
    BlockMatrix acc;
    for (int a = 0; a <= amax; ++a) {
      const int c = a + n.twice / 2;
      if (c < 0) continue;
      std::optional<BlockMatrix> m;
      if (literal) {
        m = act(self->annihilation(v, target, a), *after_d);
      } else {
        m = act(self->annihilation(v, lambda, a), one);
        if (m) m = act(D, *m);
      }
      if (m) m = act(self->creation(v, target, c), *m);
      if (!m) return std::nullopt;
      add_scaled(acc, fock::q_pow_half(f.arg_qpow, z0), *m);
    }
    if (is_zero(acc)) return Block::zero_block();
    if (acc.size() != 1) throw std::logic_error(v.name + ": coefficient is not homogeneous");
    return Block{acc.begin()->first, acc.begin()->second, false};
  };
  return LinearOp(&src, dst, fn);
}

LinearOp Intertwiners::phi(Weight lambda, int j, Half e) const {
  const int l = level();
  if (j < 0 || j > l) throw std::out_of_range("type I component " + std::to_string(j) + " at level " + std::to_string(l));
  return memo(comp_, {"I" + std::to_string(j), lambda, e.twice}, [&] {
    if (j == 0) return bosonized(fock::phi0(l), lambda, e);
    const LinearOp prev = phi(lambda, j - 1, e);
    const Scalar c = Scalar::q_pow(2 * (j - 1) - l);
    return qint(j).inverse() * (fam_.chev(lambda.flipped()).f(1) * prev - c * (prev * fam_.chev(lambda).f(1)));
  });
}

LinearOp Intertwiners::psi(Weight lambda, int j, Half e) const {
  const int l = level();
  if (j < 0 || j > l) throw std::out_of_range("type II component " + std::to_string(j) + " at level " + std::to_string(l));
  return memo(comp_, {"II" + std::to_string(j), lambda, e.twice}, [&] {
    if (j == l) return bosonized(fock::psi_lowest(l), lambda, e);
    const LinearOp prev = psi(lambda, j + 1, e);
    const Scalar c = Scalar::q_pow(l - 2 * (j + 1));
    return qint(l - j).inverse() * (fam_.chev(lambda.flipped()).e(1) * prev - c * (prev * fam_.chev(lambda).e(1)));
  });
}

Half Intertwiners::exponent(Kind, Weight lambda, int d) const {
  // Dhat^{+-1} v_lambda has degree lambda(h1) resp. 0, the zero mode gives z^{+-lambda(h1)/2}
  return Half::whole(d) - Half{lambda.m1};
}

}  // namespace qaffine::iw

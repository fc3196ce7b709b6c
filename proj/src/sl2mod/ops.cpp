#include "qaffine/sl2mod/ops.hpp"

#include <stdexcept>

#include "qaffine/qfield/qnumbers.hpp"

namespace qaffine::sl2 {

Scalar qdiff() { return Scalar::q_pow(1) - Scalar::q_pow(-1); }

namespace {

Key up_key(const Key& k, int i) { return i == 0 ? Key{k[0] - 1, k[1], 0} : Key{k[0], k[1] - 1, 0}; }
Key down_key(const Key& k, int i) { return i == 0 ? Key{k[0] + 1, k[1], 0} : Key{k[0], k[1] + 1, 0}; }

}  // namespace

Chevalley::Chevalley(ModulePtr m) : m_(std::move(m)) {
  const Module* mod = m_.get();
  for (int i = 0; i < 2; ++i) {
    e_[i] = LinearOp(mod, mod, [mod, i](const Key& k) -> std::optional<Block> {
      auto d = mod->dim(k);
      if (!d) return std::nullopt;
      if (*d == 0) return Block::zero_block();
      const Key u = up_key(k, i);
      if (u[0] < 0 || u[1] < 0 || *mod->dim(u) == 0) return Block::zero_block();
      return Block{u, *mod->E(i, k), false};
    });
    f_[i] = LinearOp(mod, mod, [mod, i](const Key& k) -> std::optional<Block> {
      auto d = mod->dim(k);
      if (!d) return std::nullopt;
      if (*d == 0) return Block::zero_block();
      const Key dn = down_key(k, i);
      auto dd = mod->dim(dn);
      if (!dd) return std::nullopt;
      if (*dd == 0) return Block::zero_block();
      return Block{dn, *mod->F(i, k), false};
    });
    t_[i] = LinearOp::diagonal(mod, [mod, i](const Key& k) { return Scalar::q_pow(i == 0 ? mod->h0(k) : mod->h1(k)); });
    tinv_[i] =
        LinearOp::diagonal(mod, [mod, i](const Key& k) { return Scalar::q_pow(-(i == 0 ? mod->h0(k) : mod->h1(k))); });
  }
  qd_ = LinearOp::diagonal(mod, [](const Key& k) { return Scalar::q_pow(-k[0]); });
  qdinv_ = LinearOp::diagonal(mod, [](const Key& k) { return Scalar::q_pow(k[0]); });
  id_ = LinearOp::identity(mod);
}

Scalar Chevalley::gamma() const { return Scalar::q_pow(level()); }
Scalar Chevalley::gamma_half() const { return Scalar::s_pow(level()); }

LinearOp Chevalley::qh(int i, int sign) const {
  const Module* mod = m_.get();
  return LinearOp::diagonal(mod, [mod, i, sign](const Key& k) {
    const int h = i == 0 ? mod->h0(k) : mod->h1(k);
    return Scalar::q_pow(sign * h * (h + 1) / 2);
  });
}

LinearOp Chevalley::h1_diag(std::function<Scalar(int)> f) const {
  const Module* mod = m_.get();
  return LinearOp::diagonal(mod, [mod, f](const Key& k) { return f(mod->h1(k)); });
}

LinearOp DrinfeldModes::cached(std::map<int, LinearOp>& memo, int k, const std::function<LinearOp()>& make) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = memo.find(k);
  if (it != memo.end()) return it->second;
  LinearOp op = make();
  memo.emplace(k, op);
  return op;
}

LinearOp DrinfeldModes::xp(int k) const {
  return cached(xp_, k, [&]() -> LinearOp {
    if (k == 0) return c_.e(1);
    if (k == -1) return c_.t(0) * c_.f(0);
    const Scalar s = c_.gamma_half() / qint(2);
    if (k > 0) return s * qcommutator(a(1), xp(k - 1));
    return s * qcommutator(a(-1), xp(k + 1));
  });
}

LinearOp DrinfeldModes::xm(int k) const {
  return cached(xm_, k, [&]() -> LinearOp {
    if (k == 0) return c_.f(1);
    if (k == 1) return c_.e(0) * c_.t(0, -1);
    const Scalar s = -c_.gamma_half().inverse() / qint(2);
    if (k > 1) return s * qcommutator(a(1), xm(k - 1));
    return s * qcommutator(a(-1), xm(k + 1));
  });
}

LinearOp DrinfeldModes::psi(int k) const {
  if (k < 0) throw std::invalid_argument("psi needs k >= 0");
  return cached(psi_, k, [&]() -> LinearOp {
    if (k == 0) return K();
    return (qdiff() * c_.gamma_half().pow(-k)) * qcommutator(xp(k), xm(0));
  });
}

LinearOp DrinfeldModes::phi(int k) const {
  if (k > 0) throw std::invalid_argument("phi needs k <= 0");
  return cached(phi_, k, [&]() -> LinearOp {
    if (k == 0) return K(-1);
    return (-qdiff() * c_.gamma_half().pow(-k)) * qcommutator(xp(0), xm(k));
  });
}

LinearOp DrinfeldModes::a(int k) const {
  if (k == 0) throw std::invalid_argument("a(0) is not a generator");
  return cached(a_, k, [&]() -> LinearOp {
    if (k == 1) return c_.gamma_half() * (K(-1) * qcommutator(xp(0), xm(1)));
    if (k == -1) return c_.gamma_half().inverse() * (K() * qcommutator(xp(-1), xm(0)));
    // exp(sum B_j z^j) = sum U_j z^j  =>  B_n = U_n - (1/n) sum_{j<n} j B_j U_{n-j}
    const int n = k > 0 ? k : -k;
    const Scalar c = k > 0 ? qdiff() : -qdiff();  // B_j = c a(+-j)
    auto U = [&](int j) { return k > 0 ? K(-1) * psi(j) : K() * phi(-j); };
    std::vector<std::pair<Scalar, LinearOp>> terms{{Scalar(1), U(n)}};
    for (int j = 1; j < n; ++j) {
      terms.push_back({-Scalar(j) / Scalar(n) * c, a(k > 0 ? j : -j) * U(n - j)});
    }
    return c.inverse() * lincomb(terms);
  });
}

std::optional<BlockMatrix> qexp_apply(const LinearOp& x, const Scalar& c, int sign, BlockMatrix m) {
  BlockMatrix acc = m;
  Scalar cn(1);
  for (int n = 1;; ++n) {
    if (n > 4096) throw std::logic_error("q-exponential did not terminate");
    auto next = act(x, m);
    if (!next) return std::nullopt;
    if (is_zero(*next)) break;
    m = std::move(*next);
    cn *= c;
    add_scaled(acc, qexp_coeff(n, sign) * cn, m);
  }
  return acc;
}

namespace {

Key reflect(const Module& mod, const Key& k, int i) {
  return i == 0 ? Key{k[0] + mod.h0(k), k[1], 0} : Key{k[0], k[1] + mod.h1(k), 0};
}

std::optional<Block> single_block(const Module& mod, const BlockMatrix& m, const Key& expect) {
  std::optional<Block> out;
  for (const auto& [k, x] : m) {
    if (x.is_zero()) continue;
    if (k != expect) throw std::logic_error("reflection left the expected weight space at " + key_str(k));
    out = Block{k, x, false};
  }
  if (!out) {
    if (mod.dim(expect).value_or(0) != 0) throw std::logic_error("reflection vanished on a nonzero block");
    return Block::zero_block();
  }
  return out;
}

}  // namespace

LinearOp reflection_S(const Chevalley& c, int i) {
  const Module* mod = &c.module();
  LinearOp et = c.e(i) * c.t(i), etinv = c.e(i) * c.t(i, -1), f = c.f(i);
  return LinearOp(mod, mod, [mod, i, et, etinv, f](const Key& k) -> std::optional<Block> {
    auto d = mod->dim(k);
    if (!d) return std::nullopt;
    if (*d == 0) return Block::zero_block();
    const int h = i == 0 ? mod->h0(k) : mod->h1(k);
    BlockMatrix m{{k, Matrix::identity(*d, Scalar::q_pow(h * (h + 1) / 2))}};
    auto r = qexp_apply(et, Scalar::q_pow(1), -1, m);
    if (!r) return std::nullopt;
    r = qexp_apply(f, Scalar(-1), -1, *r);
    if (!r) return std::nullopt;
    r = qexp_apply(etinv, Scalar::q_pow(-1), -1, *r);
    if (!r) return std::nullopt;
    return single_block(*mod, *r, reflect(*mod, k, i));
  });
}

LinearOp reflection_S_inverse(const Chevalley& c, int i) {
  const Module* mod = &c.module();
  LinearOp et = c.e(i) * c.t(i), etinv = c.e(i) * c.t(i, -1), f = c.f(i);
  return LinearOp(mod, mod, [mod, i, et, etinv, f](const Key& k) -> std::optional<Block> {
    auto d = mod->dim(k);
    if (!d) return std::nullopt;
    if (*d == 0) return Block::zero_block();
    BlockMatrix m{{k, Matrix::identity(*d)}};
    auto r = qexp_apply(etinv, -Scalar::q_pow(-1), 1, m);
    if (!r) return std::nullopt;
    r = qexp_apply(f, Scalar(1), 1, *r);
    if (!r) return std::nullopt;
    r = qexp_apply(et, -Scalar::q_pow(1), 1, *r);
    if (!r) return std::nullopt;
    for (auto& [key, x] : *r) {
      const int h = i == 0 ? mod->h0(key) : mod->h1(key);
      x = x.scaled(Scalar::q_pow(-h * (h + 1) / 2));
    }
    return single_block(*mod, *r, reflect(*mod, k, i));
  });
}

LinearOp flip_sigma(const ModulePtr& from, const ModulePtr& to) {
  if (!(from->lambda().flipped() == to->lambda())) throw std::invalid_argument("sigma: target is not V(sigma lambda)");
  const Module* a = from.get();
  const Module* b = to.get();
  return LinearOp(a, b, [a, b](const Key& k) -> std::optional<Block> {
    auto d = a->dim(k);
    if (!d) return std::nullopt;
    if (*d == 0) return Block::zero_block();
    const Key target{k[1], k[0], 0};
    auto dt = b->dim(target);
    if (!dt) return std::nullopt;
    if (*dt != *d) throw std::logic_error("sigma: weight space dimensions differ at " + key_str(k));
    Matrix m(*dt, *d);
    for (size_t j = 0; j < *d; ++j) {
      Word w = a->word(k, j);
      for (auto& g : w) g = static_cast<uint8_t>(1 - g);
      auto v = b->word_vector(w);
      if (!v) return std::nullopt;
      if (v->first != target) throw std::logic_error("sigma: flipped word in the wrong block");
      for (size_t i = 0; i < v->second.size(); ++i) m(i, j) = v->second[i];
    }
    return Block{target, std::move(m), false};
  });
}

Family::Family(int level, int depth, std::string cache_dir)
    : level_(level), depth_(depth), cache_dir_(std::move(cache_dir)) {
  if (level < 1) throw std::invalid_argument("family: level must be positive");
}

std::vector<Weight> Family::weights() const {
  std::vector<Weight> out;
  for (int m0 = level_; m0 >= 0; --m0) out.push_back({m0, level_ - m0});
  return out;
}

Family::Entry& Family::entry(Weight w) const {
  if (w.level() != level_ || w.m0 < 0 || w.m1 < 0) throw std::invalid_argument("family: weight of the wrong level");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = entries_.find(w);
  if (it != entries_.end()) return *it->second;
  auto e = std::make_unique<Entry>();
  e->m = load_or_build(w, depth_, cache_dir_);
  e->c = std::make_unique<Chevalley>(e->m);
  e->d = std::make_unique<DrinfeldModes>(*e->c);
  return *entries_.emplace(w, std::move(e)).first->second;
}

ModulePtr Family::module(Weight w) const { return entry(w).m; }
const Chevalley& Family::chev(Weight w) const { return *entry(w).c; }
const DrinfeldModes& Family::modes(Weight w) const { return *entry(w).d; }

LinearOp Family::S(Weight w, int i) const {
  Entry& e = entry(w);
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = e.S.find(i);
  if (it == e.S.end()) it = e.S.emplace(i, reflection_S(*e.c, i)).first;
  return it->second;
}

LinearOp Family::S_inverse(Weight w, int i) const {
  Entry& e = entry(w);
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = e.Sinv.find(i);
  if (it == e.Sinv.end()) it = e.Sinv.emplace(i, reflection_S_inverse(*e.c, i)).first;
  return it->second;
}

LinearOp Family::sigma(Weight from) const {
  Entry& e = entry(from);
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (!e.sigma.valid()) e.sigma = flip_sigma(e.m, module(from.flipped()));
  return e.sigma;
}

LinearOp Family::dhat(Weight from) const {
  Entry& e = entry(from);
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (!e.dhat.valid()) e.dhat = product({sigma(from), S(from, 1), chev(from).t(1, -1)});
  return e.dhat;
}

LinearOp Family::dhat_inverse(Weight from) const {
  Entry& e = entry(from);
  std::lock_guard<std::recursive_mutex> lock(mu_);
  if (!e.dhat_inv.valid()) e.dhat_inv = product({chev(from).t(1), S_inverse(from, 1), sigma(from.flipped())});
  return e.dhat_inv;
}

LinearOp Family::dhat_literal(Weight from) const {
  Entry& e = entry(from);
  std::lock_guard<std::recursive_mutex> lock(mu_);
  const Weight to = from.flipped();
  if (!e.dhat_lit.valid()) e.dhat_lit = product({S(to, 0), chev(to).t(0, -1), sigma(from)});
  return e.dhat_lit;
}

EvaluationModule::EvaluationModule(int level) : level_(level) {
  if (level < 0) throw std::invalid_argument("evaluation module: negative level");
}

ZOp EvaluationModule::e(int i) const {
  const int l = level_;
  ZOp r{i == 0 ? 1 : 0, Matrix(l + 1, l + 1)};
  for (int j = 0; j <= l; ++j) {
    if (i == 1 && j >= 1) r.m(j - 1, j) = qint(l - j + 1);
    if (i == 0 && j + 1 <= l) r.m(j + 1, j) = qint(j + 1);
  }
  return r;
}

ZOp EvaluationModule::f(int i) const {
  const int l = level_;
  ZOp r{i == 0 ? -1 : 0, Matrix(l + 1, l + 1)};
  for (int j = 0; j <= l; ++j) {
    if (i == 1 && j + 1 <= l) r.m(j + 1, j) = qint(j + 1);
    if (i == 0 && j >= 1) r.m(j - 1, j) = qint(l - j + 1);
  }
  return r;
}

ZOp EvaluationModule::t(int i, int sign) const {
  const int l = level_;
  ZOp r{0, Matrix(l + 1, l + 1)};
  for (int j = 0; j <= l; ++j) r.m(j, j) = Scalar::q_pow(sign * (i == 1 ? l - 2 * j : 2 * j - l));
  return r;
}

ZOp EvaluationModule::mul(const ZOp& a, const ZOp& b) { return {a.zpow + b.zpow, a.m * b.m}; }

ZOp EvaluationModule::add(const ZOp& a, const ZOp& b, const Scalar& c) {
  if (b.m.is_zero() || c.is_zero()) return a;
  if (a.m.is_zero()) return {b.zpow, b.m.scaled(c)};
  if (a.zpow != b.zpow) throw std::invalid_argument("evaluation module: adding different powers of z");
  ZOp r = a;
  r.m.axpy(c, b.m);
  return r;
}

}  // namespace qaffine::sl2

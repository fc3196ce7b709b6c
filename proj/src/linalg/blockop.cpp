#include "qaffine/linalg/blockop.hpp"

namespace qaffine {

std::string key_str(const Key& k) {
  return "(" + std::to_string(k[0]) + "," + std::to_string(k[1]) + "," + std::to_string(k[2]) + ")";
}

std::string GradedSpace::state_label(const Key& k, size_t i) const { return key_str(k) + "#" + std::to_string(i); }

LinearOp::LinearOp(const GradedSpace* src, const GradedSpace* dst, Fn fn)
    : src_(src), dst_(dst), state_(std::make_shared<State>()) {
  state_->fn = std::move(fn);
}

std::optional<Block> LinearOp::operator()(const Key& k) const {
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    auto it = state_->memo.find(k);
    if (it != state_->memo.end()) return *it->second;
  }
  auto r = std::make_shared<const std::optional<Block>>(state_->fn(k));
  std::lock_guard<std::mutex> lock(state_->mu);
  auto [it, inserted] = state_->memo.emplace(k, r);
  return *it->second;
}

LinearOp LinearOp::zero(const GradedSpace* src, const GradedSpace* dst) {
  return LinearOp(src, dst, [](const Key&) -> std::optional<Block> { return Block::zero_block(); });
}

LinearOp LinearOp::identity(const GradedSpace* sp) {
  return LinearOp(sp, sp, [sp](const Key& k) -> std::optional<Block> {
    auto d = sp->dim(k);
    if (!d) return std::nullopt;
    return Block{k, Matrix::identity(*d), false};
  });
}

LinearOp LinearOp::diagonal(const GradedSpace* sp, std::function<Scalar(const Key&)> f) {
  return LinearOp(sp, sp, [sp, f](const Key& k) -> std::optional<Block> {
    auto d = sp->dim(k);
    if (!d) return std::nullopt;
    return Block{k, Matrix::identity(*d, f(k)), false};
  });
}

LinearOp compose(const LinearOp& b, const LinearOp& a) {
  return LinearOp(a.src(), b.dst(), [a, b](const Key& k) -> std::optional<Block> {
    auto ra = a(k);
    if (!ra) return std::nullopt;
    if (ra->zero || ra->m.rows() == 0 || ra->m.is_zero()) return Block::zero_block();
    auto rb = b(ra->dst);
    if (!rb) return std::nullopt;
    if (rb->zero) return Block::zero_block();
    return Block{rb->dst, rb->m * ra->m, false};
  });
}

LinearOp product(const std::vector<LinearOp>& ops) {
  if (ops.empty()) throw std::invalid_argument("empty operator product");
  LinearOp r = ops.back();
  for (size_t i = ops.size() - 1; i-- > 0;) r = compose(ops[i], r);
  return r;
}

LinearOp lincomb(const std::vector<std::pair<Scalar, LinearOp>>& terms) {
  if (terms.empty()) throw std::invalid_argument("empty linear combination");
  const GradedSpace* src = terms.front().second.src();
  const GradedSpace* dst = terms.front().second.dst();
  return LinearOp(src, dst, [terms](const Key& k) -> std::optional<Block> {
    std::optional<Block> acc;
    for (const auto& [c, op] : terms) {
      if (c.is_zero()) continue;
      auto r = op(k);
      if (!r) return std::nullopt;
      if (r->zero) continue;
      if (!acc) {
        acc = Block{r->dst, r->m.scaled(c), false};
      } else {
        if (acc->dst != r->dst) throw std::logic_error("inhomogeneous operator sum at " + key_str(k));
        acc->m.axpy(c, r->m);
      }
    }
    if (!acc) return Block::zero_block();
    return acc;
  });
}

LinearOp operator+(const LinearOp& a, const LinearOp& b) { return lincomb({{Scalar(1), a}, {Scalar(1), b}}); }
LinearOp operator-(const LinearOp& a, const LinearOp& b) { return lincomb({{Scalar(1), a}, {Scalar(-1), b}}); }
LinearOp operator*(const Scalar& c, const LinearOp& a) { return lincomb({{c, a}}); }
LinearOp operator*(const LinearOp& b, const LinearOp& a) { return compose(b, a); }

LinearOp qcommutator(const LinearOp& a, const LinearOp& b, const Scalar& v) {
  return lincomb({{Scalar(1), compose(a, b)}, {-v, compose(b, a)}});
}

BlockVector act(const LinearOp& op, const BlockVector& v) {
  BlockVector out;
  for (const auto& [k, x] : v) {
    bool nz = false;
    for (const auto& c : x) nz = nz || !c.is_zero();
    if (!nz) continue;
    auto r = op(k);
    if (!r) throw TruncationOverflow("result leaves the truncation from block " + key_str(k));
    if (r->zero) continue;
    Vec y = r->m.apply(x);
    auto it = out.find(r->dst);
    if (it == out.end()) {
      out.emplace(r->dst, std::move(y));
    } else {
      for (size_t i = 0; i < y.size(); ++i) it->second[i] += y[i];
    }
  }
  return out;
}

BlockVector basis_vector(const GradedSpace& sp, const Key& k, size_t i) {
  auto d = sp.dim(k);
  if (!d || i >= *d) throw std::out_of_range("basis_vector: no such state");
  Vec v(*d);
  v[i] = 1;
  return {{k, v}};
}

bool is_zero(const BlockVector& v) {
  for (const auto& [k, x] : v) {
    for (const auto& c : x) {
      if (!c.is_zero()) return false;
    }
  }
  return true;
}

std::optional<BlockMatrix> act(const LinearOp& op, const BlockMatrix& m) {
  BlockMatrix out;
  for (const auto& [k, x] : m) {
    if (x.is_zero()) continue;
    auto r = op(k);
    if (!r) return std::nullopt;
    if (r->zero) continue;
    Matrix y = r->m * x;
    auto it = out.find(r->dst);
    if (it == out.end()) {
      out.emplace(r->dst, std::move(y));
    } else {
      it->second += y;
    }
  }
  return out;
}

void add_scaled(BlockMatrix& acc, const Scalar& c, const BlockMatrix& m) {
  for (const auto& [k, x] : m) {
    auto it = acc.find(k);
    if (it == acc.end()) {
      acc.emplace(k, x.scaled(c));
    } else {
      it->second.axpy(c, x);
    }
  }
}

bool is_zero(const BlockMatrix& m) {
  for (const auto& [k, x] : m) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace qaffine

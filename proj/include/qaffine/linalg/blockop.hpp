#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qaffine/linalg/matrix.hpp"

namespace qaffine {

// Block label inside a graded space; its meaning is fixed by the space.
using Key = std::array<int, 3>;

std::string key_str(const Key& k);

// Raised when a requested result lies beyond the truncation.
class TruncationOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/*
 * A direct sum of finite blocks. Blocks past the truncation are unknown
 * unless the space can prove they vanish.
 */
class GradedSpace {
 public:
  virtual ~GradedSpace() = default;
  // nullopt when the block is beyond the truncation and not known to be zero
  virtual std::optional<size_t> dim(const Key& k) const = 0;
  // retained nonzero blocks in the canonical order
  virtual std::vector<Key> blocks() const = 0;
  virtual std::string name() const = 0;
  virtual std::string state_label(const Key& k, size_t i) const;
};

// Image of one source block. zero == true means the map vanishes there and dst is irrelevant.
struct Block {
  Key dst{};
  Matrix m;
  bool zero = false;
  static Block zero_block() {
    Block b;
    b.zero = true;
    return b;
  }
};

/*
 * Linear map between graded spaces, homogeneous on blocks. Evaluated lazily and
 * memoized per source block; copies share the memo (write-once, thread safe).
 */
class LinearOp {
 public:
  using Fn = std::function<std::optional<Block>(const Key&)>;
  LinearOp() = default;
  LinearOp(const GradedSpace* src, const GradedSpace* dst, Fn fn);

  const GradedSpace* src() const { return src_; }
  const GradedSpace* dst() const { return dst_; }
  bool valid() const { return static_cast<bool>(state_); }
  std::optional<Block> operator()(const Key& k) const;

  static LinearOp zero(const GradedSpace* src, const GradedSpace* dst);
  static LinearOp identity(const GradedSpace* sp);
  // diagonal action by a scalar depending on the block only
  static LinearOp diagonal(const GradedSpace* sp, std::function<Scalar(const Key&)> f);

 private:
  struct State {
    Fn fn;
    std::mutex mu;
    std::map<Key, std::shared_ptr<const std::optional<Block>>> memo;
  };
  const GradedSpace* src_ = nullptr;
  const GradedSpace* dst_ = nullptr;
  std::shared_ptr<State> state_;
};

// b after a
LinearOp compose(const LinearOp& b, const LinearOp& a);
// products written left to right: ops[0] * ops[1] * ... (rightmost acts first)
LinearOp product(const std::vector<LinearOp>& ops);
LinearOp lincomb(const std::vector<std::pair<Scalar, LinearOp>>& terms);
LinearOp operator+(const LinearOp& a, const LinearOp& b);
LinearOp operator-(const LinearOp& a, const LinearOp& b);
LinearOp operator*(const Scalar& c, const LinearOp& a);
LinearOp operator*(const LinearOp& b, const LinearOp& a);
// [a, b]_v = ab - v ba
LinearOp qcommutator(const LinearOp& a, const LinearOp& b, const Scalar& v = Scalar(1));

// Vectors supported on several blocks.
using BlockVector = std::map<Key, Vec>;
// throws TruncationOverflow when a needed block is unknown
BlockVector act(const LinearOp& op, const BlockVector& v);
BlockVector basis_vector(const GradedSpace& sp, const Key& k, size_t i);
bool is_zero(const BlockVector& v);

// Several blocks sharing one column space; nullopt when a needed block is unknown.
using BlockMatrix = std::map<Key, Matrix>;
std::optional<BlockMatrix> act(const LinearOp& op, const BlockMatrix& m);
void add_scaled(BlockMatrix& acc, const Scalar& c, const BlockMatrix& m);
bool is_zero(const BlockMatrix& m);

}  // namespace qaffine

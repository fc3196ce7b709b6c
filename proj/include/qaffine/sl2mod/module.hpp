#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qaffine/linalg/blockop.hpp"

namespace qaffine::sl2 {

// lambda = m0 Lambda_0 + m1 Lambda_1
struct Weight {
  int m0 = 0;
  int m1 = 0;
  int level() const { return m0 + m1; }
  Weight flipped() const { return {m1, m0}; }
  std::string str() const;
  friend bool operator<(const Weight& a, const Weight& b) { return a.m0 != b.m0 ? a.m0 < b.m0 : a.m1 < b.m1; }
  friend bool operator==(const Weight& a, const Weight& b) { return a.m0 == b.m0 && a.m1 == b.m1; }
};

// f-monomial applied to v_lambda, outermost generator first
using Word = std::vector<uint8_t>;
std::string word_str(const Word& w);

/*
 * Truncated irreducible highest weight module V(lambda).
 * Block key (x, y, 0) is the weight space of lambda - x alpha_0 - y alpha_1; its degree is x.
 * All blocks with x <= depth are stored; blocks deeper than that are unknown unless
 * the weight is not a weight of V(lambda).
 */
class Module final : public GradedSpace {
 public:
  static std::shared_ptr<const Module> build(Weight lambda, int depth);

  Weight lambda() const { return lambda_; }
  int depth() const { return depth_; }
  int level() const { return lambda_.level(); }

  std::optional<size_t> dim(const Key& k) const override;
  std::vector<Key> blocks() const override;
  std::string name() const override;
  std::string state_label(const Key& k, size_t i) const override;

  int h0(const Key& k) const { return lambda_.m0 - 2 * k[0] + 2 * k[1]; }
  int h1(const Key& k) const { return lambda_.m1 + 2 * k[0] - 2 * k[1]; }
  // is lambda - x alpha_0 - y alpha_1 a weight of V(lambda)?
  bool is_weight(int x, int y) const;
  const Word& word(const Key& k, size_t i) const;
  size_t total_dim(int degree) const;

  // e_i from block src to src + alpha_i, f_i from src to src - alpha_i; null when the source is empty
  const Matrix* E(int i, const Key& src) const;
  const Matrix* F(int i, const Key& src) const;
  // coordinates of the word vector; nullopt when it leaves the truncation
  std::optional<std::pair<Key, Vec>> word_vector(const Word& w) const;

  nlohmann::ordered_json to_json() const;
  static std::shared_ptr<const Module> from_json(const nlohmann::ordered_json& j);
  static constexpr int kFormatVersion = 1;

 private:
  Module(Weight lambda, int depth) : lambda_(lambda), depth_(depth) {}
  void construct();
  struct Space {
    std::vector<Word> words;
    Matrix e[2];  // e_i: this block -> block + alpha_i
    Matrix f[2];  // f_i: this block -> block - alpha_i
  };
  const Space* space(const Key& k) const;

  Weight lambda_;
  int depth_;
  std::map<Key, Space> spaces_;  // nonzero blocks only
};

using ModulePtr = std::shared_ptr<const Module>;

// Builds or loads V(lambda) at the given depth; the cache directory may be empty (no caching).
ModulePtr load_or_build(Weight lambda, int depth, const std::string& cache_dir);

}  // namespace qaffine::sl2

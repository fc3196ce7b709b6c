#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qaffine/charoracle/freudenthal.hpp"
#include "qaffine/fockvo/fock.hpp"
#include "qaffine/sl2mod/ops.hpp"

namespace qaffine::sp4 {

using fock::FockState;
using fock::Half;
using sl2::Weight;

/*
 * The space V(j) = sum_p V(lambda_p) (x) F_p truncated at total degree N.
 * Total degree = sl2 depth + oscillator degree + c(p), where q^d v(p) = q^{-c(p)} v(p).
 * Blocks are keyed (D, h1, 2p): one block per degree and sp4 weight.
 */
class BigSpace final : public GradedSpace {
 public:
  // the family must have level 2 and depth >= depth
  BigSpace(int j, int depth, const sl2::Family& fam);

  int j() const { return j_; }
  int depth() const { return depth_; }
  const sl2::Family& family() const { return fam_; }

  // charges p with c(p) <= depth, ascending
  const std::vector<Half>& charges() const { return charges_; }
  bool has_charge(Half p) const;
  Weight weight_of(Half p) const;
  int charge_degree(Half p) const;

  static Key key(int degree, int h1, Half p) { return {degree, h1, p.twice}; }
  static Half charge(const Key& k) { return Half{k[2]}; }

  std::optional<size_t> dim(const Key& k) const override;
  std::vector<Key> blocks() const override;
  std::string name() const override;
  std::string state_label(const Key& k, size_t i) const override;

  // one sl2 weight space tensored with the Fock states completing the degree
  struct Part {
    int x = 0, y = 0;
    size_t mdim = 0;
    std::vector<FockState> fock;
    std::map<FockState, size_t, fock::FockOrder> fock_index;
    size_t offset = 0;  // state (i, f) sits at offset + i * fock.size() + f
  };
  // nullptr when the block is empty or beyond the truncation
  const std::vector<Part>* layout(const Key& k) const;
  // position of (module block (x, y), module state i) (x) fs inside block k
  std::optional<size_t> index(const Key& k, int x, size_t i, const FockState& fs) const;
  // target block of a module state of depth x and weight h1 with Fock state fs
  Key key_of(int x, int h1, const FockState& fs) const;

  // the designated highest weight vector
  Key top_key() const;
  BlockVector top_vector() const;
  // v_mu (x) v(p) with mu = weight_of(p)
  BlockVector extremal(Half p) const;

  // values on h_0, h_1, h_2 and root coordinates of the block weight Lambda_j - beta
  std::array<int, 3> h_values(const Key& k) const;
  chars::RootVec root_coords(const Key& k) const;

 private:
  int j_, depth_;
  const sl2::Family& fam_;
  std::vector<Half> charges_;
  std::map<Key, std::vector<Part>> layout_;
  std::map<Key, size_t> dims_;
};

}  // namespace qaffine::sp4

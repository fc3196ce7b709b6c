#pragma once

#include <json.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qaffine::chars {

enum class Type { A1, C2 };

// coordinates (x0, x1, x2) of a root-lattice element sum x_i alpha_i; A1 leaves x2 = 0
using RootVec = std::array<int, 3>;

/*
 * Affine Cartan data. alpha_0 is the affine node, (alpha_i, alpha_j) = d_i a_ij.
 * C2: alpha_1 short, alpha_2 long, (alpha_1, alpha_1) = 2, delta = alpha_0 + 2 alpha_1 + alpha_2.
 */
struct RootSystem {
  Type type;
  int rank;                           // number of affine nodes: 2 or 3
  std::vector<std::vector<int>> a;    // a[i][j] = alpha_j(h_i)
  std::vector<int> d;                 // (alpha_i, alpha_i) / 2
  RootVec delta;
  int imaginary_mult;                 // rank of the finite part
  std::vector<RootVec> finite_roots;  // all roots of the finite part, both signs, alpha_0 coefficient 0

  static RootSystem a1();
  static RootSystem c2();
  int form(const RootVec& u, const RootVec& v) const;
  std::string name() const;
};

struct PositiveRoot {
  RootVec root;
  int mult;
};

// all positive roots bounded componentwise by beta
std::vector<PositiveRoot> positive_roots_below(const RootSystem& rs, const RootVec& beta);

/*
 * mult(Lambda - beta) for every beta with x0 <= depth. Lambda is given by its values on h_0..h_rank-1.
 * Weyl vector: rho(h_i) = 1 for every node.
 */
struct Table {
  Type type;
  std::vector<int> lambda;
  int depth = 0;
  std::map<RootVec, int64_t> mult;  // nonzero entries only
  int64_t at(const RootVec& beta) const;
  // sum over all weights of a degree
  int64_t degree_total(int x0) const;
  std::string tsv() const;
  nlohmann::ordered_json to_json() const;
};

// root_order_seed shuffles the positive-root enumeration (the result must not depend on it)
Table freudenthal(const RootSystem& rs, const std::vector<int>& lambda, int depth,
                  std::optional<uint64_t> root_order_seed = std::nullopt);

struct Diff {
  bool equal = true;
  int common_depth = 0;
  bool depth_mismatch = false;
  std::vector<std::pair<RootVec, std::pair<int64_t, int64_t>>> witnesses;  // first discrepancy only
  std::string str() const;
};
Diff compare(const Table& a, const Table& b);

std::string weight_label(Type type, const std::vector<int>& lambda, const RootVec& beta);

}  // namespace qaffine::chars

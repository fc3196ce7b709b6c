#pragma once

#include <json.hpp>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "qaffine/linalg/blockop.hpp"

namespace qaffine {

struct Witness {
  std::string state;  // source basis state
  std::string modes;  // mode tuple of the failing instance
  std::string entry;  // nonzero entry of lhs - rhs, with its target row
};

struct RelationEntry {
  std::string id;
  std::string window;
  size_t instances = 0;       // mode tuples examined
  size_t states_checked = 0;  // source states on which the identity was evaluated
  size_t blocks_skipped = 0;  // source blocks whose evaluation left the truncation
  bool pass = true;
  std::optional<Witness> witness;
  std::string note;
  double seconds = 0;

  // true when nothing was actually evaluated
  bool vacuous() const { return states_checked == 0; }
  void fail(Witness w) {
    if (pass) witness = std::move(w);
    pass = false;
  }
  // Checks op == 0 on the given source blocks, skipping blocks outside the truncation.
  void check_zero(const LinearOp& op, const std::vector<Key>& blocks, const std::string& modes);
  // records a yes/no fact computed elsewhere
  void check(bool ok, const std::string& state, const std::string& modes, const std::string& what);
};

struct RelationReport {
  std::string suite;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::deque<RelationEntry> entries;  // references from add() stay valid

  bool pass() const;
  RelationEntry& add(const std::string& id, const std::string& window);
  void append(const RelationReport& other);
  nlohmann::ordered_json to_json(bool with_timing = false) const;
};

}  // namespace qaffine

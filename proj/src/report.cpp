#include "qaffine/report.hpp"

namespace qaffine {

void RelationEntry::check_zero(const LinearOp& op, const std::vector<Key>& blocks, const std::string& modes) {
  ++instances;
  for (const auto& k : blocks) {
    auto r = op(k);
    if (!r) {
      ++blocks_skipped;
      continue;
    }
    auto d = op.src()->dim(k);
    const size_t n = d ? *d : 0;
    states_checked += n;
    if (r->zero || !pass) continue;
    const Matrix& m = r->m;
    for (size_t j = 0; j < m.cols() && pass; ++j) {
      for (size_t i = 0; i < m.rows(); ++i) {
        if (m(i, j).is_zero()) continue;
        fail({op.src()->state_label(k, j), modes,
              op.dst()->state_label(r->dst, i) + ": " + m(i, j).str()});
        break;
      }
    }
  }
}

void RelationEntry::check(bool ok, const std::string& state, const std::string& modes, const std::string& what) {
  ++instances;
  ++states_checked;
  if (!ok) fail({state, modes, what});
}

bool RelationReport::pass() const {
  for (const auto& e : entries) {
    if (!e.pass) return false;
  }
  return true;
}

RelationEntry& RelationReport::add(const std::string& id, const std::string& window) {
  entries.push_back(RelationEntry{});
  entries.back().id = id;
  entries.back().window = window;
  return entries.back();
}

void RelationReport::append(const RelationReport& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

nlohmann::ordered_json RelationReport::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["config"] = config;
  j["pass"] = pass();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json x;
    x["id"] = e.id;
    x["window"] = e.window;
    x["instances"] = e.instances;
    x["states_checked"] = e.states_checked;
    x["blocks_skipped"] = e.blocks_skipped;
    x["pass"] = e.pass;
    if (e.witness) {
      x["witness"] = {{"state", e.witness->state}, {"modes", e.witness->modes}, {"lhs_minus_rhs", e.witness->entry}};
    }
    if (!e.note.empty()) x["note"] = e.note;
    if (with_timing) x["seconds"] = e.seconds;
    arr.push_back(std::move(x));
  }
  j["relations"] = std::move(arr);
  return j;
}

}  // namespace qaffine

#include "qaffine/spfour/bigspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace qaffine::sp4 {

BigSpace::BigSpace(int j, int depth, const sl2::Family& fam) : j_(j), depth_(depth), fam_(fam) {
  if (j < 0 || j > 2) throw std::invalid_argument("V(j) needs j in {0, 1, 2}");
  if (fam.level() != 2 || fam.depth() < depth) throw std::invalid_argument("BigSpace needs a level 2 family of enough depth");
  for (int t = -2 * depth - 6; t <= 2 * depth + 6; ++t) {
    const Half p{t};
    if ((j == 1) == p.integral()) continue;
    if (charge_degree(p) <= depth) charges_.push_back(p);
  }
  for (Half p : charges_) {
    const int cp = charge_degree(p);
    const Weight w = weight_of(p);
    const auto mod = fam.module(w);
    std::vector<FockState> basis = fock::fock_basis(p, depth - cp);
    for (const Key& mk : mod->blocks()) {
      const int x = mk[0];
      if (x + cp > depth) continue;
      for (int m = 0; x + m + cp <= depth; ++m) {
        Part part;
        part.x = x;
        part.y = mk[1];
        part.mdim = *mod->dim(mk);
        for (const auto& fs : basis) {
          if (fs.degree() == m) {
            part.fock_index[fs] = part.fock.size();
            part.fock.push_back(fs);
          }
        }
        if (part.mdim == 0 || part.fock.empty()) continue;
        layout_[key(x + m + cp, mod->h1(mk), p)].push_back(std::move(part));
      }
    }
  }
  for (auto& [k, parts] : layout_) {
    std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) { return a.x < b.x; });
    size_t off = 0;
    for (auto& part : parts) {
      part.offset = off;
      off += part.mdim * part.fock.size();
    }
    dims_[k] = off;
  }
}

bool BigSpace::has_charge(Half p) const { return std::find(charges_.begin(), charges_.end(), p) != charges_.end(); }

Weight BigSpace::weight_of(Half p) const {
  if (j_ == 1) return {1, 1};
  const bool even = p.integral() && p.floor() % 2 == 0;
  return (even == (j_ == 0)) ? Weight{2, 0} : Weight{0, 2};
}

int BigSpace::charge_degree(Half p) const {
  const int t = p.twice;
  if (j_ == 1) return (t * t - 1) / 8;
  const int n = t / 2;
  if (n % 2 == 0) return n * n / 2;
  return j_ == 0 ? (n * n + 1) / 2 : (n * n - 1) / 2;
}

std::optional<size_t> BigSpace::dim(const Key& k) const {
  if (k[0] < 0) return 0;
  if (k[0] > depth_) return std::nullopt;
  auto it = dims_.find(k);
  return it == dims_.end() ? 0 : it->second;
}

std::vector<Key> BigSpace::blocks() const {
  std::vector<Key> out;
  for (const auto& [k, d] : dims_) out.push_back(k);
  return out;
}

std::string BigSpace::name() const { return "V(" + std::to_string(j_) + ")"; }

std::string BigSpace::state_label(const Key& k, size_t i) const {
  const auto* parts = layout(k);
  if (!parts) return "?";
  for (const auto& part : *parts) {
    const size_t n = part.mdim * part.fock.size();
    if (i >= part.offset + n) continue;
    const size_t r = i - part.offset;
    const Key mk{part.x, part.y, 0};
    const auto mod = fam_.module(weight_of(charge(k)));
    return mod->state_label(mk, r / part.fock.size()) + " (x) " + part.fock[r % part.fock.size()].str();
  }
  return "?";
}

const std::vector<BigSpace::Part>* BigSpace::layout(const Key& k) const {
  auto it = layout_.find(k);
  return it == layout_.end() ? nullptr : &it->second;
}

std::optional<size_t> BigSpace::index(const Key& k, int x, size_t i, const FockState& fs) const {
  const auto* parts = layout(k);
  if (!parts) return std::nullopt;
  for (const auto& part : *parts) {
    if (part.x != x) continue;
    auto it = part.fock_index.find(fs);
    if (it == part.fock_index.end() || i >= part.mdim) return std::nullopt;
    return part.offset + i * part.fock.size() + it->second;
  }
  return std::nullopt;
}

Key BigSpace::key_of(int x, int h1, const FockState& fs) const {
  return key(x + fs.degree() + charge_degree(fs.charge), h1, fs.charge);
}

Key BigSpace::top_key() const {
  const Half p = j_ == 0 ? Half::whole(0) : j_ == 1 ? Half{-1} : Half::whole(-1);
  const Weight w = weight_of(p);
  return key(charge_degree(p), w.m1, p);
}

BlockVector BigSpace::extremal(Half p) const {
  const Weight w = weight_of(p);
  const Key k = key(charge_degree(p), w.m1, p);
  auto i = index(k, 0, 0, FockState{{}, p});
  if (!i) throw TruncationOverflow("v(" + p.str() + ") lies beyond the truncation");
  return basis_vector(*this, k, *i);
}

BlockVector BigSpace::top_vector() const { return extremal(charge(top_key())); }

std::array<int, 3> BigSpace::h_values(const Key& k) const {
  const int h1 = k[1];
  const int h2 = -(k[2] + h1) / 2;
  return {1 - h1 - h2, h1, h2};
}

chars::RootVec BigSpace::root_coords(const Key& k) const {
  const auto h = h_values(k);
  const int d1 = j_ == 1, d2 = j_ == 2;
  const int x0 = k[0];
  const int x1 = d1 + d2 + 2 * x0 - h[1] - h[2];
  const int t = d2 + x1 - h[2];
  if (t % 2) throw std::logic_error("weight off the root lattice at " + key_str(k));
  return {x0, x1, t / 2};
}

}  // namespace qaffine::sp4

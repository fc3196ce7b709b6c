#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "qaffine/fockvo/suites.hpp"
#include "qaffine/intertwine/suites.hpp"
#include "qaffine/sl2mod/suites.hpp"
#include "qaffine/spfour/suites.hpp"

using namespace qaffine;

namespace {

// pass and non-vacuous; the first offending entry goes to why
bool good(const RelationReport& r, std::string& why) {
  for (const auto& e : r.entries) {
    if (!e.pass) {
      why = r.suite + " " + r.config.dump() + ": " + e.id;
      if (e.witness) why += " at " + e.witness->state + " " + e.witness->modes + " " + e.witness->entry;
      return false;
    }
    if (e.vacuous()) {
      why = r.suite + " " + r.config.dump() + ": nothing checked for " + e.id;
      return false;
    }
  }
  return true;
}

struct Tally {
  bool ok = true;
  size_t relations = 0, states = 0;
  std::string why;
  void add(const RelationReport& r) {
    relations += r.entries.size();
    for (const auto& e : r.entries) states += e.states_checked;
    std::string w;
    if (!good(r, w) && ok) {
      ok = false;
      why = w;
    }
  }
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<void(Tally&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Tally t;
  try {
    body(t);
  } catch (const std::exception& e) {
    t.require(false, std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!t.ok) ++failures;
  std::ostringstream os;
  os << (t.ok ? "PASS" : "FAIL") << " " << n << " " << title << " [" << t.relations << " relations, " << t.states
     << " states, ";
  os.precision(1);
  os << std::fixed << s << " s]";
  if (!t.ok) os << " " << t.why;
  std::cout << os.str() << std::endl;
}

}  // namespace

int main() {
  criterion(1, "q-exponential inverse to order 12", [](Tally& t) {
    auto r = fock::qexp_inverse_suite(12);
    t.add(r);
  });

  criterion(2, "normal ordering: 4 general-l, 4 Omega and 13 level 2 identities to order 12", [](Tally& t) {
    auto r = fock::normal_ordering_suite(12);
    t.add(r);
    t.require(r.entries.size() == 21, "expected 21 identities, got " + std::to_string(r.entries.size()));
  });

  criterion(3, "log identity with product step q^4 to order 12, l = 1..3", [](Tally& t) {
    auto r = fock::log_identity_suite(12);
    t.add(r);
  });

  criterion(4, "sl2 multiplicities and Drinfeld relations (|k| <= 3) at depth 6", [](Tally& t) {
    sl2::Family fam(2, 6);
    for (auto w : fam.weights()) t.add(sl2::module_suite(fam, w));
    for (auto w : fam.weights()) t.add(sl2::drinfeld_suite(fam, w, 3));
  });

  criterion(5, "the seven S_i relations and the Dhat suite at depth 5", [](Tally& t) {
    sl2::Family fam(2, 5);
    for (auto w : fam.weights()) {
      t.add(sl2::reflection_suite(fam, w));
      t.add(sl2::dhat_suite(fam, w, 3));
    }
  });

  criterion(6, "type I and type II intertwiners, l = 2, all lambda, depth 5, with the q^d constant", [](Tally& t) {
    sl2::Family fam(2, 5);
    iw::Intertwiners I(fam);
    for (auto w : fam.weights()) {
      t.add(iw::intertwiner_suite(I, iw::Kind::TypeI, w, 2));
      t.add(iw::intertwiner_suite(I, iw::Kind::TypeII, w, 2));
    }
  });

  criterion(7, "sp4 relations on V(j), depth 4, |k| <= 3; Serre windows {-1,0,1} and {-2..2}", [](Tally& t) {
    sl2::Family fam(2, 4);
    iw::Intertwiners I(fam);
    for (int j = 0; j < 3; ++j) {
      sp4::BigSpace S(j, 4, fam);
      sp4::Sp4Action A(S, I);
      t.add(sp4::relations_suite(A, 3));
      t.add(sp4::y_ops_suite(A, 3));
      t.add(sp4::serre_suite(A, {-1, 0, 1}, {-2, -1, 0, 1, 2}));
    }
  });

  criterion(8, "highest weight vectors, the x-(0) Phi0 x-(1) identity and the six linkings", [](Tally& t) {
    sl2::Family fam(2, 4);
    iw::Intertwiners I(fam);
    for (auto w : fam.weights()) t.add(iw::lemma61_suite(I, w));
    std::map<std::string, size_t> used;
    for (int j = 0; j < 3; ++j) {
      sp4::BigSpace S(j, 4, fam);
      sp4::Sp4Action A(S, I);
      t.add(sp4::highest_weight_suite(A));
      // a linking only applies where its source module occurs, so single entries may be empty
      auto r = sp4::linking_suite(A);
      t.relations += r.entries.size();
      for (const auto& e : r.entries) {
        t.states += e.states_checked;
        used[e.id] += e.states_checked;
        t.require(e.pass, "V(" + std::to_string(j) + "): " + e.id + (e.witness ? " " + e.witness->entry : ""));
      }
    }
    t.require(used.size() == 6, "expected six linkings");
    for (const auto& [id, n] : used) t.require(n > 0, "never exercised: " + id);
  });

  criterion(9, "characters of V(j) equal the C2 oracle at depth 5", [](Tally& t) {
    sl2::Family fam(2, 5);
    for (int j = 0; j < 3; ++j) {
      sp4::BigSpace S(j, 5, fam);
      t.add(sp4::character_suite(S));
    }
  });

  criterion(10, "reports are byte-identical across runs", [](Tally& t) {
    size_t entries = 0, states = 0;
    auto dump = [&](const RelationReport& r) {
      entries += r.entries.size();
      for (const auto& e : r.entries) states += e.states_checked;
      return r.to_json().dump();
    };
    auto once = [&] {
      std::string s = dump(fock::normal_ordering_suite(8));
      sl2::Family fam(2, 3);
      iw::Intertwiners I(fam);
      for (auto w : fam.weights()) {
        s += dump(sl2::dhat_suite(fam, w, 2));
        s += dump(iw::intertwiner_suite(I, iw::Kind::TypeII, w, 1));
      }
      for (int j = 0; j < 3; ++j) {
        sp4::BigSpace S(j, 3, fam);
        sp4::Sp4Action A(S, I);
        s += dump(sp4::relations_suite(A, 1));
        s += dump(sp4::linking_suite(A));
        s += dump(sp4::character_suite(S));
      }
      return s;
    };
    const std::string a = once(), b = once();
    t.relations = entries / 2;
    t.states = states / 2;
    t.require(!a.empty() && a == b, "reports differ between runs");
  });

  return failures == 0 ? 0 : 1;
}

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "qaffine/charoracle/freudenthal.hpp"
#include "qaffine/fockvo/suites.hpp"
#include "qaffine/intertwine/suites.hpp"
#include "qaffine/sl2mod/suites.hpp"
#include "qaffine/spfour/suites.hpp"

using namespace qaffine;
using json = nlohmann::ordered_json;

namespace {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string suite;
  std::string space = "all";
  std::string lambda = "all";
  int level = 2;
  int depth = 3;
  int window = -1;  // suite default
  int order = 12;
  std::string format = "json";
  int jobs = 1;
  uint64_t seed = 0;
  std::string cache_dir;
  std::string out;
  bool timing = false;
};

const std::vector<std::string> kSuites{"sl2-module",   "sl2-drinfeld",  "s-reflection",  "dhat",
                                       "qexp",         "log-identity",  "normal-ordering", "omega",
                                       "intertwiner-I", "intertwiner-II", "lemma-61",      "y-ops",
                                       "sp4-relations", "sp4-serre",    "highest-weight", "lemma-linking",
                                       "chars"};

int default_window(const std::string& suite) {
  if (suite == "sp4-relations") return 3;
  return 2;
}

std::vector<sl2::Weight> level_weights(int level) {
  std::vector<sl2::Weight> out;
  for (int m0 = level; m0 >= 0; --m0) out.push_back({m0, level - m0});
  return out;
}

std::vector<sl2::Weight> parse_lambda(const std::string& s, int level) {
  if (s == "all") return level_weights(level);
  if (s.find(',') != std::string::npos) {
    std::istringstream is(s);
    int m0 = 0, m1 = 0;
    char c = 0;
    if (!(is >> m0 >> c >> m1) || c != ',' || m0 < 0 || m1 < 0) throw ConfigError("bad --lambda " + s);
    if (m0 + m1 != level) throw ConfigError("--lambda " + s + " is not of level " + std::to_string(level));
    return {{m0, m1}};
  }
  for (const auto& w : level_weights(level)) {
    if (w.str() == s) return {w};
  }
  throw ConfigError("bad --lambda " + s + " for level " + std::to_string(level));
}

std::vector<int> parse_space(const std::string& s) {
  if (s == "all") return {0, 1, 2};
  if (s == "0" || s == "1" || s == "2") return {s[0] - '0'};
  throw ConfigError("--space must be 0, 1, 2 or all");
}

// shared objects, built on first use
struct Context {
  const Options& o;
  std::mutex mu;
  std::map<int, std::unique_ptr<sl2::Family>> fams;
  std::map<int, std::unique_ptr<iw::Intertwiners>> iws;
  std::map<int, std::unique_ptr<sp4::BigSpace>> spaces;
  std::map<int, std::unique_ptr<sp4::Sp4Action>> actions;

  explicit Context(const Options& x) : o(x) {}
  sl2::Family& fam(int level) {
    std::lock_guard<std::mutex> g(mu);
    auto& f = fams[level];
    if (!f) f = std::make_unique<sl2::Family>(level, o.depth, o.cache_dir);
    return *f;
  }
  iw::Intertwiners& inter(int level) {
    sl2::Family& f = fam(level);
    std::lock_guard<std::mutex> g(mu);
    auto& i = iws[level];
    if (!i) i = std::make_unique<iw::Intertwiners>(f);
    return *i;
  }
  sp4::BigSpace& space(int j) {
    sl2::Family& f = fam(2);
    std::lock_guard<std::mutex> g(mu);
    auto& s = spaces[j];
    if (!s) s = std::make_unique<sp4::BigSpace>(j, o.depth, f);
    return *s;
  }
  sp4::Sp4Action& action(int j) {
    sp4::BigSpace& s = space(j);
    iw::Intertwiners& i = inter(2);
    std::lock_guard<std::mutex> g(mu);
    auto& a = actions[j];
    if (!a) a = std::make_unique<sp4::Sp4Action>(s, i);
    return *a;
  }
};

using Task = std::function<RelationReport()>;

std::vector<Task> plan(const Options& o, Context& ctx) {
  const std::string& s = o.suite;
  const int w = o.window;
  std::vector<Task> tasks;
  if (s == "qexp") return {[&o] { return fock::qexp_inverse_suite(o.order); }};
  if (s == "log-identity") return {[&o] { return fock::log_identity_suite(o.order); }};
  if (s == "normal-ordering") return {[&o] { return fock::normal_ordering_suite(o.order); }};
  if (s == "omega") return {[&o] { return fock::omega_suite(o.order); }};

  if (s == "sl2-module" || s == "sl2-drinfeld" || s == "s-reflection" || s == "dhat" || s == "intertwiner-I" ||
      s == "intertwiner-II" || s == "lemma-61") {
    if (s == "lemma-61" && o.level != 2) throw ConfigError("lemma-61 needs --level 2");
    for (auto lam : parse_lambda(o.lambda, o.level)) {
      const int l = o.level;
      if (s == "sl2-module") tasks.push_back([&ctx, l, lam] { return sl2::module_suite(ctx.fam(l), lam); });
      if (s == "sl2-drinfeld") tasks.push_back([&ctx, l, lam, w] { return sl2::drinfeld_suite(ctx.fam(l), lam, w); });
      if (s == "s-reflection") tasks.push_back([&ctx, l, lam] { return sl2::reflection_suite(ctx.fam(l), lam); });
      if (s == "dhat") tasks.push_back([&ctx, l, lam, w] { return sl2::dhat_suite(ctx.fam(l), lam, w); });
      if (s == "intertwiner-I" || s == "intertwiner-II") {
        const auto kind = s == "intertwiner-I" ? iw::Kind::TypeI : iw::Kind::TypeII;
        tasks.push_back([&ctx, l, lam, w, kind] { return iw::intertwiner_suite(ctx.inter(l), kind, lam, w); });
      }
      if (s == "lemma-61") tasks.push_back([&ctx, lam] { return iw::lemma61_suite(ctx.inter(2), lam); });
    }
    return tasks;
  }

  for (int j : parse_space(o.space)) {
    if (s == "y-ops") tasks.push_back([&ctx, j, w] { return sp4::y_ops_suite(ctx.action(j), w); });
    if (s == "sp4-relations") tasks.push_back([&ctx, j, w] { return sp4::relations_suite(ctx.action(j), w); });
    if (s == "sp4-serre") {
      std::vector<int> quartic, cubic;
      for (int k = -(w - 1); k <= w - 1; ++k) quartic.push_back(k);
      for (int k = -w; k <= w; ++k) cubic.push_back(k);
      tasks.push_back([&ctx, j, quartic, cubic] { return sp4::serre_suite(ctx.action(j), quartic, cubic); });
    }
    if (s == "highest-weight") tasks.push_back([&ctx, j] { return sp4::highest_weight_suite(ctx.action(j)); });
    if (s == "lemma-linking") tasks.push_back([&ctx, j] { return sp4::linking_suite(ctx.action(j)); });
    if (s == "chars") tasks.push_back([&ctx, j] { return sp4::character_suite(ctx.space(j)); });
  }
  return tasks;
}

// results in task order whatever the number of workers
std::vector<RelationReport> run(const std::vector<Task>& tasks, int jobs) {
  std::vector<RelationReport> out(tasks.size());
  std::vector<std::exception_ptr> errs(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < tasks.size();) {
      try {
        out[i] = tasks[i]();
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errs) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::string tsv_cell(std::string s) {
  for (char& c : s) {
    if (c == '\t' || c == '\n') c = ' ';
  }
  return s;
}

std::string to_tsv(const std::vector<RelationReport>& reps, bool timing) {
  std::ostringstream os;
  os << "suite\tconfig\trelation\twindow\tinstances\tstates_checked\tblocks_skipped\tpass\twitness\tnote";
  if (timing) os << "\tseconds";
  os << '\n';
  for (const auto& r : reps) {
    for (const auto& e : r.entries) {
      std::string wit;
      if (e.witness) wit = e.witness->state + " | " + e.witness->modes + " | " + e.witness->entry;
      os << r.suite << '\t' << r.config.dump() << '\t' << tsv_cell(e.id) << '\t' << tsv_cell(e.window) << '\t'
         << e.instances << '\t' << e.states_checked << '\t' << e.blocks_skipped << '\t' << (e.pass ? "PASS" : "FAIL")
         << '\t' << tsv_cell(wit) << '\t' << tsv_cell(e.note);
      if (timing) os << '\t' << e.seconds;
      os << '\n';
    }
  }
  return os.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + out);
  f << text;
}

int cmd_verify(Options o) {
  if (std::find(kSuites.begin(), kSuites.end(), o.suite) == kSuites.end()) throw ConfigError("unknown suite " + o.suite);
  if (o.window < 0) o.window = default_window(o.suite);
  if (o.suite == "sp4-serre" && o.window < 1) throw ConfigError("sp4-serre needs --window >= 1");
  Context ctx(o);
  auto tasks = plan(o, ctx);
  auto reps = run(tasks, o.jobs);
  bool pass = true;
  for (const auto& r : reps) pass = pass && r.pass();

  if (o.format == "tsv") {
    emit(to_tsv(reps, o.timing), o.out);
  } else {
    json j;
    j["command"] = "verify";
    j["config"] = {{"suite", o.suite}, {"space", o.space}, {"lambda", o.lambda}, {"level", o.level},
                   {"depth", o.depth}, {"window", o.window}, {"order", o.order}, {"seed", o.seed}};
    j["pass"] = pass;
    auto arr = json::array();
    for (const auto& r : reps) arr.push_back(r.to_json(o.timing));
    j["reports"] = std::move(arr);
    emit(j.dump(2) + "\n", o.out);
  }
  size_t n = 0;
  for (const auto& r : reps) n += r.entries.size();
  std::cerr << o.suite << ": " << (pass ? "PASS" : "FAIL") << " (" << n << " relations)\n";
  return pass ? 0 : 1;
}

struct CharOptions {
  int space = 0;
  int depth = 3;
  std::string oracle_only;
  int level = 1;
  std::string lambda;
  std::string format = "tsv";
  std::string out_dir;
  std::string cache_dir;
  uint64_t seed = 0;
};

std::vector<std::vector<int>> dominant(chars::Type t, int level) {
  std::vector<std::vector<int>> out;
  if (t == chars::Type::A1) {
    for (int m0 = level; m0 >= 0; --m0) out.push_back({m0, level - m0});
    return out;
  }
  for (int a = level; a >= 0; --a) {
    for (int b = level - a; b >= 0; --b) out.push_back({a, b, level - a - b});
  }
  return out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> v;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      v.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ConfigError("bad integer list " + s);
    }
  }
  return v;
}

int cmd_oracle(const CharOptions& o) {
  chars::Type t;
  if (o.oracle_only == "c2") {
    t = chars::Type::C2;
  } else if (o.oracle_only == "a1") {
    t = chars::Type::A1;
  } else {
    throw ConfigError("--oracle-only takes c2 or a1");
  }
  const auto rs = t == chars::Type::C2 ? chars::RootSystem::c2() : chars::RootSystem::a1();
  std::vector<std::vector<int>> lams;
  if (o.lambda.empty()) {
    if (o.level < 0) throw ConfigError("--level must be >= 0");
    lams = dominant(t, o.level);
  } else {
    lams = {parse_ints(o.lambda)};
    const auto& l = lams[0];
    if (static_cast<int>(l.size()) != rs.rank) throw ConfigError("--lambda needs " + std::to_string(rs.rank) + " entries");
    for (int v : l) {
      if (v < 0) throw ConfigError("--lambda must be dominant");
    }
  }
  json arr = json::array();
  std::string tsv;
  for (const auto& l : lams) {
    auto tab = chars::freudenthal(rs, l, o.depth, o.seed ? std::optional<uint64_t>(o.seed) : std::nullopt);
    arr.push_back(tab.to_json());
    std::string name;
    for (int v : l) name += (name.empty() ? "" : ",") + std::to_string(v);
    tsv += "# " + rs.name() + " lambda=(" + name + ")\n" + tab.tsv();
  }
  if (o.format == "json") {
    emit(json{{"command", "chars"}, {"oracle", arr}}.dump(2) + "\n", "");
  } else {
    emit(tsv, "");
  }
  return 0;
}

int cmd_chars(const CharOptions& o) {
  if (!o.oracle_only.empty()) return cmd_oracle(o);
  if (o.space < 0 || o.space > 2) throw ConfigError("--space must be 0, 1 or 2");
  sl2::Family fam(2, o.depth, o.cache_dir);
  sp4::BigSpace S(o.space, o.depth, fam);
  const auto mine = sp4::character(S);
  std::vector<int> lam(3, 0);
  lam[o.space] = 1;
  const auto oracle = chars::freudenthal(chars::RootSystem::c2(), lam, o.depth);
  const auto diff = chars::compare(mine, oracle);

  // V(lambda_p) (x) F_p by total degree
  json branch = json::array();
  std::ostringstream btsv;
  btsv << "charge\tlambda\tc(p)\tdims by degree\n";
  for (auto p : S.charges()) {
    std::vector<int64_t> dims(o.depth + 1, 0);
    for (const auto& k : S.blocks()) {
      if (sp4::BigSpace::charge(k) == p) dims[k[0]] += static_cast<int64_t>(*S.dim(k));
    }
    branch.push_back({{"charge", p.str()}, {"lambda", S.weight_of(p).str()}, {"c", S.charge_degree(p)}, {"dims", dims}});
    btsv << p.str() << '\t' << S.weight_of(p).str() << '\t' << S.charge_degree(p) << '\t';
    for (size_t d = 0; d < dims.size(); ++d) btsv << (d ? " " : "") << dims[d];
    btsv << '\n';
  }

  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    auto put = [&](const std::string& name, const std::string& text) {
      std::ofstream f(std::filesystem::path(o.out_dir) / name, std::ios::binary);
      if (!f) throw ConfigError("cannot write into " + o.out_dir);
      f << text;
    };
    put("constructed.tsv", mine.tsv());
    put("oracle.tsv", oracle.tsv());
    put("diff.txt", diff.str() + "\n");
    put("branching.tsv", btsv.str());
  }
  if (o.format == "json") {
    json j;
    j["command"] = "chars";
    j["config"] = {{"space", o.space}, {"depth", o.depth}};
    j["equal"] = diff.equal;
    j["diff"] = diff.str();
    j["constructed"] = mine.to_json();
    j["oracle"] = oracle.to_json();
    j["branching"] = branch;
    emit(j.dump(2) + "\n", "");
  } else {
    emit(mine.tsv(), "");
  }
  std::cerr << "V(" << o.space << ") depth " << o.depth << ": " << (diff.equal ? "equal to the oracle" : diff.str()) << "\n";
  return diff.equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qaffine: exact checks for level 2 sl2-hat modules, their intertwiners and the level 1 sp4-hat construction"};
  app.require_subcommand(1);

  Options vo;
  auto* verify = app.add_subcommand("verify", "run a verification suite; exit 0 pass, 1 fail, 2 bad config");
  std::string suites;
  for (const auto& s : kSuites) suites += (suites.empty() ? "" : ", ") + s;
  verify->add_option("--suite", vo.suite, "one of: " + suites)->required();
  verify->add_option("--space", vo.space, "j for V(j): 0, 1, 2 or all")->capture_default_str();
  verify->add_option("--lambda", vo.lambda, "sl2 weight: 2L0, L0+L1, 2L1, m0,m1 or all")->capture_default_str();
  verify->add_option("--level", vo.level, "sl2 level for the sl2 and intertwiner suites")->capture_default_str()->check(CLI::Range(1, 8));
  verify->add_option("--depth", vo.depth, "truncation depth N")->capture_default_str()->check(CLI::Range(0, 12));
  verify->add_option("--window", vo.window, "mode window |k| <= w (default 3 for sp4-relations, else 2; sp4-serre uses |k| <= w-1 quartic, |k| <= w cubic)")
      ->check(CLI::Range(0, 12));
  verify->add_option("--order", vo.order, "series order")->capture_default_str()->check(CLI::Range(0, 40));
  verify->add_option("--format", vo.format, "json or tsv")->capture_default_str()->check(CLI::IsMember({"json", "tsv"}));
  verify->add_option("--jobs", vo.jobs, "worker threads")->capture_default_str()->check(CLI::Range(1, 256));
  verify->add_option("--seed", vo.seed, "seed recorded in the report")->capture_default_str();
  verify->add_option("--cache-dir", vo.cache_dir, "module cache directory")->envname("QAFFINE_CACHE_DIR");
  verify->add_option("--out", vo.out, "write the report here instead of stdout");
  verify->add_flag("--timing", vo.timing, "include wall times (reports stop being reproducible)");

  CharOptions co;
  auto* chars_cmd = app.add_subcommand("chars", "character of V(j) against the C2 oracle, or the oracle alone");
  chars_cmd->add_option("--space", co.space, "j for V(j)")->capture_default_str();
  chars_cmd->add_option("--depth", co.depth, "truncation depth N")->capture_default_str()->check(CLI::Range(0, 12));
  chars_cmd->add_option("--oracle-only", co.oracle_only, "c2 or a1: print Freudenthal tables only");
  chars_cmd->add_option("--level", co.level, "level for --oracle-only")->capture_default_str();
  chars_cmd->add_option("--lambda", co.lambda, "h-values for --oracle-only, e.g. 0,1,0");
  chars_cmd->add_option("--format", co.format, "tsv or json")->capture_default_str()->check(CLI::IsMember({"json", "tsv"}));
  chars_cmd->add_option("--out-dir", co.out_dir, "also write constructed.tsv, oracle.tsv, diff.txt, branching.tsv");
  chars_cmd->add_option("--cache-dir", co.cache_dir, "module cache directory")->envname("QAFFINE_CACHE_DIR");
  chars_cmd->add_option("--seed", co.seed, "shuffles the oracle's root enumeration when nonzero")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    if (*verify) return cmd_verify(vo);
    return cmd_chars(co);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    // cache mismatch and friends
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

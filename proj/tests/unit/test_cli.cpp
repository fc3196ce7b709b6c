#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const char* exe = std::getenv("QAFFINE_CLI");
  REQUIRE(exe != nullptr);
  const std::string cmd = std::string(exe) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

nlohmann::ordered_json parse(const Run& r) { return nlohmann::ordered_json::parse(r.out); }

}  // namespace

TEST_CASE("normal-ordering lists 4 + 4 + 13 identities") {
  auto r = run("verify --suite normal-ordering --order 12");
  CHECK(r.code == 0);
  auto j = parse(r);
  CHECK(j["pass"] == true);
  REQUIRE(j["reports"].size() == 1);
  CHECK(j["reports"][0]["relations"].size() == 21);
  CHECK(j["config"]["seed"] == 0);
}

TEST_CASE("highest-weight on V(1) at depth 4") {
  auto r = run("verify --suite highest-weight --space 1 --depth 4");
  CHECK(r.code == 0);
  auto j = parse(r);
  CHECK(j["pass"] == true);
  CHECK(j["reports"][0]["config"]["j"] == 1);
}

TEST_CASE("sp4-serre on V(0) at depth 4, window 2") {
  auto r = run("verify --suite sp4-serre --space 0 --depth 4 --window 2 --jobs 2");
  CHECK(r.code == 0);
  auto j = parse(r);
  CHECK(j["reports"][0]["config"]["quartic"].size() == 3);
  CHECK(j["reports"][0]["config"]["cubic"].size() == 5);
}

TEST_CASE("chars") {
  auto r = run("chars --space 0 --depth 4");
  CHECK(r.code == 0);
  auto one = run("chars --space 1 --depth 0");
  CHECK(one.code == 0);
  CHECK(one.out.find("(0,1,0)\t1") != std::string::npos);
  auto o = run("chars --oracle-only c2 --level 1 --depth 6 --format json");
  CHECK(o.code == 0);
  CHECK(parse(o)["oracle"].size() == 3);
  auto j = parse(run("chars --space 2 --depth 3 --format json"));
  CHECK(j["equal"] == true);
  CHECK(j["branching"].size() > 0);
}

TEST_CASE("tsv output") {
  auto r = run("verify --suite qexp --format tsv");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("suite\tconfig\trelation", 0) == 0);
  CHECK(r.out.find("\tPASS\t") != std::string::npos);
}

TEST_CASE("configuration errors exit with 2") {
  CHECK(run("verify --suite no-such-suite").code == 2);
  CHECK(run("verify --suite dhat --depth 99").code == 2);
  CHECK(run("verify --suite lemma-61 --level 1").code == 2);
  CHECK(run("verify --suite y-ops --space 7").code == 2);
  CHECK(run("verify --suite dhat --lambda 3L0").code == 2);
  CHECK(run("verify --suite dhat --format xml").code == 2);
  CHECK(run("verify").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("cache directory and mismatch") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "qaffine_cli_cache_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto a = run("verify --suite s-reflection --lambda 2L0 --depth 2 --cache-dir " + dir.string());
  CHECK(a.code == 0);
  CHECK_FALSE(fs::is_empty(dir));
  auto b = run("verify --suite s-reflection --lambda 2L0 --depth 2 --cache-dir " + dir.string());
  CHECK(b.code == 0);
  CHECK(a.out == b.out);
  for (const auto& f : fs::directory_iterator(dir)) {
    std::ofstream(f.path()) << "{\"format\": \"something else\", \"version\": 0}";
  }
  CHECK(run("verify --suite s-reflection --lambda 2L0 --depth 2 --cache-dir " + dir.string()).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
  auto a = run("verify --suite lemma-linking --depth 3 --jobs 1");
  auto b = run("verify --suite lemma-linking --depth 3 --jobs 3");
  auto c = run("verify --suite lemma-linking --depth 3 --jobs 1");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out.find("seconds") == std::string::npos);
  auto t = run("verify --suite qexp --timing");
  CHECK(t.out.find("seconds") != std::string::npos);
}

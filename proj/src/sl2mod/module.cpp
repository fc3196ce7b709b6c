#include "qaffine/sl2mod/module.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "qaffine/linalg/elimination.hpp"
#include "qaffine/qfield/qnumbers.hpp"

namespace qaffine::sl2 {

std::string Weight::str() const {
  auto term = [](int m, const char* name) {
    if (m == 0) return std::string();
    return (m == 1 ? std::string() : std::to_string(m)) + name;
  };
  std::string a = term(m0, "L0"), b = term(m1, "L1");
  if (a.empty() && b.empty()) return "0";
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "+" + b;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (auto i : w) s += (i == 0 ? "f0" : "f1");
  return s;
}

namespace {

Matrix block_of(const Matrix& m, size_t r0, size_t r1, const std::vector<size_t>& cols) {
  Matrix out(r1 - r0, cols.size());
  for (size_t i = r0; i < r1; ++i) {
    for (size_t j = 0; j < cols.size(); ++j) out(i - r0, j) = m(i, cols[j]);
  }
  return out;
}

Matrix col_range(const Matrix& m, size_t c0, size_t c1) {
  Matrix out(m.rows(), c1 - c0);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = c0; j < c1; ++j) out(i, j - c0) = m(i, j);
  }
  return out;
}

// place a (rows x cols) matrix into dst at (r0, c0)
void put(Matrix& dst, size_t r0, size_t c0, const Matrix& a) {
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) dst(r0 + i, c0 + j) = a(i, j);
  }
}

}  // namespace

const Module::Space* Module::space(const Key& k) const {
  auto it = spaces_.find(k);
  return it == spaces_.end() ? nullptr : &it->second;
}

bool Module::is_weight(int x, int y) const {
  // reflect into the dominant chamber; a dominant weight below lambda is a weight
  for (int guard = 0; guard < 100000; ++guard) {
    if (x < 0 || y < 0) return false;
    int a0 = lambda_.m0 - 2 * x + 2 * y;
    int a1 = lambda_.m1 + 2 * x - 2 * y;
    if (a0 < 0) {
      x += a0;
    } else if (a1 < 0) {
      y += a1;
    } else {
      return true;
    }
  }
  throw std::logic_error("weight reflection did not terminate");
}

std::optional<size_t> Module::dim(const Key& k) const {
  if (k[2] != 0) return 0;
  if (k[0] < 0 || k[1] < 0) return 0;
  if (k[0] > depth_) {
    if (!is_weight(k[0], k[1])) return 0;
    return std::nullopt;
  }
  const Space* s = space(k);
  return s ? s->words.size() : 0;
}

std::vector<Key> Module::blocks() const {
  std::vector<Key> out;
  for (const auto& [k, s] : spaces_) {
    if (!s.words.empty()) out.push_back(k);
  }
  return out;  // std::map order: x ascending, then y ascending
}

size_t Module::total_dim(int degree) const {
  size_t n = 0;
  for (const auto& [k, s] : spaces_) {
    if (k[0] == degree) n += s.words.size();
  }
  return n;
}

std::string Module::name() const { return "V(" + lambda_.str() + ")"; }

std::string Module::state_label(const Key& k, size_t i) const {
  return name() + "[x=" + std::to_string(k[0]) + ",y=" + std::to_string(k[1]) + "]" + word_str(word(k, i));
}

const Word& Module::word(const Key& k, size_t i) const {
  const Space* s = space(k);
  if (!s || i >= s->words.size()) throw std::out_of_range("no such basis state");
  return s->words[i];
}

const Matrix* Module::E(int i, const Key& src) const {
  const Space* s = space(src);
  return s && !s->words.empty() ? &s->e[i] : nullptr;
}

const Matrix* Module::F(int i, const Key& src) const {
  const Space* s = space(src);
  return s && !s->words.empty() ? &s->f[i] : nullptr;
}

std::optional<std::pair<Key, Vec>> Module::word_vector(const Word& w) const {
  Key k{0, 0, 0};
  Vec v{Scalar(1)};
  for (size_t pos = w.size(); pos-- > 0;) {
    const int i = w[pos];
    Key nk = i == 0 ? Key{k[0] + 1, k[1], 0} : Key{k[0], k[1] + 1, 0};
    auto d = dim(nk);
    if (!d) return std::nullopt;
    if (*d == 0) return std::make_pair(nk, Vec());
    v = F(i, k)->apply(v);
    k = nk;
  }
  return std::make_pair(k, v);
}

void Module::construct() {
  Space top;
  top.words.push_back(Word{});
  spaces_[{0, 0, 0}] = std::move(top);
  auto dim_of = [&](const Key& k) -> size_t {
    const Space* s = space(k);
    return s ? s->words.size() : 0;
  };
  for (int x = 0; x <= depth_; ++x) {
    for (int y = 0; y <= lambda_.m1 + 2 * x; ++y) {
      if (x == 0 && y == 0) continue;
      const Key mu{x, y, 0};
      const Key up[2] = {{x - 1, y, 0}, {x, y - 1, 0}};
      const size_t d[2] = {dim_of(up[0]), dim_of(up[1])};
      const size_t n = d[0] + d[1];
      if (n == 0) continue;
      // column (i, b) holds (e_0 f_i b, e_1 f_i b) in the bases of mu + alpha_0, mu + alpha_1
      Matrix sig(n, n);
      for (int i = 0; i < 2; ++i) {
        if (d[i] == 0) continue;
        const Space& src = spaces_.at(up[i]);
        const size_t c0 = i == 0 ? 0 : d[0];
        for (int j = 0; j < 2; ++j) {
          const size_t r0 = j == 0 ? 0 : d[0];
          // f_i e_j b: e_j b lies in up[i] + alpha_j, then f_i returns to up[j]
          const Key mid{up[i][0] - (j == 0), up[i][1] - (j == 1), 0};
          const Space* ms = space(mid);
          Matrix part(d[j], d[i]);
          if (ms && !ms->words.empty() && d[j] > 0) part = ms->f[i] * src.e[j];
          if (i == j) {
            const int h = j == 0 ? h0(up[i]) : h1(up[i]);
            part += Matrix::identity(d[i], qint(h));
          }
          put(sig, r0, c0, part);
        }
      }
      Echelon ech = row_reduce(sig);
      Space s;
      for (size_t c : ech.pivots) {
        const int i = c < d[0] ? 0 : 1;
        const size_t b = i == 0 ? c : c - d[0];
        Word w;
        w.push_back(static_cast<uint8_t>(i));
        const Word& wb = spaces_.at(up[i]).words[b];
        w.insert(w.end(), wb.begin(), wb.end());
        s.words.push_back(std::move(w));
      }
      for (int i = 0; i < 2; ++i) {
        if (d[i] == 0) continue;
        const size_t c0 = i == 0 ? 0 : d[0];
        spaces_.at(up[i]).f[i] = col_range(ech.rref, c0, c0 + d[i]);
      }
      if (s.words.empty()) continue;
      s.e[0] = block_of(sig, 0, d[0], ech.pivots);
      s.e[1] = block_of(sig, d[0], n, ech.pivots);
      spaces_[mu] = std::move(s);
    }
  }
  // f-matrices leaving the last stored degree are never consulted (targets lie past the depth);
  // give every block well-shaped defaults
  for (auto& [k, s] : spaces_) {
    const size_t n = s.words.size();
    for (int i = 0; i < 2; ++i) {
      const Key dn{k[0] + (i == 0), k[1] + (i == 1), 0};
      const Key upk{k[0] - (i == 0), k[1] - (i == 1), 0};
      if (s.f[i].cols() != n) s.f[i] = Matrix(dim_of(dn), n);
      if (s.e[i].cols() != n) s.e[i] = Matrix(dim_of(upk), n);
    }
  }
}

std::shared_ptr<const Module> Module::build(Weight lambda, int depth) {
  if (lambda.m0 < 0 || lambda.m1 < 0 || lambda.level() < 1) {
    throw std::invalid_argument("build_module needs a dominant integral weight of positive level");
  }
  if (depth < 0) throw std::invalid_argument("negative depth");
  std::shared_ptr<Module> m(new Module(lambda, depth));
  m->construct();
  return m;
}

namespace {

nlohmann::ordered_json matrix_json(const Matrix& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto e = nlohmann::ordered_json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) e.push_back({r, c, m(r, c).encode()});
    }
  }
  j["entries"] = std::move(e);
  return j;
}

Matrix matrix_from_json(const nlohmann::ordered_json& j) {
  Matrix m(j.at("rows").get<size_t>(), j.at("cols").get<size_t>());
  for (const auto& e : j.at("entries")) {
    m(e.at(0).get<size_t>(), e.at(1).get<size_t>()) = Scalar::decode(e.at(2).get<std::string>());
  }
  return m;
}

}  // namespace

nlohmann::ordered_json Module::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = "qaffine-sl2-module";
  j["version"] = kFormatVersion;
  j["lambda"] = {lambda_.m0, lambda_.m1};
  j["depth"] = depth_;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [k, s] : spaces_) {
    nlohmann::ordered_json b;
    b["x"] = k[0];
    b["y"] = k[1];
    auto words = nlohmann::ordered_json::array();
    for (const auto& w : s.words) {
      std::string t;
      for (auto i : w) t += static_cast<char>('0' + i);
      words.push_back(t);
    }
    b["words"] = std::move(words);
    b["e0"] = matrix_json(s.e[0]);
    b["e1"] = matrix_json(s.e[1]);
    b["f0"] = matrix_json(s.f[0]);
    b["f1"] = matrix_json(s.f[1]);
    arr.push_back(std::move(b));
  }
  j["blocks"] = std::move(arr);
  return j;
}

std::shared_ptr<const Module> Module::from_json(const nlohmann::ordered_json& j) {
  if (j.at("format") != "qaffine-sl2-module" || j.at("version") != kFormatVersion) {
    throw std::runtime_error("module cache: unsupported format or version");
  }
  Weight w{j.at("lambda").at(0).get<int>(), j.at("lambda").at(1).get<int>()};
  std::shared_ptr<Module> m(new Module(w, j.at("depth").get<int>()));
  for (const auto& b : j.at("blocks")) {
    Space s;
    for (const auto& t : b.at("words")) {
      Word wd;
      for (char c : t.get<std::string>()) wd.push_back(static_cast<uint8_t>(c - '0'));
      s.words.push_back(std::move(wd));
    }
    s.e[0] = matrix_from_json(b.at("e0"));
    s.e[1] = matrix_from_json(b.at("e1"));
    s.f[0] = matrix_from_json(b.at("f0"));
    s.f[1] = matrix_from_json(b.at("f1"));
    m->spaces_[{b.at("x").get<int>(), b.at("y").get<int>(), 0}] = std::move(s);
  }
  return m;
}

ModulePtr load_or_build(Weight lambda, int depth, const std::string& cache_dir) {
  namespace fs = std::filesystem;
  fs::path file;
  if (!cache_dir.empty()) {
    file = fs::path(cache_dir) /
           ("sl2_" + std::to_string(lambda.m0) + "_" + std::to_string(lambda.m1) + "_d" + std::to_string(depth) + ".json");
    if (fs::exists(file)) {
      std::ifstream in(file);
      auto j = nlohmann::ordered_json::parse(in);
      auto m = Module::from_json(j);
      if (m->lambda() == lambda && m->depth() == depth) return m;
      throw std::runtime_error("module cache mismatch in " + file.string());
    }
  }
  auto m = Module::build(lambda, depth);
  if (!file.empty()) {
    fs::create_directories(file.parent_path());
    fs::path tmp = file;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << m->to_json().dump();
    }
    fs::rename(tmp, file);
  }
  return m;
}

}  // namespace qaffine::sl2

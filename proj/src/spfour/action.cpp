#include "qaffine/spfour/action.hpp"

#include <stdexcept>
#include <tuple>

#include "qaffine/qfield/qnumbers.hpp"

namespace qaffine::sp4 {

LinearOp lift(const BigSpace& sp, TermFn terms) {
  auto fn = [&sp, terms](const Key& k) -> std::optional<Block> {
    auto d = sp.dim(k);
    if (!d) return std::nullopt;
    if (*d == 0) return Block::zero_block();
    const Weight lam = sp.weight_of(BigSpace::charge(k));
    std::optional<Key> dst;
    std::vector<std::tuple<size_t, size_t, Scalar>> entries;
    for (const auto& part : *sp.layout(k)) {
      const Key mk{part.x, part.y, 0};
      const size_t nf = part.fock.size();
      for (size_t f = 0; f < nf; ++f) {
        auto ts = terms(lam, part.fock[f]);
        if (!ts) return std::nullopt;
        for (const auto& [op, fv] : *ts) {
          if (fv.empty()) continue;
          auto r = op(mk);
          if (!r) return std::nullopt;
          if (r->zero) continue;
          const auto* mod = dynamic_cast<const sl2::Module*>(op.dst());
          if (!mod) throw std::logic_error("lift: module operator expected");
          for (const auto& [fs, c] : fv) {
            if (sp.weight_of(fs.charge) != mod->lambda()) throw std::logic_error("lift: charge and module disagree");
            const Key tk = sp.key_of(r->dst[0], mod->h1(r->dst), fs);
            if (dst && *dst != tk) throw std::logic_error("lift: operator is not homogeneous at " + key_str(k));
            dst = tk;
            if (tk[0] > sp.depth()) return std::nullopt;
            for (size_t i = 0; i < part.mdim; ++i) {
              for (size_t row = 0; row < r->m.rows(); ++row) {
                const Scalar& v = r->m(row, i);
                if (v.is_zero()) continue;
                auto at = sp.index(tk, r->dst[0], row, fs);
                if (!at) throw std::logic_error("lift: target state missing in " + key_str(tk));
                entries.emplace_back(*at, part.offset + i * nf + f, c * v);
              }
            }
          }
        }
      }
    }
    if (!dst || entries.empty()) return Block::zero_block();
    Matrix m(*sp.dim(*dst), *d);
    for (const auto& [r, c, v] : entries) m(r, c) += v;
    if (m.is_zero()) return Block::zero_block();
    return Block{*dst, std::move(m), false};
  };
  return LinearOp(&sp, &sp, fn);
}

namespace {

fock::FockVector single(const FockState& fs) { return fock::FockVector{{fs, Scalar(1)}}; }

}  // namespace

Sp4Action::Sp4Action(const BigSpace& sp, const iw::Intertwiners& iw)
    : sp_(sp),
      iw_(iw),
      om0_(fock::omega0()),
      om2_(fock::omega2()),
      psi_(fock::rescaled(fock::psi_lowest(2), -2)),
      phi_(fock::phi0(2)) {
  if (&iw.family() != &sp.family()) throw std::invalid_argument("Sp4Action: space and intertwiners use different families");
}

Scalar Sp4Action::qi(int i) { return Scalar::q_pow(i); }

Scalar Sp4Action::qint_i(int i, int n) {
  return (Scalar::q_pow(i * n) - Scalar::q_pow(-i * n)) / (Scalar::q_pow(i) - Scalar::q_pow(-i));
}

int Sp4Action::cartan(int i, int j) {
  static const int a[2][2] = {{2, -2}, {-1, 2}};
  return a[i - 1][j - 1];
}

LinearOp Sp4Action::cached(const std::string& tag, const std::function<LinearOp()>& make) const {
  std::lock_guard<std::recursive_mutex> g(mu_);
  auto it = memo_.find(tag);
  if (it != memo_.end()) return it->second;
  LinearOp op = make();
  memo_.emplace(tag, op);
  return op;
}

LinearOp Sp4Action::id() const { return LinearOp::identity(&sp_); }

LinearOp Sp4Action::module_op(const std::string& tag, const std::function<LinearOp(Weight)>& f) const {
  return cached("m:" + tag, [&] {
    return lift(sp_, [f](Weight lam, const FockState& fs) {
      return std::optional<std::vector<Term>>(std::vector<Term>{{f(lam), single(fs)}});
    });
  });
}

LinearOp Sp4Action::b(int k) const {
  if (k == 0) throw std::invalid_argument("b(0) is diagonal; use K");
  const sl2::Family& fam = sp_.family();
  return cached("b" + std::to_string(k), [&] {
    const auto alg = fock::b_oscillators();
    return lift(sp_, [&fam, alg, k](Weight lam, const FockState& fs) {
      return std::optional<std::vector<Term>>(
          std::vector<Term>{{fam.chev(lam).id(), fock::apply_beta(alg, k, single(fs))}});
    });
  });
}

LinearOp Sp4Action::y(int sign, int k) const {
  return cached(std::string(sign > 0 ? "y+" : "y-") + std::to_string(k), [&] {
    const fock::VertexOpSpec& om = sign > 0 ? om2_ : om0_;
    const fock::VertexOpSpec& mod = sign > 0 ? psi_ : phi_;
    const iw::Intertwiners* I = &iw_;
    const int N = sp_.depth();
    return lift(sp_, [I, &om, &mod, k, N](Weight lam, const FockState& fs) -> std::optional<std::vector<Term>> {
      std::vector<Term> out;
      const Half z0 = fock::times(om.factors[0].slope, fs.charge);
      const int m = fs.degree();
      for (int t = -m; t <= N - m; ++t) {
        const Half n = z0 + Half::whole(t);
        fock::FockVector fv;
        try {
          fv = fock::apply_mode(om, n, single(fs), N);
        } catch (const TruncationOverflow&) {
          return std::nullopt;
        }
        if (fv.empty()) continue;
        const Half e = Half::whole(-k - 1) - n;
        out.emplace_back(I->bosonized(mod, lam, e), std::move(fv));
      }
      return out;
    });
  });
}

LinearOp Sp4Action::x(int i, int sign, int k) const {
  if (i == 2) return y(sign, k);
  const sl2::Family& fam = sp_.family();
  return module_op(std::string(sign > 0 ? "x+" : "x-") + std::to_string(k),
                   [&fam, sign, k](Weight lam) { return fam.modes(lam).x(sign, k); });
}

LinearOp Sp4Action::a(int i, int k) const {
  if (k == 0) throw std::invalid_argument("a_i(0) is not a generator");
  const sl2::Family& fam = sp_.family();
  LinearOp a1 = module_op("a" + std::to_string(k), [&fam, k](Weight lam) { return fam.modes(lam).a(k); });
  if (i == 1) return a1;
  return cached("a2:" + std::to_string(k), [&] {
    const int n = k > 0 ? k : -k;
    return -qint(2).inverse() * (a1 + qint(2 * n) * b(k));
  });
}

LinearOp Sp4Action::K(int i, int sign) const {
  return cached("K" + std::to_string(i) + (sign > 0 ? "+" : "-"), [&] {
    if (i == 1) return LinearOp::diagonal(&sp_, [sign](const Key& k) { return Scalar::q_pow(sign * k[1]); });
    return LinearOp::diagonal(&sp_, [sign](const Key& k) { return Scalar::q_pow(-sign * (k[2] + k[1])); });
  });
}

LinearOp Sp4Action::qd(int sign) const {
  return cached(sign > 0 ? "qd+" : "qd-",
                [&] { return LinearOp::diagonal(&sp_, [sign](const Key& k) { return Scalar::q_pow(-sign * k[0]); }); });
}

LinearOp Sp4Action::psi(int i, int n) const {
  if (n < 0) return LinearOp::zero(&sp_, &sp_);
  return cached("psi" + std::to_string(i) + ":" + std::to_string(n), [&] {
    if (n == 0) return K(i);
    const Scalar c = qi(i) - qi(i).inverse();
    std::vector<std::pair<Scalar, LinearOp>> terms;
    fock::for_each_partition(n, [&](const std::vector<int>& mult) {
      Scalar s(1);
      std::vector<LinearOp> ops{K(i)};
      for (int k = 1; k < static_cast<int>(mult.size()); ++k) {
        for (int r = 1; r <= mult[k]; ++r) {
          s *= c / Scalar(r);
          ops.push_back(a(i, k));
        }
      }
      terms.emplace_back(s, product(ops));
    });
    return lincomb(terms);
  });
}

LinearOp Sp4Action::phi(int i, int n) const {
  if (n > 0) return LinearOp::zero(&sp_, &sp_);
  return cached("phi" + std::to_string(i) + ":" + std::to_string(n), [&] {
    if (n == 0) return K(i, -1);
    const Scalar c = -(qi(i) - qi(i).inverse());
    std::vector<std::pair<Scalar, LinearOp>> terms;
    fock::for_each_partition(-n, [&](const std::vector<int>& mult) {
      Scalar s(1);
      std::vector<LinearOp> ops{K(i, -1)};
      for (int k = 1; k < static_cast<int>(mult.size()); ++k) {
        for (int r = 1; r <= mult[k]; ++r) {
          s *= c / Scalar(r);
          ops.push_back(a(i, -k));
        }
      }
      terms.emplace_back(s, product(ops));
    });
    return lincomb(terms);
  });
}

LinearOp Sp4Action::e(int i) const {
  if (i == 1) return x(1, 1, 0);
  if (i == 2) return y(1, 0);
  if (i != 0) throw std::out_of_range("e_i needs i in {0, 1, 2}");
  return cached("e0", [&] {
    LinearOp inner = qcommutator(y(-1, 0), x(1, -1, 1), Scalar::q_pow(-2));
    LinearOp outer = qcommutator(x(1, -1, 0), inner);
    return Scalar::q_pow(2) * product({outer, K(1, -1), K(1, -1), K(2, -1)});
  });
}

}  // namespace qaffine::sp4

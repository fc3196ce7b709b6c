#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "qaffine/fockvo/fock.hpp"

namespace qaffine::fock {

/*
 * One tensor factor of a normally ordered vertex operator:
 *   exp(sum cminus(k) beta(-k) z^k) exp(sum cplus(k) beta(k) z^-k) Dhat^dhat T (q^arg z)^{slope G}
 * where G is the grading operator of the factor (b(0), or h_1 on an sl2 module) and the
 * operator raises G by shift. Dhat is opaque; dconj records Dhat O(z) Dhat^-1 = c z^p O(z).
 * An atomic factor (x+-(z) on a module) is not an exponential; cminus/cplus then only
 * encode its brackets with the oscillators.
 */
struct VertexFactor {
  OscillatorAlgebra alg;
  std::function<Scalar(int)> cminus = [](int) { return Scalar(); };
  std::function<Scalar(int)> cplus = [](int) { return Scalar(); };
  Half slope;
  int arg_qpow = 0;
  Half shift;
  int dhat = 0;
  Scalar dconj_coeff = Scalar(1);
  Half dconj_pow;
  bool atomic = false;
};

struct VertexOpSpec {
  std::string name;
  std::vector<VertexFactor> factors;
};

// calls fn(mult) for every partition of d; mult[k] = number of parts equal to k
void for_each_partition(int d, const std::function<void(const std::vector<int>&)>& fn);

// V(q^e z)
VertexOpSpec rescaled(const VertexOpSpec& v, int e, const std::string& name = "");
// tensor product of factors on distinct algebras
VertexOpSpec tensor(const VertexOpSpec& a, const VertexOpSpec& b, const std::string& name);

// type I highest component at level l, argument z
VertexOpSpec phi0(int level);
// type II lowest component at level l, argument z
VertexOpSpec psi_lowest(int level);
VertexOpSpec omega0();
VertexOpSpec omega2();
// X+-(z) at level l
VertexOpSpec x_current(int sign, int level);
// Y+(z) = Psi_2(q^-2 z) (x) Omega_2(z), Y-(z) = Phi_0(z) (x) Omega_0(z)
VertexOpSpec y_current(int sign);

// Phi0_l1.., Psi_l1.., Omega0, Omega2, Xp, Xm, Yp, Ym
VertexOpSpec named_spec(const std::string& name);
std::vector<std::string> spec_names();
nlohmann::ordered_json spec_json(const VertexOpSpec& v, int order);

/*
 * A(u_i) B(u_j) = c(u_i, u_j) :A(u_i) B(u_j): for i < j; the prefactor is a monomial
 * times a series in u_j/u_i exact to the given order.
 */
Series pair_contraction(const VertexOpSpec& a, const VertexOpSpec& b, int vars, int i, int j, int order);
Series contraction(const VertexOpSpec& a, const VertexOpSpec& b, int order);
// A_1(u_1) ... A_n(u_n) = prod_{i<j} c_ij :A_1 ... A_n:
Series contraction_multi(const std::vector<VertexOpSpec>& ops, int order);

// [beta(k), V(z)] = c z^k V(z) on the factor over the named algebra
Scalar bracket_coefficient(const VertexOpSpec& v, const std::string& alg, int k);

// coefficient of z^d in exp(sum cm(k) beta(-k) z^k) v
FockVector creation_part(const OscillatorAlgebra& alg, const std::function<Scalar(int)>& cm, int d,
                         const FockVector& v);
// coefficient of z^-d in exp(sum cp(k) beta(k) z^-k) v
FockVector annihilation_part(const OscillatorAlgebra& alg, const std::function<Scalar(int)>& cp, int d,
                             const FockVector& v);
// coefficient of z^m in V(z) v for a single-factor spec over an algebra with zero mode;
// throws TruncationOverflow when a contributing state has degree above cap
FockVector apply_mode(const VertexOpSpec& v, Half m, const FockVector& x, int cap);

}  // namespace qaffine::fock

#pragma once

#include "qaffine/fockvo/vertex.hpp"
#include "qaffine/report.hpp"

namespace qaffine::fock {

// expected prefactors, expanded without logarithms
Series euler_factor(int vars, int i, int j, const Scalar& c, const Scalar& p, int power, int order);
Series linear_factor(int vars, int i, int j, const Scalar& c, int order);
Series geometric_factor(int vars, int i, int j, const Scalar& c, int order);

// compares a computed prefactor with the expected one; states_checked counts coefficients
void check_series(RelationEntry& e, const Series& got, const Series& want, const std::string& instance);

// exp_q(x) exp_{q^-1}(-x) = 1
RelationReport qexp_inverse_suite(int order);
// -sum (1/k)([lk]/[2k]) z^k = log (q^{2-l} z; q^4)/(q^{2+l} z; q^4), l = 1, 2, 3
RelationReport log_identity_suite(int order);
// the 4 general level prefactors, the 4 Omega products and the 13 level 2 current identities
RelationReport normal_ordering_suite(int order);
// Omega products only
RelationReport omega_suite(int order);

}  // namespace qaffine::fock

#pragma once

#include "qaffine/report.hpp"
#include "qaffine/spfour/action.hpp"

namespace qaffine::sp4 {

// a-a brackets, K and q^d conjugations, [a_i, X_j], locality and [X+_i, X-_j] in modes |k| <= window
RelationReport relations_suite(const Sp4Action& A, int window);
// quartic Serre relation with modes in quartic_window, cubic one with modes in cubic_window
RelationReport serre_suite(const Sp4Action& A, const std::vector<int>& quartic_window,
                           const std::vector<int>& cubic_window);
// brackets of a(k), b(k) with the Y modes, and the q^d grading of Y
RelationReport y_ops_suite(const Sp4Action& A, int window);
// e_i kill the designated vector, which has weight Lambda_j and degree 0
RelationReport highest_weight_suite(const Sp4Action& A);
// the six extremal-vector linkings through y-+ modes, with their scalars in the notes
RelationReport linking_suite(const Sp4Action& A);
// graded weight multiplicities against the C2 Freudenthal oracle, and the basis count by branching
RelationReport character_suite(const BigSpace& S);
chars::Table character(const BigSpace& S);

}  // namespace qaffine::sp4

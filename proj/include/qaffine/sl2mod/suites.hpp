#pragma once

#include "qaffine/report.hpp"
#include "qaffine/sl2mod/ops.hpp"

namespace qaffine::sl2 {

// Chevalley relations, q-Serre relations and weight multiplicities against the oracle
RelationReport module_suite(const Family& fam, Weight w);
// Drinfeld relations in modes |k| <= window
RelationReport drinfeld_suite(const Family& fam, Weight w, int window);
// conjugation relations of S_0, S_1 and S_i S_i^{-1} = 1
RelationReport reflection_suite(const Family& fam, Weight w);
// D-hat against a(n), K, x+-(k); D-hat against its literal definition; D-hat D-hat^{-1} = 1
RelationReport dhat_suite(const Family& fam, Weight w, int window);
// every action equation of V_z^{(l)} with z symbolic
RelationReport evaluation_suite(int level);

}  // namespace qaffine::sl2

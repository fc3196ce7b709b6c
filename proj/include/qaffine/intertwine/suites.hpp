#pragma once

#include "qaffine/intertwine/intertwiner.hpp"
#include "qaffine/report.hpp"

namespace qaffine::iw {

/*
 * Componentwise intertwining equations for all j, the Drinfeld-mode properties of
 * Phi_0 (Psi_l), the order cross-check and, at level 2, the q^d conjugation.
 * Coefficients z^e are taken for every degree shift |d| <= depth; Drinfeld modes |k| <= window.
 */
RelationReport intertwiner_suite(const Intertwiners& iw, Kind kind, Weight lambda, int window);

// level 2, on v_lambda: [x-(0), [Phi0(z), x-(1)]_{q^-2}] = -q^-2 z^-1 Dhat f1^2 exp(sum q^k/[2k] a(-k) z^k) z^{h1/2}
RelationReport lemma61_suite(const Intertwiners& iw, Weight lambda);

}  // namespace qaffine::iw

#pragma once

#include <vector>

#include "geomgamma/exactcore.hpp"

namespace gg {

// One half-space factor of an indicator product. The base indicator is
// [a(p) >= 0] (or [a(p) > 0] when strict); negated contributes 1 - base.
struct HalfSpaceTerm {
  LinearForm form;
  bool strict = false;
  bool negated = false;
};

struct ConeTerm {
  Rational coeff;
  std::vector<HalfSpaceTerm> factors;  // empty product = constant 1
};

// Formal Q-linear combination of products of half-space indicators. Kept
// uncanonicalized; identities are checked by evaluation and through h0.
struct ConeExpr {
  std::vector<ConeTerm> terms;
};

ConeExpr dual_cone(const std::vector<LinearForm>& forms);
Rational evaluate(const ConeExpr& expr, const RatPoint& p);
Rational evaluate_term(const ConeTerm& term, const RatPoint& p);

// eps_j = (-1)^j sign det(a_0 .. a_j-hat .. a_n)
std::vector<int> eps_signs(const std::vector<LinearForm>& forms);

// sum_j eps_j c-dual(a_0 .. a_j-hat .. a_n)
ConeExpr cocycle_combo(const std::vector<LinearForm>& forms);

// rewrite negated factors away: (1 - u) products expanded into +/- plain terms
ConeExpr expand_negations(const ConeExpr& expr);

// Sharifi-Venkatesh kappa from determinant signs and the standard relation,
// and the counterclockwise-arc function it must equal. l1, l2, l3 are
// pairwise non-proportional integer 2-vectors.
int kappa_sv(const IntVec& l1, const IntVec& l2, const IntVec& l3);
int delta_sv(const IntVec& l1, const IntVec& l2, const IntVec& l3);

}  // namespace gg

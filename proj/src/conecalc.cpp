#include "geomgamma/conecalc.hpp"

#include <stdexcept>

namespace gg {

ConeExpr dual_cone(const std::vector<LinearForm>& forms) {
  ConeTerm term;
  term.coeff = 1;
  for (const auto& a : forms) {
    if (a.is_zero()) throw std::invalid_argument("dual_cone: zero form");
    term.factors.push_back({a, false, false});
  }
  ConeExpr expr;
  expr.terms.push_back(std::move(term));
  return expr;
}

Rational evaluate_term(const ConeTerm& term, const RatPoint& p) {
  for (const auto& f : term.factors) {
    Rational v = pair(f.form, p);
    bool base = f.strict ? sgn(v) > 0 : sgn(v) >= 0;
    bool val = f.negated ? !base : base;
    if (!val) return Rational(0);
  }
  return term.coeff;
}

Rational evaluate(const ConeExpr& expr, const RatPoint& p) {
  Rational acc = 0;
  for (const auto& t : expr.terms) acc += evaluate_term(t, p);
  return acc;
}

std::vector<int> eps_signs(const std::vector<LinearForm>& forms) {
  if (forms.empty()) throw std::invalid_argument("eps_signs: empty family");
  const size_t n = forms[0].dim();
  if (forms.size() != n + 1)
    throw std::invalid_argument("eps_signs: need n+1 forms in dimension n");
  std::vector<int> eps(n + 1);
  for (size_t j = 0; j <= n; ++j) {
    std::vector<LinearForm> sub;
    sub.reserve(n);
    for (size_t k = 0; k <= n; ++k)
      if (k != j) sub.push_back(forms[k]);
    int s = signdet_forms(sub);
    eps[j] = (j % 2 == 0) ? s : -s;
  }
  return eps;
}

ConeExpr cocycle_combo(const std::vector<LinearForm>& forms) {
  std::vector<int> eps = eps_signs(forms);
  ConeExpr expr;
  for (size_t j = 0; j < forms.size(); ++j) {
    if (eps[j] == 0) continue;
    ConeTerm term;
    term.coeff = eps[j];
    for (size_t k = 0; k < forms.size(); ++k)
      if (k != j) term.factors.push_back({forms[k], false, false});
    expr.terms.push_back(std::move(term));
  }
  return expr;
}

ConeExpr expand_negations(const ConeExpr& expr) {
  ConeExpr out;
  for (const auto& term : expr.terms) {
    std::vector<ConeTerm> partial{{term.coeff, {}}};
    for (const auto& f : term.factors) {
      if (!f.negated) {
        for (auto& t : partial) t.factors.push_back(f);
        continue;
      }
      // (1 - u): duplicate every partial term
      std::vector<ConeTerm> next;
      next.reserve(partial.size() * 2);
      for (const auto& t : partial) {
        next.push_back(t);
        ConeTerm neg = t;
        neg.coeff = -neg.coeff;
        neg.factors.push_back({f.form, f.strict, false});
        next.push_back(std::move(neg));
      }
      partial = std::move(next);
    }
    for (auto& t : partial) out.terms.push_back(std::move(t));
  }
  return out;
}

namespace {

int det2_sign(const IntVec& a, const IntVec& b) {
  Int d = a[0] * b[1] - a[1] * b[0];
  return sgn(d);
}

}  // namespace

int kappa_sv(const IntVec& l1, const IntVec& l2, const IntVec& l3) {
  int e12 = det2_sign(l1, l2);
  int e13 = det2_sign(l1, l3);
  int e23 = det2_sign(l2, l3);
  if (e12 == 0 || e13 == 0 || e23 == 0)
    throw std::invalid_argument("not in general position");
  std::vector<LinearForm> forms{LinearForm(l1), LinearForm(l2), LinearForm(l3)};
  StandardRelation rel = standard_relation(forms);
  int q = rel.k_minus == 0 ? 1 : 0;
  // kappa = (1 - e12 - e23 + e13)/2 + e12 q(k^-); integral in all sign cases
  int num = 1 - e12 - e23 + e13;
  return num / 2 + e12 * q;
}

int delta_sv(const IntVec& l1, const IntVec& l2, const IntVec& l3) {
  int e12 = det2_sign(l1, l2);
  int e13 = det2_sign(l1, l3);
  int e23 = det2_sign(l2, l3);
  if (e12 == 0 || e13 == 0 || e23 == 0)
    throw std::invalid_argument("not in general position");
  // l2 on the counterclockwise arc from l1 to l3 -> 0, else 1
  bool on_arc = e13 > 0 ? (e12 > 0 && e23 > 0) : (e12 > 0 || e23 > 0);
  return on_arc ? 0 : 1;
}

}  // namespace gg

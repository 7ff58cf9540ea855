#pragma once

#include <vector>

#include "geomgamma/bigfloat.hpp"
#include "geomgamma/conecalc.hpp"
#include "geomgamma/exactcore.hpp"
#include "geomgamma/numfield.hpp"

namespace gg {

// B_k under the t/(e^t - 1) convention (B_1 = -1/2). Memoized.
Rational bernoulli_number(unsigned k);

// Adapters so the Bernoulli machinery can run over Q, over a number field,
// or over arbitrary-precision complex values with one code path. The context
// argument supplies what a bare rational cannot: the field, or the precision.
template <class K>
struct Kops;

template <>
struct Kops<Rational> {
  static Rational from_rational(const Rational& r, const Rational&) { return r; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
};

template <>
struct Kops<NFElement> {
  static NFElement from_rational(const Rational& r, const NFElement& ctx) {
    return nf_from_rational(ctx.field(), r);
  }
  static bool is_zero(const NFElement& x) { return x.is_zero(); }
};

template <>
struct Kops<BigComplex> {
  static BigComplex from_rational(const Rational& r, const BigComplex& ctx) {
    return BigComplex(r, ctx.prec());
  }
  static bool is_zero(const BigComplex& x) { return x.is_zero(); }
};

// Values of a K-linear functional on L given on the basis B, plus the shift w.
template <class K>
struct ValueAssignment {
  std::vector<K> x_basis;
  K w;

  K x_of(const LatticeVector& v) const {
    K acc = Kops<K>::from_rational(Rational(0), w);
    for (size_t i = 0; i < x_basis.size(); ++i)
      if (sgn(v.c[i]) != 0)
        acc = acc + x_basis[i] * Kops<K>::from_rational(Rational(v.c[i]), w);
    return acc;
  }
  K x_of(const RatPoint& p) const {
    K acc = Kops<K>::from_rational(Rational(0), w);
    for (size_t i = 0; i < x_basis.size(); ++i)
      if (sgn(p.c[i]) != 0)
        acc = acc + x_basis[i] * Kops<K>::from_rational(p.c[i], w);
    return acc;
  }
};

// B*_{n,m}(z, omega) via the explicit Bernoulli-number double sum.
template <class K>
K multiple_bernoulli_star(int n, int m, const K& z, const std::vector<K>& omega);

struct ParallelepipedSet {
  std::vector<RatPoint> points;  // the delta in v+L with 0 <= a_j(delta) < s_j
  Int index;                     // |det(alpha_1 .. alpha_n)| = |points|
};

// Coset enumeration of L mod the alpha-sublattice through a Smith
// decomposition, each representative shifted into the half-open box.
ParallelepipedSet enum_parallelepiped(const std::vector<LinearForm>& forms,
                                      const RatPoint& v);
// |F| without enumerating (for budgeting)
Int parallelepiped_index(const std::vector<LinearForm>& forms);

// B_{n,abar}(v)(w,x); zero for dependent forms.
template <class K>
K geometric_bernoulli(const std::vector<LinearForm>& forms, const RatPoint& v,
                      const ValueAssignment<K>& assign);

// h0 applied to the dual cone of n forms: signdet(abar) * B_{n,abar}.
template <class K>
K h0_dual_cone(const std::vector<LinearForm>& forms, const RatPoint& v,
               const ValueAssignment<K>& assign);

// Independent series route: t^0 Laurent coefficient of
// e^{wt} sum_delta e^{x(delta) t} / prod_j (1 - e^{x(alpha_j) t}),
// truncated exact power series of order n+1.
template <class K>
K h0_series_oracle(const std::vector<LinearForm>& forms, const RatPoint& v,
                   const ValueAssignment<K>& assign);

// Q-linear extension of h0 to combinations whose terms are full-dimensional
// simplicial dual cones or wedges.
template <class K>
K h0_cone_expr(const ConeExpr& expr, const RatPoint& v,
               const ValueAssignment<K>& assign);

// sum_j (-1)^j B_{n, a_0 .. a_j-hat .. a_n}(v)(w,x)
template <class K>
K cocycle_sum(const std::vector<LinearForm>& forms, const RatPoint& v,
              const ValueAssignment<K>& assign);

// ---------------- implementation ----------------

namespace detail {

template <class K>
void compositions_sum(int parts, int total, const std::vector<std::vector<K>>& omega_pows,
                      const std::vector<Rational>& bern_over_fact, int depth,
                      const Rational& coeff_acc, const K& prod_acc, K& out) {
  // accumulate prod_j B_{k_j} omega_j^{k_j} / k_j! over k_1+...+k_parts = total
  if (depth == parts - 1) {
    int k = total;
    if (sgn(bern_over_fact[k]) == 0) return;
    Rational c = coeff_acc * bern_over_fact[k];
    K term = prod_acc * omega_pows[depth][k];
    out = out + term * Kops<K>::from_rational(c, prod_acc);
    return;
  }
  for (int k = 0; k <= total; ++k) {
    if (sgn(bern_over_fact[k]) == 0) continue;
    Rational c = coeff_acc * bern_over_fact[k];
    K p = prod_acc * omega_pows[depth][k];
    compositions_sum<K>(parts, total - k, omega_pows, bern_over_fact, depth + 1,
                        c, p, out);
  }
}

}  // namespace detail

template <class K>
K multiple_bernoulli_star(int n, int m, const K& z, const std::vector<K>& omega) {
  if (static_cast<int>(omega.size()) != n)
    throw std::invalid_argument("multiple_bernoulli_star: need n omegas");
  for (const K& o : omega)
    if (Kops<K>::is_zero(o))
      throw std::invalid_argument("multiple_bernoulli_star: zero omega");
  const K one = Kops<K>::from_rational(Rational(1), z);
  // powers omega_j^k for k <= m
  std::vector<std::vector<K>> omega_pows(n);
  for (int j = 0; j < n; ++j) {
    omega_pows[j].push_back(one);
    for (int k = 1; k <= m; ++k)
      omega_pows[j].push_back(omega_pows[j][k - 1] * omega[j]);
  }
  std::vector<Rational> bern_over_fact(m + 1);
  Rational fact = 1;
  for (int k = 0; k <= m; ++k) {
    if (k > 0) fact *= k;
    bern_over_fact[k] = bernoulli_number(k) / fact;
  }
  std::vector<K> z_pows{one};
  for (int l = 1; l <= m; ++l) z_pows.push_back(z_pows[l - 1] * z);

  K acc = Kops<K>::from_rational(Rational(0), z);
  Rational lfact = 1;
  for (int l = 0; l <= m; ++l) {
    if (l > 0) lfact *= l;
    K inner = Kops<K>::from_rational(Rational(0), z);
    detail::compositions_sum<K>(n, m - l, omega_pows, bern_over_fact, 0,
                                Rational(1), one, inner);
    acc = acc + z_pows[l] * inner * Kops<K>::from_rational(1 / lfact, z);
  }
  Rational mfact = 1;
  for (int k = 2; k <= m; ++k) mfact *= k;
  return acc * Kops<K>::from_rational(mfact, z);
}

template <class K>
K geometric_bernoulli(const std::vector<LinearForm>& forms, const RatPoint& v,
                      const ValueAssignment<K>& assign) {
  const size_t n = forms.size();
  if (n == 0 || forms[0].dim() != n)
    throw std::invalid_argument("geometric_bernoulli: need n forms in dimension n");
  if (signdet_forms(forms) == 0)
    return Kops<K>::from_rational(Rational(0), assign.w);
  DualFamilyResult dual = positive_dual_family(forms);
  std::vector<K> xa;
  xa.reserve(n);
  for (const auto& alpha : dual.alphas) {
    K val = assign.x_of(alpha);
    if (Kops<K>::is_zero(val))
      throw std::runtime_error("assignment on pole locus");
    xa.push_back(std::move(val));
  }
  ParallelepipedSet F = enum_parallelepiped(forms, v);
  K sum = Kops<K>::from_rational(Rational(0), assign.w);
  for (const RatPoint& delta : F.points) {
    K zarg = assign.w + assign.x_of(delta);
    sum = sum + multiple_bernoulli_star<K>(static_cast<int>(n),
                                           static_cast<int>(n), zarg, xa);
  }
  Rational nfact = 1;
  for (size_t k = 2; k <= n; ++k) nfact *= static_cast<long>(k);
  K out = sum * Kops<K>::from_rational(Rational(dual.epsilon) / nfact, assign.w);
  for (const K& val : xa) out = out / val;
  return out;
}

template <class K>
K h0_dual_cone(const std::vector<LinearForm>& forms, const RatPoint& v,
               const ValueAssignment<K>& assign) {
  int sd = signdet_forms(forms);
  if (sd == 0) return Kops<K>::from_rational(Rational(0), assign.w);
  K b = geometric_bernoulli(forms, v, assign);
  return b * Kops<K>::from_rational(Rational(sd), assign.w);
}

namespace detail {

// dense truncated power series over K, fixed order
template <class K>
struct TruncSeries {
  std::vector<K> c;

  static TruncSeries constant(const K& value, int order) {
    TruncSeries s;
    s.c.assign(order + 1, Kops<K>::from_rational(Rational(0), value));
    s.c[0] = value;
    return s;
  }
  TruncSeries mul(const TruncSeries& o) const {
    const int order = static_cast<int>(c.size()) - 1;
    TruncSeries out = constant(Kops<K>::from_rational(Rational(0), c[0]), order);
    for (int i = 0; i <= order; ++i)
      for (int j = 0; i + j <= order; ++j)
        out.c[i + j] = out.c[i + j] + c[i] * o.c[j];
    return out;
  }
  TruncSeries inverse() const {
    const int order = static_cast<int>(c.size()) - 1;
    TruncSeries out = constant(Kops<K>::from_rational(Rational(0), c[0]), order);
    K inv0 = Kops<K>::from_rational(Rational(1), c[0]) / c[0];
    out.c[0] = inv0;
    for (int k = 1; k <= order; ++k) {
      K acc = Kops<K>::from_rational(Rational(0), c[0]);
      for (int i = 1; i <= k; ++i) acc = acc + c[i] * out.c[k - i];
      out.c[k] = (Kops<K>::from_rational(Rational(0), c[0]) - acc) * inv0;
    }
    return out;
  }
};

// e^{at} truncated: coefficients a^k / k!
template <class K>
TruncSeries<K> exp_series(const K& a, int order) {
  TruncSeries<K> s = TruncSeries<K>::constant(Kops<K>::from_rational(Rational(1), a), order);
  Rational fact = 1;
  K pw = Kops<K>::from_rational(Rational(1), a);
  for (int k = 1; k <= order; ++k) {
    fact *= k;
    pw = pw * a;
    s.c[k] = pw * Kops<K>::from_rational(1 / fact, a);
  }
  return s;
}

// (1 - e^{at}) = -a t G_a(t) with G_a(t) = sum_k a^k t^k/(k+1)!
template <class K>
TruncSeries<K> unit_factor_series(const K& a, int order) {
  TruncSeries<K> s = TruncSeries<K>::constant(Kops<K>::from_rational(Rational(1), a), order);
  Rational fact = 1;  // (k+1)!
  K pw = Kops<K>::from_rational(Rational(1), a);
  for (int k = 1; k <= order; ++k) {
    fact *= (k + 1);
    pw = pw * a;
    s.c[k] = pw * Kops<K>::from_rational(1 / fact, a);
  }
  return s;
}

}  // namespace detail

template <class K>
K h0_series_oracle(const std::vector<LinearForm>& forms, const RatPoint& v,
                   const ValueAssignment<K>& assign) {
  const int n = static_cast<int>(forms.size());
  if (signdet_forms(forms) == 0)
    throw std::invalid_argument("h0_series_oracle: dependent forms");
  DualFamilyResult dual = positive_dual_family(forms);
  std::vector<K> xa;
  for (const auto& alpha : dual.alphas) {
    K val = assign.x_of(alpha);
    if (Kops<K>::is_zero(val))
      throw std::runtime_error("assignment on pole locus");
    xa.push_back(std::move(val));
  }
  ParallelepipedSet F = enum_parallelepiped(forms, v);
  const int order = n;  // coefficients t^0 .. t^n

  detail::TruncSeries<K> numer = detail::exp_series(assign.w, order);
  {
    detail::TruncSeries<K> shifts =
        detail::TruncSeries<K>::constant(Kops<K>::from_rational(Rational(0), assign.w), order);
    for (const RatPoint& delta : F.points) {
      auto e = detail::exp_series(assign.x_of(delta), order);
      for (int k = 0; k <= order; ++k) shifts.c[k] = shifts.c[k] + e.c[k];
    }
    numer = numer.mul(shifts);
  }
  detail::TruncSeries<K> unit = detail::unit_factor_series(xa[0], order);
  for (int j = 1; j < n; ++j)
    unit = unit.mul(detail::unit_factor_series(xa[j], order));
  detail::TruncSeries<K> res = numer.mul(unit.inverse());

  // D(t) = (-1)^n prod(x(alpha_j)) t^n U(t)
  K denom = xa[0];
  for (int j = 1; j < n; ++j) denom = denom * xa[j];
  Rational sign = (n % 2 == 0) ? 1 : -1;
  return res.c[order] * Kops<K>::from_rational(sign, assign.w) / denom;
}

template <class K>
K h0_cone_expr(const ConeExpr& expr, const RatPoint& v,
               const ValueAssignment<K>& assign) {
  ConeExpr plain = expand_negations(expr);
  const size_t n = assign.x_basis.size();
  K acc = Kops<K>::from_rational(Rational(0), assign.w);
  for (const auto& term : plain.terms) {
    std::vector<LinearForm> forms;
    for (const auto& f : term.factors) {
      if (f.strict)
        throw std::invalid_argument("h0: open half-spaces unsupported");
      forms.push_back(f.form);
    }
    if (rank_forms(forms) < n) continue;  // wedge, h0 vanishes
    if (forms.size() != n)
      throw std::invalid_argument("h0: term is not a simplicial dual cone");
    K val = h0_dual_cone(forms, v, assign);
    acc = acc + val * Kops<K>::from_rational(term.coeff, assign.w);
  }
  return acc;
}

template <class K>
K cocycle_sum(const std::vector<LinearForm>& forms, const RatPoint& v,
              const ValueAssignment<K>& assign) {
  if (forms.empty()) throw std::invalid_argument("cocycle_sum: empty family");
  const size_t n = forms[0].dim();
  if (forms.size() != n + 1)
    throw std::invalid_argument("cocycle_sum: need n+1 forms");
  for (const auto& a : forms)
    if (a.is_zero()) throw std::invalid_argument("cocycle_sum: zero form");
  K acc = Kops<K>::from_rational(Rational(0), assign.w);
  for (size_t j = 0; j <= n; ++j) {
    std::vector<LinearForm> sub;
    for (size_t k = 0; k <= n; ++k)
      if (k != j) sub.push_back(forms[k]);
    K b = geometric_bernoulli(sub, v, assign);
    Rational sign = (j % 2 == 0) ? 1 : -1;
    acc = acc + b * Kops<K>::from_rational(sign, assign.w);
  }
  return acc;
}

}  // namespace gg

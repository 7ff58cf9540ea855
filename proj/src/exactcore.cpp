#include "geomgamma/exactcore.hpp"

#include <algorithm>
#include <stdexcept>

namespace gg {

bool LinearForm::is_zero() const {
  return std::all_of(c.begin(), c.end(),
                     [](const Int& x) { return sgn(x) == 0; });
}

bool LinearForm::is_primitive() const { return vec_gcd(c) == 1; }

bool RatPoint::is_lattice_point() const {
  return std::all_of(c.begin(), c.end(),
                     [](const Rational& x) { return x.get_den() == 1; });
}

Int pair(const LinearForm& a, const LatticeVector& v) {
  if (a.dim() != v.dim()) throw std::invalid_argument("pair: dim mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.c.size(); ++i) s += a.c[i] * v.c[i];
  return s;
}

Rational pair(const LinearForm& a, const RatPoint& p) {
  if (a.dim() != p.dim()) throw std::invalid_argument("pair: dim mismatch");
  Rational s = 0;
  for (size_t i = 0; i < a.c.size(); ++i) s += Rational(a.c[i]) * p.c[i];
  return s;
}

std::pair<Int, IntVec> primitive_part(const IntVec& w) {
  Int g = vec_gcd(w);
  if (sgn(g) == 0)
    throw std::invalid_argument("zero vector has no primitive part");
  IntVec out(w.size());
  for (size_t i = 0; i < w.size(); ++i)
    mpz_divexact(out[i].get_mpz_t(), w[i].get_mpz_t(), g.get_mpz_t());
  return {g, out};
}

namespace {

IntMat forms_matrix(const std::vector<LinearForm>& forms) {
  IntMat m;
  m.reserve(forms.size());
  for (const auto& a : forms) m.push_back(a.c);
  return m;
}

RatMat forms_matrix_rat(const std::vector<LinearForm>& forms) {
  RatMat m(forms.size());
  for (size_t i = 0; i < forms.size(); ++i) {
    m[i].reserve(forms[i].c.size());
    for (const Int& x : forms[i].c) m[i].emplace_back(x);
  }
  return m;
}

}  // namespace

Rational det_forms(const std::vector<LinearForm>& forms) {
  const size_t n = forms.size();
  for (const auto& a : forms)
    if (a.dim() != n) throw std::invalid_argument("det_forms: need n forms in dimension n");
  return Rational(det_int(forms_matrix(forms)));
}

int signdet_forms(const std::vector<LinearForm>& forms) {
  return sgn(det_int(forms_matrix(forms)));
}

size_t rank_forms(const std::vector<LinearForm>& forms) {
  return rank_rat(forms_matrix_rat(forms));
}

DualFamilyResult positive_dual_family(const std::vector<LinearForm>& forms) {
  const size_t n = forms.size();
  for (const auto& a : forms)
    if (a.dim() != n)
      throw std::invalid_argument("positive_dual_family: dimension mismatch");
  IntMat a = forms_matrix(forms);
  Int det = det_int(a);
  if (sgn(det) == 0)
    throw std::invalid_argument("not a basis of the dual space");
  const int eps_det = sgn(det);

  // adj(A) has a_i(column k) = det * delta_{ik}; scale column k by the sign of
  // det and strip the gcd to get the primitive dual vector alpha_k.
  IntMat adj = adjugate_int(a);
  DualFamilyResult out;
  out.alphas.resize(n);
  out.pairings.resize(n);
  out.epsilon = (n % 2 == 0) ? eps_det : -eps_det;
  Int absdet = abs(det);
  for (size_t k = 0; k < n; ++k) {
    IntVec col(n);
    for (size_t j = 0; j < n; ++j) col[j] = eps_det * adj[j][k];
    auto [g, prim] = primitive_part(col);
    out.alphas[k] = LatticeVector(std::move(prim));
    mpz_divexact(out.pairings[k].get_mpz_t(), absdet.get_mpz_t(),
                 g.get_mpz_t());
  }
  return out;
}

std::pair<Int, LatticeVector> complement_form(
    const std::vector<LinearForm>& forms) {
  if (forms.empty()) throw std::invalid_argument("complement_form: empty family");
  const size_t n = forms[0].dim();
  if (forms.size() != n - 1)
    throw std::invalid_argument("complement_form: need n-1 forms");
  // coordinate k of det(a_1..a_{n-1}, .) as an element of Hom(Lambda, Z) = L
  IntVec gamma(n);
  IntMat base = forms_matrix(forms);
  base.emplace_back(n, Int(0));
  for (size_t k = 0; k < n; ++k) {
    for (size_t j = 0; j < n; ++j) base[n - 1][j] = (j == k) ? 1 : 0;
    gamma[k] = det_int(base);
  }
  if (vec_gcd(gamma) == 0)
    throw std::invalid_argument("complement_form: dependent forms");
  auto [s, prim] = primitive_part(gamma);
  return {s, LatticeVector(std::move(prim))};
}

StandardRelation standard_relation(const std::vector<LinearForm>& forms) {
  const size_t count = forms.size();
  if (count < 2) throw std::invalid_argument("standard_relation: need >= 2 forms");
  for (const auto& a : forms)
    if (a.is_zero())
      throw std::invalid_argument("standard_relation: zero form");
  // relations live in the kernel of the transposed coordinate matrix
  RatMat mt = transpose(forms_matrix_rat(forms));
  std::vector<RatVec> ker = kernel_rat(std::move(mt));
  if (ker.empty()) throw std::invalid_argument("no relation");
  if (ker.size() > 1) throw std::invalid_argument("relation not unique");

  RatVec lambda = ker[0];
  auto counts = [&lambda]() {
    int neg = 0, pos = 0;
    for (const Rational& x : lambda) {
      int s = sgn(x);
      if (s < 0) ++neg;
      if (s > 0) ++pos;
    }
    return std::pair<int, int>{neg, pos};
  };
  auto [neg, pos] = counts();
  if (neg > pos) {
    for (Rational& x : lambda) x = -x;
    std::tie(neg, pos) = counts();
  } else if (neg == pos) {
    for (const Rational& x : lambda) {
      int s = sgn(x);
      if (s == 0) continue;
      if (s > 0)
        for (Rational& y : lambda) y = -y;
      break;
    }
  }
  // leading nonzero coefficient gets absolute value 1
  for (const Rational& x : lambda) {
    if (sgn(x) != 0) {
      Rational scale = abs(x);
      for (Rational& y : lambda) y /= scale;
      break;
    }
  }
  StandardRelation rel;
  rel.lambda = std::move(lambda);
  for (const Rational& x : rel.lambda) {
    int s = sgn(x);
    if (s < 0) ++rel.k_minus;
    else if (s > 0) ++rel.k_plus;
    else ++rel.k_zero;
  }
  return rel;
}

bool bad_position(const std::vector<LinearForm>& forms) {
  if (forms.empty()) return false;
  const size_t n = forms[0].dim();
  if (forms.size() != n + 1)
    throw std::invalid_argument("bad_position: need n+1 forms");
  for (const auto& a : forms)
    if (a.is_zero()) throw std::invalid_argument("bad_position: zero form");
  if (rank_forms(forms) != n) return false;
  StandardRelation rel = standard_relation(forms);
  return rel.k_minus == 0 && rel.k_zero > 0;
}

UnimodularMatrix UnimodularMatrix::identity(size_t n) {
  UnimodularMatrix g;
  g.m.assign(n, IntVec(n, Int(0)));
  for (size_t i = 0; i < n; ++i) g.m[i][i] = 1;
  g.m_inv = g.m;
  return g;
}

UnimodularMatrix UnimodularMatrix::from_matrix(IntMat gm) {
  if (det_int(gm) != 1)
    throw std::invalid_argument("UnimodularMatrix: det != 1");
  UnimodularMatrix g;
  g.m_inv = adjugate_int(gm);  // adj = det * inv = inv here
  g.m = std::move(gm);
  return g;
}

LatticeVector UnimodularMatrix::act(const LatticeVector& v) const {
  const size_t n = m.size();
  IntVec out(n, Int(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i] += m[i][j] * v.c[j];
  return LatticeVector(std::move(out));
}

LinearForm UnimodularMatrix::act(const LinearForm& a) const {
  const size_t n = m.size();
  IntVec out(n, Int(0));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) out[j] += a.c[i] * m_inv[i][j];
  return LinearForm(std::move(out));
}

RatPoint UnimodularMatrix::act(const RatPoint& p) const {
  const size_t n = m.size();
  RatVec out(n, Rational(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i] += Rational(m[i][j]) * p.c[j];
  return RatPoint(std::move(out)).reduced_mod_lattice();
}

UnimodularMatrix UnimodularMatrix::compose(const UnimodularMatrix& rhs) const {
  UnimodularMatrix g;
  g.m = int_mat_mul(m, rhs.m);
  g.m_inv = int_mat_mul(rhs.m_inv, m_inv);
  return g;
}

}  // namespace gg

#pragma once

#include <utility>
#include <vector>

#include "geomgamma/rational.hpp"

namespace gg {

// Coordinates of lattice vectors refer to the fixed basis B = [e_1..e_n] of L,
// coordinates of linear forms to the dual basis C = [f_1..f_n] of Lambda.
struct LatticeVector {
  IntVec c;
  LatticeVector() = default;
  explicit LatticeVector(IntVec v) : c(std::move(v)) {}
  size_t dim() const { return c.size(); }
  bool operator==(const LatticeVector&) const = default;
};

struct LinearForm {
  IntVec c;
  LinearForm() = default;
  explicit LinearForm(IntVec v) : c(std::move(v)) {}
  size_t dim() const { return c.size(); }
  bool is_zero() const;
  bool is_primitive() const;
  bool operator==(const LinearForm&) const = default;
};

// A point of V, or a representative of V/L (normalized into [0,1)^n).
struct RatPoint {
  RatVec c;
  RatPoint() = default;
  explicit RatPoint(RatVec v) : c(std::move(v)) {}
  size_t dim() const { return c.size(); }
  RatPoint reduced_mod_lattice() const { return RatPoint(frac_coords(c)); }
  bool is_lattice_point() const;
  bool operator==(const RatPoint&) const = default;
};

Int pair(const LinearForm& a, const LatticeVector& v);
Rational pair(const LinearForm& a, const RatPoint& p);

// w = g * w' with g > 0 and w' primitive; rejects the zero vector.
std::pair<Int, IntVec> primitive_part(const IntVec& w);
inline std::pair<Int, LinearForm> primitive_form(const IntVec& w) {
  auto [g, v] = primitive_part(w);
  return {g, LinearForm(std::move(v))};
}

Rational det_forms(const std::vector<LinearForm>& forms);
int signdet_forms(const std::vector<LinearForm>& forms);
size_t rank_forms(const std::vector<LinearForm>& forms);

struct DualFamilyResult {
  std::vector<LatticeVector> alphas;  // primitive, a_j(alpha_j) = s_j > 0
  IntVec pairings;                    // s_j
  int epsilon;                        // sign of (-1)^n det(a_1..a_n)
};

// Unique primitive positive dual family to n independent forms (cofactor
// construction, then gcd-normalized rows).
DualFamilyResult positive_dual_family(const std::vector<LinearForm>& forms);

// det(a_1..a_{n-1}, .) = s*gamma with s > 0 and gamma primitive in L.
std::pair<Int, LatticeVector> complement_form(
    const std::vector<LinearForm>& forms);

struct StandardRelation {
  RatVec lambda;  // sum lambda_j a_j = 0, normalized
  int k_minus = 0;
  int k_zero = 0;
  int k_plus = 0;
};

// The normalized generator of the 1-dimensional relation space among
// a_0..a_m (requires rank = m).
StandardRelation standard_relation(const std::vector<LinearForm>& forms);

// (BP): rank n, k^- = 0 and k^0 > 0 in the standard relation.
bool bad_position(const std::vector<LinearForm>& forms);

// SL_n(Z) action: g.alpha = g*alpha, g.a = a*g^{-1}, g.v = g*v mod L.
struct UnimodularMatrix {
  IntMat m;      // n x n, det = +1
  IntMat m_inv;  // cached exact inverse
  static UnimodularMatrix identity(size_t n);
  static UnimodularMatrix from_matrix(IntMat g);  // checks det = 1
  LatticeVector act(const LatticeVector& v) const;
  LinearForm act(const LinearForm& a) const;
  RatPoint act(const RatPoint& p) const;
  // (g.x)(alpha) = x(g^{-1} alpha): new basis values of a functional given by
  // its values on e_1..e_n. Generic over the value type; needs K + K and K * Int.
  template <class K>
  std::vector<K> act_functional(const std::vector<K>& x_basis) const {
    const size_t n = m.size();
    std::vector<K> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      K acc = x_basis[i] * m_inv[i][i];
      for (size_t k = 0; k < n; ++k)
        if (k != i) acc = acc + x_basis[k] * m_inv[k][i];
      out.push_back(acc);
    }
    return out;
  }
  UnimodularMatrix compose(const UnimodularMatrix& rhs) const;
};

}  // namespace gg

#include "geomgamma/rational.hpp"

#include <algorithm>
#include <cstddef>

namespace gg {

Rational rat_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("cannot parse rational: " + s);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rational& r) { return r.get_str(); }

Rational rat_pow2(long e) {
  Int p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(),
               static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
  Rational r = e < 0 ? Rational(Int(1), p) : Rational(p);
  r.canonicalize();
  return r;
}

Int vec_gcd(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

Int vec_lcm_dens(const RatVec& v) {
  Int l = 1;
  for (const Rational& x : v)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  return l;
}

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec frac_coords(const RatVec& v) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), v[i].get_num().get_mpz_t(),
               v[i].get_den().get_mpz_t());
    out[i] = v[i] - Rational(fl);
  }
  return out;
}

Int det_int(const IntMat& m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det: not square");
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      size_t piv = k + 1;
      while (piv < n && sgn(a[piv][k]) == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

Rational det_rat(const RatMat& m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  IntMat a(n, IntVec(n));
  Rational scale = 1;
  for (size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("det: not square");
    Int l = vec_lcm_dens(m[i]);
    scale /= Rational(l);
    for (size_t j = 0; j < n; ++j) {
      Rational x = m[i][j] * Rational(l);
      a[i][j] = x.get_num();
    }
  }
  return scale * Rational(det_int(a));
}

IntMat adjugate_int(const IntMat& m) {
  const size_t n = m.size();
  IntMat adj(n, IntVec(n));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      IntMat minor(n - 1, IntVec(n - 1));
      size_t r = 0;
      for (size_t u = 0; u < n; ++u) {
        if (u == i) continue;
        size_t c = 0;
        for (size_t v = 0; v < n; ++v) {
          if (v == j) continue;
          minor[r][c++] = m[u][v];
        }
        ++r;
      }
      Int cof = det_int(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj[j][i] = cof;  // adj = transpose of the cofactor matrix
    }
  }
  return adj;
}

namespace {

// Gauss-Jordan; returns pivot columns of the reduced matrix.
std::vector<size_t> rref_inplace(RatMat& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && sgn(m[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    Rational inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

size_t rank_rat(RatMat m) { return rref_inplace(m).size(); }

std::vector<RatVec> kernel_rat(RatMat m) {
  if (m.empty()) return {};
  const size_t cols = m[0].size();
  std::vector<size_t> pivots = rref_inplace(m);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    RatVec v(cols, Rational(0));
    v[free_c] = 1;
    for (size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -m[k][free_c];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMat inverse_rat(const RatMat& m) {
  const size_t n = m.size();
  RatMat aug(n, RatVec(2 * n, Rational(0)));
  for (size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("inverse: not square");
    for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  std::vector<size_t> pivots = rref_inplace(aug);
  if (pivots.size() != n) throw std::invalid_argument("inverse: singular matrix");
  RatMat inv(n, RatVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

RatVec mat_vec(const RatMat& m, const RatVec& v) {
  RatVec out(m.size(), Rational(0));
  for (size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMat out(n, RatVec(m, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (sgn(a[i][l]) == 0) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

RatMat transpose(const RatMat& m) {
  if (m.empty()) return {};
  RatMat out(m[0].size(), RatVec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  return out;
}

IntMat int_mat_mul(const IntMat& a, const IntMat& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMat out(n, IntVec(m, Int(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l)
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
  return out;
}

namespace {

IntMat identity_int(size_t n) {
  IntMat e(n, IntVec(n, Int(0)));
  for (size_t i = 0; i < n; ++i) e[i][i] = 1;
  return e;
}

}  // namespace

SmithDecomposition smith_decomposition(IntMat a) {
  const size_t n = a.size();
  // Maintain a_orig = p * a * q throughout: every elementary operation on a is
  // compensated by the inverse operation on p (rows) or q (columns).
  IntMat p = identity_int(n), q = identity_int(n);

  auto swap_rows = [&](size_t i, size_t j) {
    std::swap(a[i], a[j]);
    for (size_t k = 0; k < n; ++k) std::swap(p[k][i], p[k][j]);
  };
  auto swap_cols = [&](size_t i, size_t j) {
    for (size_t k = 0; k < n; ++k) std::swap(a[k][i], a[k][j]);
    std::swap(q[i], q[j]);
  };
  auto add_row = [&](size_t dst, size_t src, const Int& f) {
    // a[dst] += f*a[src]  =>  p col dst compensates with -f
    for (size_t k = 0; k < n; ++k) a[dst][k] += f * a[src][k];
    for (size_t k = 0; k < n; ++k) p[k][src] -= f * p[k][dst];
  };
  auto add_col = [&](size_t dst, size_t src, const Int& f) {
    for (size_t k = 0; k < n; ++k) a[k][dst] += f * a[k][src];
    for (size_t k = 0; k < n; ++k) q[src][k] -= f * q[dst][k];
  };
  auto negate_row = [&](size_t i) {
    for (size_t k = 0; k < n; ++k) a[i][k] = -a[i][k];
    for (size_t k = 0; k < n; ++k) p[k][i] = -p[k][i];
  };

  for (size_t t = 0; t < n; ++t) {
    // find a nonzero pivot in the trailing block
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < n && !found; ++i)
      for (size_t j = t; j < n && !found; ++j)
        if (sgn(a[i][j]) != 0) { pi = i; pj = j; found = true; }
    if (!found) throw std::invalid_argument("smith: singular matrix");
    if (pi != t) swap_rows(t, pi);
    if (pj != t) swap_cols(t, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = t + 1; i < n; ++i) {
        while (sgn(a[i][t]) != 0) {
          Int f;
          mpz_fdiv_q(f.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
          add_row(i, t, Int(-f));
          if (sgn(a[i][t]) != 0) { swap_rows(t, i); dirty = true; }
        }
      }
      for (size_t j = t + 1; j < n; ++j) {
        while (sgn(a[t][j]) != 0) {
          Int f;
          mpz_fdiv_q(f.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
          add_col(j, t, Int(-f));
          if (sgn(a[t][j]) != 0) { swap_cols(t, j); dirty = true; }
        }
      }
    }
    if (sgn(a[t][t]) < 0) negate_row(t);
  }

  // enforce the divisibility chain d_t | d_{t+1}
  for (size_t t = 0; t + 1 < n; ++t) {
    for (size_t u = t + 1; u < n; ++u) {
      Int r;
      mpz_mod(r.get_mpz_t(), a[u][u].get_mpz_t(), a[t][t].get_mpz_t());
      if (sgn(r) == 0) continue;
      // classic trick: fold d_u into row/col t and re-reduce the 2x2 block
      add_col(t, u, Int(1));
      bool dirty = true;
      while (dirty) {
        dirty = false;
        while (sgn(a[u][t]) != 0) {
          Int f;
          mpz_fdiv_q(f.get_mpz_t(), a[u][t].get_mpz_t(), a[t][t].get_mpz_t());
          add_row(u, t, Int(-f));
          if (sgn(a[u][t]) != 0) { swap_rows(t, u); dirty = true; }
        }
        while (sgn(a[t][u]) != 0) {
          Int f;
          mpz_fdiv_q(f.get_mpz_t(), a[t][u].get_mpz_t(), a[t][t].get_mpz_t());
          add_col(u, t, Int(-f));
          if (sgn(a[t][u]) != 0) { swap_cols(t, u); dirty = true; }
        }
      }
      if (sgn(a[t][t]) < 0) negate_row(t);
      if (sgn(a[u][u]) < 0) negate_row(u);
    }
  }

  SmithDecomposition out;
  out.p = std::move(p);
  out.q = std::move(q);
  out.d.resize(n);
  for (size_t i = 0; i < n; ++i) out.d[i] = a[i][i];
  return out;
}

}  // namespace gg

#include "geomgamma/bernoulli.hpp"

#include <mutex>

namespace gg {

namespace {
std::mutex bern_mutex;
std::vector<Rational> bern_memo;
}  // namespace

Rational bernoulli_number(unsigned k) {
  std::lock_guard<std::mutex> lock(bern_mutex);
  if (bern_memo.empty()) bern_memo = {Rational(1), rat(-1, 2)};
  while (bern_memo.size() <= k) {
    // sum_{j<=m} C(m+1, j) B_j = 0 for m >= 1
    unsigned m = static_cast<unsigned>(bern_memo.size());
    if (m % 2 == 1 && m > 1) {
      bern_memo.emplace_back(0);
      continue;
    }
    Rational acc = 0;
    Int binom = 1;  // C(m+1, j)
    for (unsigned j = 0; j < m; ++j) {
      if (j > 0) {
        binom *= (m + 2 - j);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), j);
      } else {
        binom = 1;
      }
      acc += Rational(binom) * bern_memo[j];
    }
    bern_memo.push_back(-acc / Rational(static_cast<long>(m) + 1));
  }
  return bern_memo[k];
}

Int parallelepiped_index(const std::vector<LinearForm>& forms) {
  DualFamilyResult dual = positive_dual_family(forms);
  const size_t n = forms.size();
  IntMat m(n, IntVec(n));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) m[i][j] = dual.alphas[j].c[i];
  return abs(det_int(m));
}

ParallelepipedSet enum_parallelepiped(const std::vector<LinearForm>& forms,
                                      const RatPoint& v) {
  const size_t n = forms.size();
  if (n == 0 || forms[0].dim() != n || v.dim() != n)
    throw std::invalid_argument("enum_parallelepiped: dimension mismatch");
  if (signdet_forms(forms) == 0)
    throw std::invalid_argument("enum_parallelepiped: dependent forms");
  DualFamilyResult dual = positive_dual_family(forms);

  IntMat m(n, IntVec(n));  // columns are the alpha_j
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) m[i][j] = dual.alphas[j].c[i];
  SmithDecomposition snf = smith_decomposition(m);

  RatMat m_rat(n, RatVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m_rat[i][j] = Rational(m[i][j]);
  RatMat m_inv = inverse_rat(m_rat);

  Int index = 1;
  for (const Int& d : snf.d) index *= d;

  ParallelepipedSet out;
  out.index = index;
  out.points.reserve(index.fits_ulong_p() ? index.get_ui() : 0);

  // coset representatives p * (c_1 .. c_n), 0 <= c_i < d_i, each shifted into
  // the box by exact floors in alpha-coordinates
  IntVec counter(n, Int(0));
  while (true) {
    RatVec delta0(n);
    for (size_t i = 0; i < n; ++i) {
      Int acc = 0;
      for (size_t j = 0; j < n; ++j) acc += snf.p[i][j] * counter[j];
      delta0[i] = v.c[i] + Rational(acc);
    }
    RatVec t = mat_vec(m_inv, delta0);
    RatVec tf = frac_coords(t);
    RatVec delta(n, Rational(0));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) delta[i] += Rational(m[i][j]) * tf[j];
    out.points.emplace_back(std::move(delta));

    size_t pos = 0;
    while (pos < n) {
      counter[pos] += 1;
      if (counter[pos] < snf.d[pos]) break;
      counter[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  if (Int(static_cast<long>(out.points.size())) != index)
    throw std::runtime_error("enum_parallelepiped: coset count mismatch");
  return out;
}

}  // namespace gg

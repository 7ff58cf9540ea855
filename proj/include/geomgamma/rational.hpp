#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace gg {

// Exact arithmetic base types. mpq_class keeps fractions canonical
// (reduced, positive denominator) which is exactly the Rational contract.
using Int = mpz_class;
using Rational = mpq_class;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rat_from_string(const std::string& s);
std::string rat_to_string(const Rational& r);
Rational rat_pow2(long e);  // 2^e, any sign of e

inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sgn(const Rational& x) { return mpq_sgn(x.get_mpq_t()); }

// gcd of absolute values, 0 for the zero vector
Int vec_gcd(const IntVec& v);
Int vec_lcm_dens(const RatVec& v);

Rational dot(const RatVec& a, const RatVec& b);
RatVec frac_coords(const RatVec& v);  // each coordinate reduced into [0,1)

Int det_int(const IntMat& m);        // fraction-free Bareiss elimination
Rational det_rat(const RatMat& m);   // row-scaled to integers, then Bareiss
IntMat adjugate_int(const IntMat& m);

size_t rank_rat(RatMat m);
// basis of { x : m x = 0 }
std::vector<RatVec> kernel_rat(RatMat m);
RatMat inverse_rat(const RatMat& m);  // throws on singular input
RatVec mat_vec(const RatMat& m, const RatVec& v);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatMat transpose(const RatMat& m);
IntMat int_mat_mul(const IntMat& a, const IntMat& b);

// Smith decomposition a = p * diag(d) * q with p, q unimodular and d_i > 0
// (requires det(a) != 0).
struct SmithDecomposition {
  IntMat p;
  IntVec d;
  IntMat q;
};
SmithDecomposition smith_decomposition(IntMat a);

}  // namespace gg

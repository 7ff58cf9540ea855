#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "geomgamma/bigfloat.hpp"
#include "geomgamma/rational.hpp"

namespace gg {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// Q[z]/(m(z)) with m monic, integral, irreducible (checked at creation).
class NumberField {
 public:
  static FieldPtr create(IntVec minpoly_ascending);

  int degree() const { return degree_; }
  const IntVec& minpoly() const { return minpoly_; }
  // z^{degree+k} reduced to the power basis, k = 0 .. degree-2
  const std::vector<RatVec>& power_reduction() const { return power_reduction_; }

 private:
  NumberField() = default;
  IntVec minpoly_;
  int degree_ = 0;
  std::vector<RatVec> power_reduction_;
};

class NFElement {
 public:
  NFElement() = default;
  NFElement(FieldPtr field, RatVec coeffs);

  const FieldPtr& field() const { return field_; }
  const RatVec& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const;  // all non-constant coordinates vanish
  Rational rational_value() const;

  friend NFElement operator+(const NFElement& a, const NFElement& b);
  friend NFElement operator-(const NFElement& a, const NFElement& b);
  friend NFElement operator-(const NFElement& a);
  friend NFElement operator*(const NFElement& a, const NFElement& b);
  friend NFElement operator*(const NFElement& a, const Rational& s);
  friend NFElement operator*(const NFElement& a, const Int& s);
  friend NFElement operator/(const NFElement& a, const NFElement& b);
  NFElement inverse() const;  // throws on zero
  NFElement pow(long e) const;
  bool operator==(const NFElement& o) const;

 private:
  FieldPtr field_;
  RatVec coeffs_;
};

NFElement nf_from_rational(const FieldPtr& field, const Rational& r);
NFElement nf_generator(const FieldPtr& field);
Rational trace(const NFElement& x);

struct RatInterval {
  Rational lo, hi;
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  int sign() const;  // throws if the interval straddles zero
  Rational width() const { return hi - lo; }
};
RatInterval iv_add(const RatInterval& a, const RatInterval& b);
RatInterval iv_sub(const RatInterval& a, const RatInterval& b);
RatInterval iv_mul(const RatInterval& a, const RatInterval& b);

// One embedding sigma_k. Real handles carry an exact isolating interval that
// refines monotonically under bisection; complex handles carry a certified
// floating approximation. Refinement mutates cached state: confine a handle
// to one thread or copy it (copies are cheap and refine independently).
class EmbeddingHandle {
 public:
  bool is_real() const { return is_real_; }
  int index() const { return index_; }
  const FieldPtr& field() const { return field_; }

  // real only: isolating interval of the root, refined to width <= 2^-bits
  RatInterval root_interval(long bits);
  // interval enclosure of sigma(x), root refined to width <= 2^-bits
  RatInterval enclose(const NFElement& x, long bits);
  // complex only: certified root approximation at >= prec bits
  BigComplex root_approx(long prec);

  friend class NumberField;
  friend std::vector<EmbeddingHandle> real_embeddings(const FieldPtr&);
  friend std::vector<EmbeddingHandle> complex_embeddings(const FieldPtr&);

 private:
  FieldPtr field_;
  int index_ = 0;
  bool is_real_ = true;
  RatInterval iv_{};        // real case
  BigComplex approx_{53};   // complex case
  long approx_prec_ = 0;
};

// All real roots of the minimal polynomial, ascending.
std::vector<EmbeddingHandle> real_embeddings(const FieldPtr& field);
// Non-real embeddings, upper half-plane first (imaginary part descending).
std::vector<EmbeddingHandle> complex_embeddings(const FieldPtr& field);

int sign_under_embedding(const NFElement& x, EmbeddingHandle& sigma,
                         long max_bits = 1L << 14);
BigComplex embed(const NFElement& x, EmbeddingHandle& sigma, long prec);
bool is_totally_positive(const NFElement& x, long max_bits = 1L << 14);

}  // namespace gg

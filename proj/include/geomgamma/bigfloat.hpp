#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "geomgamma/rational.hpp"

namespace gg {

// Thin RAII wrapper over mpfr_t with explicit working precision. Constructors
// from exact values take the target precision; binary operations allocate the
// result at the larger operand precision, so exact small constants never
// truncate a high-precision partner.
class BigFloat {
 public:
  explicit BigFloat(long prec = 53) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  BigFloat(long value, long prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, value, MPFR_RNDN); }
  BigFloat(const Int& value, long prec) { mpfr_init2(v_, prec); mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN); }
  BigFloat(const Rational& value, long prec) { mpfr_init2(v_, prec); mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN); }
  BigFloat(double value, long prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, value, MPFR_RNDN); }

  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~BigFloat() { mpfr_clear(v_); }

  long prec() const { return mpfr_get_prec(v_); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  bool is_finite() const { return mpfr_number_p(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // decimal string with the given number of significant digits
  std::string to_string(int digits = 20) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  static BigFloat pi(long prec) { BigFloat r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
  static BigFloat pow2(long e, long prec) { BigFloat r(1L, prec); mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN); return r; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { BigFloat r(join(a, b)); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { BigFloat r(join(a, b)); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { BigFloat r(join(a, b)); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { BigFloat r(join(a, b)); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
  friend BigFloat operator-(const BigFloat& a) { BigFloat r(a.prec()); mpfr_neg(r.v_, a.v_, MPFR_RNDN); return r; }

  friend BigFloat operator*(const BigFloat& a, long b) { BigFloat r(a.prec()); mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
  friend BigFloat operator*(const BigFloat& a, int b) { return a * static_cast<long>(b); }
  friend BigFloat operator*(const BigFloat& a, const Int& b) { BigFloat r(a.prec()); mpfr_mul_z(r.v_, a.v_, b.get_mpz_t(), MPFR_RNDN); return r; }
  friend BigFloat operator/(const BigFloat& a, long b) { BigFloat r(a.prec()); mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
  friend BigFloat operator/(const BigFloat& a, int b) { return a / static_cast<long>(b); }
  // no silent double-to-long truncation: wrap literals in BigFloat(x, prec)
  friend BigFloat operator*(const BigFloat&, double) = delete;
  friend BigFloat operator/(const BigFloat&, double) = delete;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

 private:
  static long join(const BigFloat& a, const BigFloat& b) { return std::max(a.prec(), b.prec()); }
  mpfr_t v_;
};

BigFloat abs(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);
BigFloat exp(const BigFloat& a);
BigFloat log(const BigFloat& a);
BigFloat sin(const BigFloat& a);
BigFloat cos(const BigFloat& a);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat floor(const BigFloat& a);
BigFloat round_nearest(const BigFloat& a);
BigFloat hypot(const BigFloat& a, const BigFloat& b);
BigFloat pow_si(const BigFloat& a, long e);
BigFloat min(const BigFloat& a, const BigFloat& b);
BigFloat max(const BigFloat& a, const BigFloat& b);

class BigComplex {
 public:
  explicit BigComplex(long prec = 53) : re_(prec), im_(prec) {}
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  BigComplex(long re, long prec) : re_(re, prec), im_(prec) {}
  BigComplex(const Rational& re, long prec) : re_(re, prec), im_(prec) {}
  BigComplex(const Rational& re, const Rational& im, long prec) : re_(re, prec), im_(im, prec) {}

  const BigFloat& real() const { return re_; }
  const BigFloat& imag() const { return im_; }
  long prec() const { return std::max(re_.prec(), im_.prec()); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
  std::string to_string(int digits = 20) const;

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re_, -a.im_}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend BigComplex operator*(const BigComplex& a, const BigFloat& s) { return {a.re_ * s, a.im_ * s}; }
  friend BigComplex operator*(const BigComplex& a, long s) { return {a.re_ * s, a.im_ * s}; }
  friend BigComplex operator*(const BigComplex& a, const Int& s) { return {a.re_ * s, a.im_ * s}; }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator/(const BigComplex& a, long s) { return {a.re_ / s, a.im_ / s}; }

 private:
  BigFloat re_, im_;
};

BigFloat abs(const BigComplex& z);
BigComplex conj(const BigComplex& z);
BigComplex inverse(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);  // principal branch
// e^{i t}
BigComplex cis(const BigFloat& t);
BigComplex pow_si(const BigComplex& z, long e);

}  // namespace gg

#include "geomgamma/bigfloat.hpp"

#include <cstdio>
#include <vector>

namespace gg {

std::string BigFloat::to_string(int digits) const {
  char fmt[32];
  std::snprintf(fmt, sizeof(fmt), "%%.%dRg", digits);
  int need = mpfr_snprintf(nullptr, 0, fmt, v_);
  std::vector<char> buf(need + 1);
  mpfr_snprintf(buf.data(), buf.size(), fmt, v_);
  return std::string(buf.data());
}

BigFloat abs(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigFloat sin(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigFloat cos(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(std::max(y.prec(), x.prec()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat floor(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_floor(r.raw(), a.raw());
  return r;
}

BigFloat round_nearest(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_round(r.raw(), a.raw());
  return r;
}

BigFloat hypot(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::max(a.prec(), b.prec()));
  mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat pow_si(const BigFloat& a, long e) {
  BigFloat r(a.prec());
  mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}

BigFloat min(const BigFloat& a, const BigFloat& b) { return a < b ? a : b; }
BigFloat max(const BigFloat& a, const BigFloat& b) { return a > b ? a : b; }

std::string BigComplex::to_string(int digits) const {
  std::string s = re_.to_string(digits);
  if (im_.sign() >= 0)
    s += " + " + im_.to_string(digits) + "i";
  else
    s += " - " + (-im_).to_string(digits) + "i";
  return s;
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigFloat nrm = b.re_ * b.re_ + b.im_ * b.im_;
  return {(a.re_ * b.re_ + a.im_ * b.im_) / nrm,
          (a.im_ * b.re_ - a.re_ * b.im_) / nrm};
}

BigFloat abs(const BigComplex& z) { return hypot(z.real(), z.imag()); }

BigComplex conj(const BigComplex& z) { return {z.real(), -z.imag()}; }

BigComplex inverse(const BigComplex& z) {
  BigFloat nrm = z.real() * z.real() + z.imag() * z.imag();
  return {z.real() / nrm, -z.imag() / nrm};
}

BigComplex exp(const BigComplex& z) {
  long p = z.prec();
  BigFloat m = exp(z.real());
  BigFloat c(p), s(p);
  mpfr_sin_cos(s.raw(), c.raw(), z.imag().raw(), MPFR_RNDN);
  return {m * c, m * s};
}

BigComplex log(const BigComplex& z) {
  return {log(abs(z)), atan2(z.imag(), z.real())};
}

BigComplex cis(const BigFloat& t) {
  long p = t.prec();
  BigFloat c(p), s(p);
  mpfr_sin_cos(s.raw(), c.raw(), t.raw(), MPFR_RNDN);
  return {c, s};
}

BigComplex pow_si(const BigComplex& z, long e) {
  if (e == 0) return BigComplex(1, z.prec());
  bool invert = e < 0;
  unsigned long k = invert ? -static_cast<unsigned long>(e) : e;
  BigComplex base = z, acc(1, z.prec());
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return invert ? inverse(acc) : acc;
}

}  // namespace gg

#include "geomgamma/numfield.hpp"

#include <algorithm>
#include <map>

namespace gg {

namespace {

// -------- dense rational polynomials, ascending coefficients --------

using RatPoly = RatVec;

void poly_trim(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int poly_deg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly poly_derivative(const RatPoly& p) {
  RatPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  return d;
}

Rational poly_eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// remainder of a by b (b nonzero)
RatPoly poly_rem(RatPoly a, const RatPoly& b) {
  poly_trim(a);
  const int db = poly_deg(b);
  while (poly_deg(a) >= db) {
    Rational f = a.back() / b.back();
    int shift = poly_deg(a) - db;
    for (int i = 0; i <= db; ++i) a[i + shift] -= f * b[i];
    poly_trim(a);
  }
  return a;
}

// divide by the positive content, keeping signs
void poly_primitivize(RatPoly& p) {
  poly_trim(p);
  if (p.empty()) return;
  Int l = vec_lcm_dens(p);
  IntVec num(p.size());
  for (size_t i = 0; i < p.size(); ++i) num[i] = Rational(p[i] * Rational(l)).get_num();
  Int g = vec_gcd(num);
  Rational scale = Rational(l) / Rational(g);
  for (Rational& c : p) c *= scale;
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain;
  chain.push_back(p);
  chain.push_back(poly_derivative(p));
  poly_primitivize(chain.back());
  while (poly_deg(chain.back()) > 0) {
    RatPoly r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;  // squarefree input never reaches this
    for (Rational& c : r) c = -c;
    poly_primitivize(r);
    chain.push_back(std::move(r));
  }
  return chain;
}

int sturm_variations(const std::vector<RatPoly>& chain, const Rational& x) {
  int var = 0, prev = 0;
  for (const RatPoly& p : chain) {
    int s = sgn(poly_eval(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

RatPoly minpoly_rat(const NumberField& K) {
  RatPoly p;
  p.reserve(K.minpoly().size());
  for (const Int& c : K.minpoly()) p.emplace_back(c);
  return p;
}

RatInterval interval_point(const Rational& x) { return {x, x}; }

RatInterval poly_eval_interval(const RatPoly& p, const RatInterval& x) {
  RatInterval acc = interval_point(Rational(0));
  for (size_t i = p.size(); i-- > 0;)
    acc = iv_add(iv_mul(acc, x), interval_point(p[i]));
  return acc;
}

// -------- irreducibility screen --------

// all monic integral divisor candidates of degree <= 2 (enough for n <= 4)
bool has_small_monic_factor(const IntVec& m) {
  const int n = static_cast<int>(m.size()) - 1;
  const Int& c0 = m[0];
  if (sgn(c0) == 0) return true;  // z divides
  std::vector<Int> divisors;
  Int a = abs(c0);
  for (Int d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      divisors.push_back(d);
      divisors.push_back(a / d);
    }
  }
  RatPoly mp;
  for (const Int& c : m) mp.emplace_back(c);
  // linear factors z - r, r | c0
  for (const Int& d : divisors)
    for (int s : {1, -1}) {
      Rational r(s * d);
      if (sgn(poly_eval(mp, r)) == 0) return true;
    }
  if (n < 4) return false;
  // quadratic factors z^2 + p z + q, q | c0 (monic, Gauss's lemma)
  for (const Int& dq : divisors)
    for (int s : {1, -1}) {
      Int q = s * dq;
      // remainder of m modulo z^2 + p z + q is linear in p; bound |p| by the
      // coefficient sizes and test a window
      Int bound = 1;
      for (const Int& c : m) bound += abs(c);
      for (Int p = -bound; p <= bound; ++p) {
        RatPoly quad = {Rational(q), Rational(p), Rational(1)};
        RatPoly r = poly_rem(mp, quad);
        if (r.empty()) return true;
      }
    }
  return false;
}

}  // namespace

int RatInterval::sign() const {
  if (sgn(lo) > 0) return 1;
  if (sgn(hi) < 0) return -1;
  if (sgn(lo) == 0 && sgn(hi) == 0) return 0;
  throw std::runtime_error("interval sign: straddles zero");
}

RatInterval iv_add(const RatInterval& a, const RatInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval iv_sub(const RatInterval& a, const RatInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

RatInterval iv_mul(const RatInterval& a, const RatInterval& b) {
  Rational c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo,
           c4 = a.hi * b.hi;
  return {std::min(std::min(c1, c2), std::min(c3, c4)),
          std::max(std::max(c1, c2), std::max(c3, c4))};
}

FieldPtr NumberField::create(IntVec minpoly_ascending) {
  IntVec& m = minpoly_ascending;
  while (!m.empty() && sgn(m.back()) == 0) m.pop_back();
  if (m.size() < 3) throw std::invalid_argument("number field: degree must be >= 2");
  if (m.back() != 1) throw std::invalid_argument("number field: minimal polynomial must be monic");
  const int n = static_cast<int>(m.size()) - 1;

  RatPoly mp;
  for (const Int& c : m) mp.emplace_back(c);
  RatPoly g = poly_rem(mp, poly_derivative(mp));
  {
    // squarefree <=> gcd(m, m') constant; one more remainder step settles it
    RatPoly a = poly_derivative(mp), b = g;
    poly_primitivize(b);
    while (!b.empty() && poly_deg(b) > 0) {
      RatPoly r = poly_rem(a, b);
      poly_primitivize(r);
      a = std::move(b);
      b = std::move(r);
    }
    if (b.empty() && poly_deg(a) > 0)
      throw std::invalid_argument("number field: minimal polynomial is not squarefree");
  }
  // complete for degree <= 4; for higher degrees this is a screen against
  // linear and quadratic factors only
  if (has_small_monic_factor(m))
    throw std::invalid_argument("number field: minimal polynomial is reducible");

  auto K = std::shared_ptr<NumberField>(new NumberField());
  K->minpoly_ = m;
  K->degree_ = n;
  // z^n = -(m_0 + ... + m_{n-1} z^{n-1}); higher powers by shifting
  RatVec zn(n);
  for (int i = 0; i < n; ++i) zn[i] = Rational(-m[i]);
  K->power_reduction_.push_back(zn);
  for (int k = 1; k <= n - 2; ++k) {
    const RatVec& prev = K->power_reduction_.back();
    RatVec cur(n, Rational(0));
    for (int i = 0; i + 1 < n; ++i) cur[i + 1] = prev[i];
    for (int i = 0; i < n; ++i) cur[i] += prev[n - 1] * zn[i];
    K->power_reduction_.push_back(std::move(cur));
  }
  return K;
}

NFElement::NFElement(FieldPtr field, RatVec coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != field_->degree())
    throw std::invalid_argument("NFElement: coefficient count != degree");
}

bool NFElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return sgn(c) == 0; });
}

bool NFElement::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

Rational NFElement::rational_value() const {
  if (!is_rational()) throw std::runtime_error("NFElement: not rational");
  return coeffs_[0];
}

namespace {

void check_same_field(const NFElement& a, const NFElement& b) {
  if (a.field() != b.field())
    throw std::invalid_argument("NFElement: mixed fields");
}

}  // namespace

NFElement operator+(const NFElement& a, const NFElement& b) {
  check_same_field(a, b);
  RatVec c = a.coeffs();
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
  return NFElement(a.field(), std::move(c));
}

NFElement operator-(const NFElement& a, const NFElement& b) {
  check_same_field(a, b);
  RatVec c = a.coeffs();
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs()[i];
  return NFElement(a.field(), std::move(c));
}

NFElement operator-(const NFElement& a) {
  RatVec c = a.coeffs();
  for (Rational& x : c) x = -x;
  return NFElement(a.field(), std::move(c));
}

NFElement operator*(const NFElement& a, const NFElement& b) {
  check_same_field(a, b);
  const int n = a.field()->degree();
  RatVec prod(2 * n - 1, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (sgn(a.coeffs()[i]) == 0) continue;
    for (int j = 0; j < n; ++j)
      prod[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  RatVec out(prod.begin(), prod.begin() + n);
  const auto& red = a.field()->power_reduction();
  for (int k = 0; k <= n - 2; ++k) {
    if (sgn(prod[n + k]) == 0) continue;
    for (int i = 0; i < n; ++i) out[i] += prod[n + k] * red[k][i];
  }
  return NFElement(a.field(), std::move(out));
}

NFElement operator*(const NFElement& a, const Rational& s) {
  RatVec c = a.coeffs();
  for (Rational& x : c) x *= s;
  return NFElement(a.field(), std::move(c));
}

NFElement operator*(const NFElement& a, const Int& s) {
  return a * Rational(s);
}

NFElement operator/(const NFElement& a, const NFElement& b) {
  return a * b.inverse();
}

NFElement NFElement::inverse() const {
  if (is_zero()) throw std::runtime_error("NFElement: inversion of zero");
  // extended Euclid: u*g + v*m = 1 in Q[z], inverse = u mod m
  RatPoly r0 = minpoly_rat(*field_);
  RatPoly r1 = coeffs_;
  poly_trim(r1);
  RatPoly s0, s1 = {Rational(1)};
  s0.clear();
  while (poly_deg(r1) > 0) {
    // quotient of r0 by r1
    RatPoly q;
    RatPoly rem = r0;
    const int d1 = poly_deg(r1);
    q.assign(std::max(0, poly_deg(rem) - d1) + 1, Rational(0));
    while (poly_deg(rem) >= d1) {
      Rational f = rem.back() / r1.back();
      int shift = poly_deg(rem) - d1;
      q[shift] = f;
      for (int i = 0; i <= d1; ++i) rem[i + shift] -= f * r1[i];
      poly_trim(rem);
    }
    // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
    RatPoly qs(q.size() + s1.size(), Rational(0));
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    poly_trim(qs);
    RatPoly s2 = s0;
    s2.resize(std::max(s2.size(), qs.size()), Rational(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    poly_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty())
    throw std::runtime_error("NFElement: not invertible (reducible modulus?)");
  Rational unit = r1[0];
  RatVec out(field_->degree(), Rational(0));
  for (size_t i = 0; i < s1.size(); ++i) out[i] = s1[i] / unit;
  return NFElement(field_, std::move(out));
}

NFElement NFElement::pow(long e) const {
  NFElement base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : e;
  NFElement acc = nf_from_rational(field_, 1);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool NFElement::operator==(const NFElement& o) const {
  return field_ == o.field_ && coeffs_ == o.coeffs_;
}

NFElement nf_from_rational(const FieldPtr& field, const Rational& r) {
  RatVec c(field->degree(), Rational(0));
  c[0] = r;
  return NFElement(field, std::move(c));
}

NFElement nf_generator(const FieldPtr& field) {
  RatVec c(field->degree(), Rational(0));
  c[1] = 1;
  return NFElement(field, std::move(c));
}

Rational trace(const NFElement& x) {
  // sum of diagonal entries of the multiplication-by-x matrix; column j is
  // x * z^j, built incrementally by one power shift at a time
  const int n = x.field()->degree();
  const auto& red = x.field()->power_reduction();
  RatVec col = x.coeffs();
  Rational tr = col[0];
  for (int j = 1; j < n; ++j) {
    RatVec next(n, Rational(0));
    for (int i = 0; i + 1 < n; ++i) next[i + 1] = col[i];
    if (sgn(col[n - 1]) != 0)
      for (int i = 0; i < n; ++i) next[i] += col[n - 1] * red[0][i];
    col = std::move(next);
    tr += col[j];
  }
  return tr;
}

RatInterval EmbeddingHandle::root_interval(long bits) {
  if (!is_real_) throw std::runtime_error("root_interval: complex embedding");
  RatPoly m = minpoly_rat(*field_);
  Rational target = rat_pow2(-std::min<long>(bits, 1L << 20));
  int sign_lo = sgn(poly_eval(m, iv_.lo));
  while (iv_.width() > target) {
    Rational mid = (iv_.lo + iv_.hi) / 2;
    int sm = sgn(poly_eval(m, mid));
    if (sm == 0) {  // cannot happen for an irreducible minpoly of degree >= 2
      iv_.lo = mid;
      iv_.hi = mid;
      break;
    }
    if (sm == sign_lo)
      iv_.lo = mid;
    else
      iv_.hi = mid;
  }
  return iv_;
}

RatInterval EmbeddingHandle::enclose(const NFElement& x, long bits) {
  RatInterval root = root_interval(bits);
  return poly_eval_interval(x.coeffs(), root);
}

std::vector<EmbeddingHandle> real_embeddings(const FieldPtr& field) {
  RatPoly m = minpoly_rat(*field);
  auto chain = sturm_chain(m);
  Rational bound = 1;
  for (const Int& c : field->minpoly()) {
    Rational a(abs(c));
    if (a > bound) bound = a;
  }
  bound += 1;

  std::vector<RatInterval> isolated;
  std::vector<RatInterval> work{{-bound, bound}};
  while (!work.empty()) {
    RatInterval iv = work.back();
    work.pop_back();
    int count = sturm_variations(chain, iv.lo) - sturm_variations(chain, iv.hi);
    if (count == 0) continue;
    if (count == 1 && sgn(poly_eval(m, iv.lo)) * sgn(poly_eval(m, iv.hi)) < 0) {
      isolated.push_back(iv);
      continue;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    work.push_back({iv.lo, mid});
    work.push_back({mid, iv.hi});
  }
  std::sort(isolated.begin(), isolated.end(),
            [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });

  std::vector<EmbeddingHandle> out;
  for (size_t i = 0; i < isolated.size(); ++i) {
    EmbeddingHandle h;
    h.field_ = field;
    h.index_ = static_cast<int>(i);
    h.is_real_ = true;
    h.iv_ = isolated[i];
    out.push_back(std::move(h));
  }
  return out;
}

namespace {

BigComplex poly_eval_c(const IntVec& p, const BigComplex& z, long prec) {
  BigComplex acc(0, prec);
  for (size_t i = p.size(); i-- > 0;)
    acc = acc * z + BigComplex(BigFloat(p[i], prec), BigFloat(0L, prec));
  return acc;
}

// Aberth-Ehrlich iteration for all roots at the given precision.
std::vector<BigComplex> all_roots_mpfr(const IntVec& m, long prec) {
  const int n = static_cast<int>(m.size()) - 1;
  long wp = prec + 32;
  IntVec dm(n);
  for (int i = 1; i <= n; ++i) dm[i - 1] = m[i] * i;

  Rational bound = 1;
  for (const Int& c : m) {
    Rational a(abs(c));
    if (a > bound) bound = a;
  }
  bound += 1;
  BigFloat r(bound, wp);
  std::vector<BigComplex> z;
  BigFloat pi_v = BigFloat::pi(wp);
  for (int k = 0; k < n; ++k) {
    // staggered start angles avoid symmetric deadlocks
    BigFloat theta = pi_v * (2 * k + 1) / (2 * n) + BigFloat(0.2937, wp);
    z.push_back(cis(theta) * (r * BigFloat(0.7, wp)));
  }
  for (int it = 0; it < 200 + static_cast<int>(prec); ++it) {
    BigFloat worst(0L, wp);
    for (int k = 0; k < n; ++k) {
      BigComplex p = poly_eval_c(m, z[k], wp);
      BigComplex dp = poly_eval_c(dm, z[k], wp);
      BigComplex newton = p / dp;
      BigComplex sum(0, wp);
      for (int j = 0; j < n; ++j)
        if (j != k) sum = sum + inverse(z[k] - z[j]);
      BigComplex corr = newton / (BigComplex(1, wp) - newton * sum);
      z[k] = z[k] - corr;
      worst = max(worst, abs(corr));
    }
    if (worst < BigFloat::pow2(-prec - 16, wp)) break;
  }
  return z;
}

}  // namespace

BigComplex EmbeddingHandle::root_approx(long prec) {
  if (is_real_) {
    RatInterval iv = root_interval(prec + 8);
    Rational mid = (iv.lo + iv.hi) / 2;
    return BigComplex(BigFloat(mid, prec + 8), BigFloat(0L, prec + 8));
  }
  if (approx_prec_ >= prec) return approx_;
  // Newton polish from the cached approximation
  long wp = prec + 32;
  const IntVec& m = field_->minpoly();
  IntVec dm(m.size() - 1);
  for (size_t i = 1; i < m.size(); ++i) dm[i - 1] = m[i] * static_cast<long>(i);
  BigComplex zv = approx_;
  for (int it = 0; it < 64; ++it) {
    BigComplex p = poly_eval_c(m, zv, wp);
    BigComplex dp = poly_eval_c(dm, zv, wp);
    BigComplex corr = p / dp;
    zv = zv - corr;
    if (abs(corr) < BigFloat::pow2(-prec - 16, wp) * (BigFloat(1L, wp) + abs(zv)))
      break;
  }
  approx_ = zv;
  approx_prec_ = prec;
  return approx_;
}

std::vector<EmbeddingHandle> complex_embeddings(const FieldPtr& field) {
  const long prec0 = 128;
  auto roots = all_roots_mpfr(field->minpoly(), prec0);
  size_t n_real = real_embeddings(field).size();
  // keep the roots with |Im| clearly away from zero; counts must match
  std::vector<BigComplex> cplx;
  for (auto& z : roots)
    if (!(abs(z.imag()) < BigFloat::pow2(-40, prec0))) cplx.push_back(z);
  if (cplx.size() != static_cast<size_t>(field->degree()) - n_real)
    throw std::runtime_error("complex_embeddings: root classification failed");
  std::sort(cplx.begin(), cplx.end(), [](const BigComplex& a, const BigComplex& b) {
    return a.imag() > b.imag();
  });
  std::vector<EmbeddingHandle> out;
  for (size_t i = 0; i < cplx.size(); ++i) {
    EmbeddingHandle h;
    h.field_ = field;
    h.index_ = static_cast<int>(n_real + i);
    h.is_real_ = false;
    h.approx_ = cplx[i];
    h.approx_prec_ = prec0 - 32;
    out.push_back(std::move(h));
  }
  return out;
}

int sign_under_embedding(const NFElement& x, EmbeddingHandle& sigma,
                         long max_bits) {
  if (x.is_zero()) return 0;
  if (!sigma.is_real())
    throw std::invalid_argument("sign_under_embedding: complex embedding");
  for (long bits = 32; bits <= max_bits; bits *= 2) {
    RatInterval v = sigma.enclose(x, bits);
    if (!v.contains_zero()) return v.sign();
  }
  throw std::runtime_error("sign undecidable at max precision");
}

BigComplex embed(const NFElement& x, EmbeddingHandle& sigma, long prec) {
  if (prec < 32) throw std::invalid_argument("embed: prec must be >= 32");
  if (sigma.is_real()) {
    // refine until the interval value is tight relative to its magnitude
    long bits = prec + 16;
    for (int attempt = 0; attempt < 8; ++attempt) {
      RatInterval v = sigma.enclose(x, bits);
      Rational scale = 1 + std::max(abs(v.lo), abs(v.hi));
      Rational tol = rat_pow2(-(prec + 4));
      if (v.width() < tol * scale) {
        Rational mid = (v.lo + v.hi) / 2;
        return BigComplex(BigFloat(mid, prec + 8), BigFloat(0L, prec + 8));
      }
      bits *= 2;
    }
    throw std::runtime_error("embed: interval refinement stalled");
  }
  BigComplex root = sigma.root_approx(prec + 16);
  long wp = prec + 32;
  BigComplex acc(0, wp);
  const RatVec& c = x.coeffs();
  for (size_t i = c.size(); i-- > 0;)
    acc = acc * root + BigComplex(BigFloat(c[i], wp), BigFloat(0L, wp));
  return acc;
}

bool is_totally_positive(const NFElement& x, long max_bits) {
  if (x.is_zero()) return false;
  auto sigmas = real_embeddings(x.field());
  for (auto& s : sigmas)
    if (sign_under_embedding(x, s, max_bits) <= 0) return false;
  return true;
}

}  // namespace gg

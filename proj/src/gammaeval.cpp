#include "geomgamma/gammaeval.hpp"

#include <cmath>

#include "geomgamma/numfield.hpp"

namespace gg {

namespace {

double log2_abs(const BigComplex& z) {
  BigFloat a = abs(z);
  if (a.is_zero() || !a.is_finite()) return -1e300;
  long e = 0;
  double d = mpfr_get_d_2exp(&e, a.raw(), MPFR_RNDN);
  if (d == 0.0) return -1e300;
  return std::log2(std::fabs(d)) + static_cast<double>(e);
}

BigComplex exp_2pi_i(const BigComplex& t, long wp) {
  BigFloat two_pi = BigFloat::pi(wp) * 2;
  // e^{2 pi i t} = e^{-2 pi Im t} * cis(2 pi Re t)
  BigFloat mag = exp(-(two_pi * t.imag()));
  return cis(two_pi * t.real()) * mag;
}

BigComplex exp_i_pi(const BigComplex& t, long wp) {
  BigFloat pi_v = BigFloat::pi(wp);
  BigFloat mag = exp(-(pi_v * t.imag()));
  return cis(pi_v * t.real()) * mag;
}

struct NormalizedArgs {
  BigComplex z;
  std::vector<BigComplex> taus;  // all in the upper half-plane
  int r = 0;
  int inv = 1;  // global exponent +-1 collected from flips / reflection
};

NormalizedArgs normalize_product_args(const GrArgs& args, long wp) {
  NormalizedArgs out;
  out.r = args.r();
  out.z = args.z;
  out.taus = args.taus;
  for (auto& tau : out.taus) {
    if (tau.imag().is_zero())
      throw OutsideDomainError("G_r: real tau parameter");
    if (tau.imag().sign() < 0) {
      tau = -tau;
      out.z = out.z + tau;
      out.inv = -out.inv;
    }
  }
  // reflection z -> sum(tau) - z when it shrinks |Im z|
  BigComplex sum_tau(0, wp);
  for (const auto& tau : out.taus) sum_tau = sum_tau + tau;
  BigFloat im_ref = sum_tau.imag() - out.z.imag();
  if (abs(im_ref) < abs(out.z.imag())) {
    out.z = sum_tau - out.z;
    if (out.r % 2 == 1) out.inv = -out.inv;
  }
  // 1-periodicity in z
  out.z = BigComplex(out.z.real() - round_nearest(out.z.real()), out.z.imag());
  return out;
}

struct FamilyResult {
  BigComplex prod;
  double lmin_factor = 1e300;  // log2 of the smallest |1 - y| encountered
};

class FamilyEvaluator {
 public:
  FamilyEvaluator(const std::vector<BigComplex>& u, std::vector<double> lbeta,
                  double lcut, long leaf_cap, long wp)
      : u_(u), lbeta_(std::move(lbeta)), lcut_(lcut), leaf_cap_(leaf_cap),
        wp_(wp), res_{BigComplex(1, wp), 1e300} {
    const size_t k = u_.size();
    ltail_.assign(k + 1, 0.0);
    for (size_t d = k; d-- > 0;) {
      double beta = std::exp2(lbeta_[d]);  // < 1
      ltail_[d] = ltail_[d + 1] - std::log2(1.0 - beta);
    }
  }

  FamilyResult run(const BigComplex& base) {
    rec(0, base, log2_abs(base));
    return res_;
  }

 private:
  void rec(size_t d, BigComplex cur, double lcur) {
    if (d == u_.size()) {
      if (++leaves_ > leaf_cap_)
        throw PrecisionError("unreachable precision within iteration cap");
      BigComplex f = BigComplex(1, wp_) - cur;
      double lf = log2_abs(f);
      if (lf < res_.lmin_factor) res_.lmin_factor = lf;
      res_.prod = res_.prod * f;
      return;
    }
    while (lcur + ltail_[d] >= lcut_) {
      rec(d + 1, cur, lcur);
      cur = cur * u_[d];
      lcur += lbeta_[d];
    }
  }

  const std::vector<BigComplex>& u_;
  std::vector<double> lbeta_;
  std::vector<double> ltail_;
  double lcut_;
  long leaf_cap_;
  long wp_;
  long leaves_ = 0;
  FamilyResult res_;
};

double product_cost_estimate(const GrArgs& args, long prec) {
  // simplex volume of admissible exponents, after virtual flips
  double cost = 1.0;
  int k = args.r() + 1;
  double budget = static_cast<double>(prec) + 48.0;
  const double two_pi_over_ln2 = 2.0 * 3.14159265358979 / 0.69314718055994531;
  for (const auto& tau : args.taus) {
    double im = std::fabs(tau.imag().to_double());
    if (im == 0.0) return 1e300;
    double m = budget / (two_pi_over_ln2 * im) + 2.0;
    cost *= m;
  }
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  return 2.0 * cost / fact;
}

}  // namespace

GrValue gr_product(const GrArgs& args, long prec, long leaf_cap) {
  const long wp = prec + 64;
  NormalizedArgs na = normalize_product_args(args, wp);
  const int r = na.r;

  std::vector<BigComplex> u;
  std::vector<double> lbeta;
  for (const auto& tau : na.taus) {
    BigComplex uj = exp_2pi_i(tau, wp);
    double lb = log2_abs(uj);
    if (lb >= 0.0) throw OutsideDomainError("G_r: parameter not reduced to H");
    u.push_back(uj);
    lbeta.push_back(lb);
  }
  const double lcut = -(static_cast<double>(prec) + 48.0);

  BigComplex base_plus = exp_2pi_i(-na.z, wp);
  for (const auto& uj : u) base_plus = base_plus * uj;
  BigComplex base_minus = exp_2pi_i(na.z, wp);

  FamilyEvaluator ev_plus(u, lbeta, lcut, leaf_cap, wp);
  FamilyResult plus = ev_plus.run(base_plus);
  FamilyEvaluator ev_minus(u, lbeta, lcut, leaf_cap, wp);
  FamilyResult minus = ev_minus.run(base_minus);

  const double lpole = -std::max<double>(prec / 4, 16);
  int exp_plus = na.inv;
  int exp_minus = (r % 2 == 0) ? na.inv : -na.inv;
  GrValue out;
  if (plus.lmin_factor < lpole) {
    if (exp_plus < 0) throw NearPoleError();
    out.near_zero = true;
  }
  if (minus.lmin_factor < lpole) {
    if (exp_minus < 0) throw NearPoleError();
    out.near_zero = true;
  }
  BigComplex val = exp_plus > 0 ? plus.prod : inverse(plus.prod);
  BigComplex m = exp_minus > 0 ? minus.prod : inverse(minus.prod);
  out.value = val * m;
  return out;
}

BigComplex gr_expsum(const GrArgs& args, long prec) {
  const long wp = prec + 64;
  const int r = args.r();
  const size_t k = args.taus.size();

  BigComplex eta = args.z * 2;
  BigFloat sum_abs_im(0L, wp);
  for (const auto& tau : args.taus) {
    if (tau.imag().is_zero()) throw OutsideDomainError("G_r: real tau parameter");
    eta = eta - tau;
    sum_abs_im = sum_abs_im + abs(tau.imag());
  }
  BigFloat gap = sum_abs_im - abs(eta.imag());
  if (!(gap.sign() > 0)) throw OutsideDomainError("outside exp-sum domain");

  // running powers e^{+- i pi j tau_k} and e^{+- i pi j eta}
  std::vector<BigComplex> pstep, qstep, pk, qk;
  for (const auto& tau : args.taus) {
    pstep.push_back(exp_i_pi(tau, wp));
    qstep.push_back(exp_i_pi(-tau, wp));
    pk.push_back(pstep.back());
    qk.push_back(qstep.back());
  }
  BigComplex estep = exp_i_pi(eta, wp), fstep = exp_i_pi(-eta, wp);
  BigComplex ej = estep, fj = fstep;

  // analytic tail bookkeeping in log2 space
  const double ln2 = 0.69314718055994531;
  const double pi_d = 3.14159265358979324;
  double lgap = pi_d * gap.to_double() / ln2;  // decay per j
  if (!(lgap > 0)) throw OutsideDomainError("outside exp-sum domain");
  double lslack = static_cast<double>(r) + 3.0;
  std::vector<double> im_taus;
  for (const auto& tau : args.taus)
    im_taus.push_back(std::fabs(tau.imag().to_double()));
  const double target = -(static_cast<double>(prec) + 16.0);
  const long j_cap = 400000;

  BigComplex s(0, wp);
  for (long j = 1; j <= j_cap; ++j) {
    BigComplex trig = (r % 2 == 1) ? (ej - fj) : (ej + fj);
    BigComplex den = pk[0] - qk[0];
    for (size_t t = 1; t < k; ++t) den = den * (pk[t] - qk[t]);
    s = s + trig / (den * j);

    // upper bound for the tail sum_{j' > j}
    double corr = 0.0;
    for (double im : im_taus)
      corr -= std::log2(1.0 - std::exp2(-2.0 * pi_d * im * (j + 1) / ln2));
    double lhead = lslack + corr - (j + 1) * lgap - std::log2(static_cast<double>(j + 1));
    double ltail = lhead - std::log2(1.0 - std::exp2(-lgap));
    if (ltail < target) {
      BigComplex g = exp(s);
      return g;
    }
    ej = ej * estep;
    fj = fj * fstep;
    for (size_t t = 0; t < k; ++t) {
      pk[t] = pk[t] * pstep[t];
      qk[t] = qk[t] * qstep[t];
    }
  }
  throw PrecisionError("exp-sum did not converge within iteration cap");
}

BigComplex gr_value(const GrArgs& args, long prec) {
  double cost = product_cost_estimate(args, prec);
  if (cost < 300000.0) return gr_product(args, prec).value;
  try {
    return gr_expsum(args, prec);
  } catch (const OutsideDomainError&) {
    return gr_product(args, prec).value;
  }
}

GrValue theta_full(const BigComplex& z, const BigComplex& tau, long prec) {
  return gr_product(GrArgs{z, {tau}}, prec);
}

BigComplex theta(const BigComplex& z, const BigComplex& tau, long prec) {
  return theta_full(z, tau, prec).value;
}

BigComplex elliptic_gamma(const BigComplex& z, const BigComplex& tau,
                          const BigComplex& sigma, long prec) {
  return gr_value(GrArgs{z, {tau, sigma}}, prec);
}

BigComplex P2(const BigComplex& z, const BigComplex& tau) {
  long wp = std::max(z.prec(), tau.prec());
  BigComplex half(rat(1, 2), wp);
  // (z^2 + z - z tau)/2 - tau/4 + (tau^2 - 1)/12
  return (z * z + z - z * tau) * half - tau * BigComplex(rat(1, 4), wp) +
         (tau * tau - BigComplex(1, wp)) * BigComplex(rat(1, 12), wp);
}

BigComplex P3(const BigComplex& z, const BigComplex& tau, const BigComplex& sigma) {
  long wp = std::max({z.prec(), tau.prec(), sigma.prec()});
  if (tau.is_zero() || sigma.is_zero())
    throw std::invalid_argument("P3: tau*sigma must be nonzero");
  BigComplex ts = tau * sigma;
  BigComplex one(1, wp);
  BigComplex acc = z * z * z / (ts * 6);
  acc = acc - (tau + sigma - one) * z * z / (ts * 4);
  acc = acc + (tau * tau + sigma * sigma + ts * 3 - tau * 3 - sigma * 3 + one) *
                  z / (ts * 12);
  acc = acc + (tau + sigma - one) * (inverse(tau) + inverse(sigma) - one) *
                  BigComplex(rat(1, 24), wp);
  return acc;
}

namespace {

// integer vector u with u . gamma = 1 (gamma primitive)
IntVec unimodular_pairing_vector(const IntVec& gamma) {
  const size_t n = gamma.size();
  IntVec u(n, Int(0));
  Int g = gamma[0];
  u[0] = sgn(gamma[0]) >= 0 ? 1 : -1;
  g = abs(g);
  for (size_t i = 1; i < n; ++i) {
    Int gn, s, t;
    mpz_gcdext(gn.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(),
               gamma[i].get_mpz_t());
    for (size_t kidx = 0; kidx < i; ++kidx) u[kidx] *= s;
    u[i] = t;
    g = gn;
  }
  if (g != 1)
    throw std::invalid_argument("unimodular_pairing_vector: vector not primitive");
  return u;
}

}  // namespace

BigComplex geometric_G(const GeomGammaSpec& spec) {
  const size_t n = spec.x_basis.size();
  const long wp = spec.prec + 64;
  if (spec.forms.size() != n - 1)
    throw std::invalid_argument("geometric_G: need r+1 forms on a rank r+2 lattice");
  if (rank_forms(spec.forms) < n - 1) return BigComplex(1, wp);

  auto [s_scale, gamma] = complement_form(spec.forms);
  (void)s_scale;
  IntVec aux = unimodular_pairing_vector(gamma.c);
  std::vector<LinearForm> extended = spec.forms;
  extended.push_back(LinearForm(aux));
  DualFamilyResult dual = positive_dual_family(extended);
  if (!(dual.alphas[n - 1] == gamma) || dual.pairings[n - 1] != 1)
    throw std::runtime_error("geometric_G: auxiliary form construction failed");

  ValueAssignment<BigComplex> assign{spec.x_basis, BigComplex(0, wp)};
  BigComplex x_gamma = assign.x_of(gamma);
  double lmag = log2_abs(x_gamma);
  if (lmag < -static_cast<double>(spec.prec) / 2)
    throw OutsideDomainError("outside U(a): x(gamma) ~ 0");
  std::vector<BigComplex> ratios;
  for (size_t j = 0; j + 1 < n; ++j) {
    BigComplex rho = assign.x_of(dual.alphas[j]) / x_gamma;
    if (log2_abs(BigComplex(BigFloat(0L, wp), rho.imag())) - log2_abs(rho) <
        -static_cast<double>(spec.prec) / 2)
      throw OutsideDomainError("outside U(a): real tau ratio");
    ratios.push_back(std::move(rho));
  }

  ParallelepipedSet F = enum_parallelepiped(extended, spec.v);
  BigComplex result(1, wp);
  for (const RatPoint& delta : F.points) {
    BigComplex zarg = (spec.w + assign.x_of(delta)) / x_gamma;
    result = result * gr_value(GrArgs{zarg, ratios}, spec.prec);
  }
  return result;
}

BigFloat check_modular(const std::vector<LinearForm>& forms, const RatPoint& v,
                       const BigComplex& w, const std::vector<BigComplex>& x_basis,
                       long prec) {
  const size_t n = forms.size();
  const long wp = prec + 64;
  if (signdet_forms(forms) == 0)
    throw std::invalid_argument("check_modular: dependent forms");
  BigComplex prod(1, wp);
  for (size_t j = 0; j < n; ++j) {
    std::vector<LinearForm> omit;
    for (size_t t = 0; t < n; ++t)
      if (t != j) omit.push_back(forms[t]);
    GeomGammaSpec spec{omit, v, w, x_basis, prec};
    BigComplex g = geometric_G(spec);
    prod = (j % 2 == 0) ? prod * g : prod / g;
  }
  ValueAssignment<BigComplex> assign{x_basis, w};
  BigComplex b = geometric_bernoulli<BigComplex>(forms, v, assign);
  BigFloat two_pi = BigFloat::pi(wp) * 2;
  BigComplex phase = exp(BigComplex(two_pi * b.imag(), -(two_pi * b.real())));
  // exp(-2 pi i b): real part exp(2 pi Im b) etc. folded into the line above
  BigComplex residual = prod * phase - BigComplex(1, wp);
  return abs(residual);
}

BigFloat check_distribution_plain(DistKind kind, int n_div, const GrArgs& args,
                                  int tau_index, long prec) {
  const long wp = prec + 64;
  if (n_div < 2) throw std::invalid_argument("distribution: N >= 2");
  BigComplex lhs(1, wp);
  if (kind == DistKind::InZ) {
    for (int k = 0; k < n_div; ++k) {
      GrArgs shifted = args;
      shifted.z = args.z + BigComplex(rat(k, n_div), wp);
      lhs = lhs * gr_value(shifted, prec);
    }
    GrArgs scaled = args;
    scaled.z = args.z * n_div;
    for (auto& tau : scaled.taus) tau = tau * n_div;
    return abs(lhs / gr_value(scaled, prec) - BigComplex(1, wp));
  }
  if (kind == DistKind::InTau) {
    for (int k = 0; k < n_div; ++k) {
      GrArgs shifted = args;
      shifted.z = args.z + args.taus[tau_index] * BigComplex(rat(k, n_div), wp);
      lhs = lhs * gr_value(shifted, prec);
    }
    GrArgs scaled = args;
    scaled.taus[tau_index] = args.taus[tau_index] / n_div;
    return abs(lhs / gr_value(scaled, prec) - BigComplex(1, wp));
  }
  throw std::invalid_argument("distribution: geometric kind needs a spec");
}

BigFloat check_distribution_geometric(int n_div, const GeomGammaSpec& spec) {
  const long wp = spec.prec + 64;
  const size_t n = spec.x_basis.size();
  if (n_div < 2) throw std::invalid_argument("distribution: N >= 2");
  RatPoint v0 = spec.v.reduced_mod_lattice();
  BigComplex lhs(1, wp);
  std::vector<long> counter(n, 0);
  while (true) {
    RatVec vc(n);
    for (size_t i = 0; i < n; ++i)
      vc[i] = (v0.c[i] + Rational(counter[i])) / Rational(n_div);
    GeomGammaSpec sub = spec;
    sub.v = RatPoint(std::move(vc));
    lhs = lhs * geometric_G(sub);
    size_t pos = 0;
    while (pos < n) {
      if (++counter[pos] < n_div) break;
      counter[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  GeomGammaSpec rhs_spec = spec;
  rhs_spec.v = v0;
  rhs_spec.w = spec.w * n_div;
  BigComplex rhs = geometric_G(rhs_spec);
  return abs(lhs / rhs - BigComplex(1, wp));
}

QuarticUnitResult quartic_unit_example(long prec) {
  if (prec < 200) throw std::invalid_argument("quartic example: prec must be >= 200 bits");
  const long wp = prec + 64;
  FieldPtr K = NumberField::create({1, -3, -1, -6, 1});  // x^4 - 6x^3 - x^2 - 3x + 1
  auto handles = complex_embeddings(K);
  EmbeddingHandle sigma = handles.at(0);  // upper half-plane root

  auto el = [&](long c0, long c1, long c2, long c3) {
    return NFElement(K, {rat(c0), rat(c1), rat(c2), rat(c3)});
  };
  NFElement A = el(95, 15, 29, -5);    // -5z^3 + 29z^2 + 15z + 95
  NFElement B = el(-47, -10, 39, -6);  // -6z^3 + 39z^2 - 10z - 47
  NFElement C = el(-24, 1, -13, 2);    // 2z^3 - 13z^2 + z - 24
  NFElement D = el(143, 6, 13, -2);    // -2z^3 + 13z^2 + 6z + 143

  auto emb = [&](const NFElement& x, long den) {
    return embed(x, sigma, wp) / BigComplex(den, wp);
  };
  auto g2 = [&](const Rational& z, const NFElement& t0, const NFElement& t1,
                const NFElement& t2, long den) {
    GrArgs args{BigComplex(z, wp), {emb(t0, den), emb(t1, den), emb(t2, den)}};
    return gr_value(args, prec);
  };

  BigComplex q1 = pow_si(g2(rat(-1, 2), A, B, C, 182), -13) *
                  g2(rat(-13, 2), A, B, C, 14);
  BigComplex q2 = pow_si(g2(rat(1, 2), C, -A, D, 182), 13) /
                  g2(rat(13, 2), C, -A, D, 14);
  BigComplex value = q1 * q2;

  // P = x^8 - 7x^7 + 33x^6 + 49x^5 + 17x^4 + 49x^3 + 33x^2 - 7x + 1
  const long pcoef[9] = {1, -7, 33, 49, 17, 49, 33, -7, 1};
  BigComplex pv(0, wp);
  for (int i = 8; i >= 0; --i) pv = pv * value + BigComplex(pcoef[i], wp);

  QuarticUnitResult out{value, abs(pv), 0};
  // digit agreement against the printed reference (truncated decimals)
  BigFloat re = value.real(), im = -value.imag();
  BigFloat re_ref(rat_from_string("41210208/10000000"), wp);
  BigFloat im_ref(rat_from_string("50617720/10000000"), wp);
  BigFloat scale(10000000L, wp);
  bool re_ok = abs(re - re_ref) * scale < BigFloat(1L, wp);
  bool im_ok = abs(im - im_ref) * scale < BigFloat(1L, wp);
  if (re_ok && im_ok)
    out.matched_digits = 8;
  else {
    double rel = (abs(value - BigComplex(re_ref, -im_ref)) / abs(value)).to_double();
    out.matched_digits = rel > 0 ? std::max(0, static_cast<int>(-std::log10(rel))) : 0;
  }
  return out;
}

}  // namespace gg

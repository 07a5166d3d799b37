#include "fresnel.hpp"

#include <cmath>
#include <stdexcept>

namespace clothoid {

namespace {

using detail::dd;

// Rational approximations from Cephes (Moshier, release 2.8).
// Power series branch below x^2 = 2.5625, auxiliary f/g branch above.
constexpr double SN[6] = {
    -2.99181919401019853726e3,  7.08840045257738576863e5,
    -6.29741486205862506537e7,  2.54890880573376359104e9,
    -4.42979518059697779103e10, 3.18016297876567817986e11,
};
constexpr double SD[6] = {
    // leading 1.0 implied
    2.81376268889994315696e2,  4.55847810806532581675e4,
    5.17343888770096400730e6,  4.19320245898111231129e8,
    2.24411795645340920940e10, 6.07366389490084639049e11,
};
constexpr double CN[6] = {
    -4.98843114573573548651e-8, 9.50428062829859605134e-6,
    -6.45191435683965050962e-4, 1.88843319396703850064e-2,
    -2.05525900955013891793e-1, 9.99999999999999998822e-1,
};
constexpr double CD[7] = {
    3.99982968972495980367e-12, 9.15439215774657478799e-10,
    1.25001862479598821474e-7,  1.22262789024179030997e-5,
    8.68029542941784300606e-4,  4.12142090722199792936e-2,
    1.00000000000000000118e0,
};
constexpr double FN[10] = {
    4.21543555043677546506e-1,  1.43407919780758885261e-1,
    1.15220955073585758835e-2,  3.45017939782574027900e-4,
    4.63613749287867322088e-6,  3.05568983790257605827e-8,
    1.02304514164907233465e-10, 1.72010743268161828879e-13,
    1.34283276233062758925e-16, 3.76329711269987889006e-20,
};
constexpr double FD[10] = {
    // leading 1.0 implied
    7.51586398353378947175e-1,  1.16888925859191382142e-1,
    6.44051526508858611005e-3,  1.55934409164153020873e-4,
    1.84627567348930545870e-6,  1.12699224763999035261e-8,
    3.60140029589371370404e-11, 5.88754533621578410010e-14,
    4.52001434074129701496e-17, 1.25443237090011264384e-20,
};
constexpr double GN[11] = {
    5.04442073643383265887e-1,  1.97102833525523411709e-1,
    1.87648584092575249293e-2,  6.84079380915393090172e-4,
    1.15138826111884280931e-5,  9.82852443688422223854e-8,
    4.45344415861750144738e-10, 1.08268041139020870318e-12,
    1.37555460633261799868e-15, 8.36354435630677421531e-19,
    1.86958710162783235106e-22,
};
constexpr double GD[11] = {
    // leading 1.0 implied
    1.47495759925128324529e0,   3.37748989120019970451e-1,
    2.53603741420338795122e-2,  8.14679107184306179049e-4,
    1.27545075667729118702e-5,  1.04314589657571990585e-7,
    4.60680728146520428211e-10, 1.10273215066240270757e-12,
    1.38796531259578871258e-15, 8.39158816283118707363e-19,
    1.86958710162783236342e-22,
};

template <int N>
double polevl(double x, const double (&coef)[N]) {
  double r = coef[0];
  for (int i = 1; i < N; ++i) r = r * x + coef[i];
  return r;
}

template <int N>
double p1evl(double x, const double (&coef)[N]) {
  double r = x + coef[0];
  for (int i = 1; i < N; ++i) r = r * x + coef[i];
  return r;
}

constexpr double kSeriesLimitSq = 2.5625;  // x^2 boundary of the series branch
constexpr double kHugeArg = 36974.0;

// Oscillating parts of the asymptotic branch at x >= sqrt(2.5625):
//   C(x) = 0.5 + fc,  S(x) = 0.5 + fs.
// theta must be the double-double reduction-ready phase (pi/2) x^2.
void fresnelFluct(double x, const dd& theta, double* fc, double* fs) {
  double t = detail::kPiHi * x * x;
  double u = 1.0 / (t * t);
  double f = 1.0 - u * polevl(u, FN) / p1evl(u, FD);
  double g = (1.0 / t) * polevl(u, GN) / p1evl(u, GD);
  detail::SinCos sc = detail::ddSinCos(theta);
  double pix = detail::kPiHi * x;
  *fc = (f * sc.sin.hi - g * sc.cos.hi) / pix;
  *fs = -(f * sc.cos.hi + g * sc.sin.hi) / pix;
}

dd phaseOf(const dd& x) {
  // (pi/2) * x^2 in double-double
  dd x2 = detail::ddMul(x, x);
  return detail::ddMul(x2, detail::kDDHalfPi);
}

FresnelPair fresnelSeries(double x) {
  // |x| <= 1.6008..., x taken positive
  double x2 = x * x;
  double t = x2 * x2;
  FresnelPair r;
  r.s = x * x2 * polevl(t, SN) / p1evl(t, SD);
  r.c = x * polevl(t, CN) / polevl(t, CD);
  return r;
}

FresnelPair fresnelPositive(const dd& x) {
  FresnelPair r;
  double xh = x.hi;
  if (xh * xh < kSeriesLimitSq) {
    r = fresnelSeries(xh);
  } else if (xh > kHugeArg) {
    r.c = 0.5;
    r.s = 0.5;
  } else {
    double fc, fs;
    fresnelFluct(xh, phaseOf(x), &fc, &fs);
    r.c = 0.5 + fc;
    r.s = 0.5 + fs;
  }
  return r;
}

}  // namespace

FresnelPair fresnel(double t) {
  if (!std::isfinite(t)) throw std::domain_error("fresnel: non-finite argument");
  FresnelPair r = fresnelPositive(dd{std::abs(t), 0.0});
  if (t < 0.0) {
    r.c = -r.c;
    r.s = -r.s;
  }
  return r;
}

MomentaTable fresnelMomenta(double t, int order) {
  if (!std::isfinite(t)) throw std::domain_error("fresnelMomenta: non-finite argument");
  if (order < 0 || order > kMaxMomentaOrder)
    throw std::invalid_argument("fresnelMomenta: order out of range");

  MomentaTable table;
  table.t = t;
  table.order = order;
  table.cMoments.resize(order + 1);
  table.sMoments.resize(order + 1);

  FresnelPair base = fresnel(t);
  table.cMoments[0] = base.c;
  table.sMoments[0] = base.s;
  if (order == 0) return table;

  using detail::dd;
  dd theta = detail::ddMul(detail::ddMul(dd{t, 0.0}, dd{t, 0.0}), detail::kDDHalfPi);
  detail::SinCos sc = detail::ddSinCos(theta);

  dd c1 = detail::ddMul(sc.sin, detail::kDDInvPi);
  dd s1 = detail::ddMul(detail::ddAdd(detail::ddNeg(sc.cos), 1.0), detail::kDDInvPi);
  table.cMoments[1] = c1.hi + c1.lo;
  table.sMoments[1] = s1.hi + s1.lo;

  // C_{k+1} = (t^k sin - k S_{k-1})/pi, S_{k+1} = (k C_{k-1} - t^k cos)/pi.
  // The k/pi amplification stacks across orders, so carry everything in dd.
  std::vector<dd> c(order + 1), s(order + 1);
  c[0] = {base.c, 0.0};
  s[0] = {base.s, 0.0};
  c[1] = c1;
  s[1] = s1;
  dd tk{t, 0.0};  // t^k
  for (int k = 1; k < order; ++k) {
    dd num = detail::ddSub(detail::ddMul(tk, sc.sin), detail::ddMul(s[k - 1], static_cast<double>(k)));
    c[k + 1] = detail::ddMul(num, detail::kDDInvPi);
    num = detail::ddSub(detail::ddMul(c[k - 1], static_cast<double>(k)), detail::ddMul(tk, sc.cos));
    s[k + 1] = detail::ddMul(num, detail::kDDInvPi);
    tk = detail::ddMul(tk, dd{t, 0.0});
    table.cMoments[k + 1] = c[k + 1].hi + c[k + 1].lo;
    table.sMoments[k + 1] = s[k + 1].hi + s[k + 1].lo;
  }
  return table;
}

namespace detail {

void fresnelDelta(const dd& x0, const dd& x1, double* dc, double* ds) {
  double a0 = std::abs(x0.hi);
  double a1 = std::abs(x1.hi);
  bool bothLarge = a0 * a0 >= kSeriesLimitSq && a1 * a1 >= kSeriesLimitSq &&
                   x0.hi * x1.hi > 0.0 && a0 <= kHugeArg && a1 <= kHugeArg;
  if (bothLarge) {
    // same sign, both asymptotic: difference of the fluctuating parts only;
    // oddness makes C(x1)-C(x0) = fc(-x0)-fc(-x1) on the negative side
    dd u0 = x0, u1 = x1;
    if (x0.hi < 0.0) {
      u0 = ddNeg(x1);
      u1 = ddNeg(x0);
    }
    double fc0, fs0, fc1, fs1;
    fresnelFluct(u0.hi, phaseOf(u0), &fc0, &fs0);
    fresnelFluct(u1.hi, phaseOf(u1), &fc1, &fs1);
    *dc = fc1 - fc0;
    *ds = fs1 - fs0;
    return;
  }
  auto evalSigned = [](const dd& x) {
    FresnelPair p = fresnelPositive(dd{std::abs(x.hi), x.hi < 0.0 ? -x.lo : x.lo});
    if (x.hi < 0.0) {
      p.c = -p.c;
      p.s = -p.s;
    }
    return p;
  };
  FresnelPair p0 = evalSigned(x0);
  FresnelPair p1 = evalSigned(x1);
  *dc = p1.c - p0.c;
  *ds = p1.s - p0.s;
}

}  // namespace detail

}  // namespace clothoid

#include "ccdist/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ccdist {

namespace {

constexpr std::int64_t kTermCap = 100'000'000;  // total summed terms
constexpr std::int64_t kCutoffCap = (kTermCap - 1) / 2;

double pow_int(double base, int m) {
  double r = base;
  for (int i = 1; i < m; ++i) r *= base;
  return r;
}

// 2 * int_K^inf (lambda^2 + x^2)^-m dx, as an exact value for m = 1, 2 and a
// rigorous upper bound for m >= 3 (using (lambda^2+x^2)^-(m-1) <= value at K).
double integral_tail(double lam, int m, double big_k) {
  const double a = std::atan2(lam, big_k);
  if (m == 1) return 2.0 * a / lam;
  if (m == 2)
    return a / (lam * lam * lam) -
           big_k / (lam * lam * (lam * lam + big_k * big_k));
  return (2.0 * a / lam) / pow_int(lam * lam + big_k * big_k, m - 1);
}

// Smallest K in [1, kCutoffCap] with bound(K) <= tol, or -1 if unattainable.
template <class Bound>
std::int64_t smallest_cutoff(Bound bound, double tol) {
  std::int64_t hi = 1;
  while (bound(hi) > tol) {
    if (hi >= kCutoffCap) return -1;
    hi = std::min<std::int64_t>(hi * 2, kCutoffCap);
  }
  std::int64_t lo = std::max<std::int64_t>(hi / 2, 1);
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (bound(mid) <= tol) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return hi;
}

}  // namespace

ScaleParam::ScaleParam(double lambda) : lambda_(lambda) {
  if (!std::isfinite(lambda) || lambda < 0.0)
    throw std::domain_error("ScaleParam: lambda must be finite and >= 0");
}

PowerIndex::PowerIndex(int m) : m_(m) {
  if (m < 1) throw std::domain_error("PowerIndex: m must be >= 1");
}

double cosh_ratio(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || b < 0.0)
    throw std::domain_error("cosh_ratio: arguments must be finite, b >= 0");
  a = std::fabs(a);
  return std::exp(a - b) * (1.0 + std::exp(-2.0 * a)) /
         (1.0 + std::exp(-2.0 * b));
}

double detail::sinh_cosh_ratio(double a, double b) {
  const double aa = std::fabs(a);
  const double r = std::exp(aa - b) * (-std::expm1(-2.0 * aa)) /
                   (1.0 + std::exp(-2.0 * b));
  return a < 0.0 ? -r : r;
}

double coth_excess(double x) {
  if (x == 0.0) return 0.0;
  const double ax = std::fabs(x);
  // For 2x beyond ~38, e^(-2x) is below 1 ulp of coth ~ 1.
  const double r = ax > 19.0 ? 1.0 - 1.0 / ax
                             : 1.0 + 2.0 / std::expm1(2.0 * ax) - 1.0 / ax;
  return x < 0.0 ? -r : r;
}

double csch2_excess(double x) {
  x = std::fabs(x);
  if (x == 0.0) return -1.0 / 3.0;  // continuous extension
  if (x >= 710.0) return -1.0 / (x * x);
  const double s = std::sinh(x);
  return -((s - x) * (s + x)) / ((x * s) * (x * s));
}

double sum_inverse_power(ScaleParam lambda, PowerIndex m) {
  const double lam = lambda.value();
  if (lam <= 0.0)
    throw std::domain_error("sum_inverse_power: lambda must be > 0");
  const double x = lam * kPi;
  if (m.value() == 1) return kPi / (lam * std::tanh(x));
  if (m.value() == 2) {
    const double coth = 1.0 / x + coth_excess(x);
    const double csch2 = 1.0 / (x * x) + csch2_excess(x);
    return kPi * coth / (2.0 * lam * lam * lam) +
           kPi * kPi * csch2 / (2.0 * lam * lam);
  }
  throw unsupported_error("sum_inverse_power: no closed form for m > 2");
}

SeriesSum brute_force_sum(ScaleParam lambda, PowerIndex m, double t,
                          double tol) {
  const double lam = lambda.value();
  const int mi = m.value();
  if (lam <= 0.0)
    throw std::domain_error("brute_force_sum: lambda must be > 0");
  if (!std::isfinite(t))
    throw std::domain_error("brute_force_sum: t must be finite");
  if (!std::isfinite(tol) || tol <= 0.0)
    throw std::domain_error("brute_force_sum: tol must be > 0");

  const double lam2 = lam * lam;
  // remainder() is exact, so this is the series' own 2*pi periodicity and
  // costs no accuracy.
  const double delta = std::remainder(t, kTwoPi);

  SeriesSum out;
  if (delta == 0.0 && mi == 1) {
    // Positive decreasing terms: integral sandwich with midpoint correction.
    // Bracket half-width I(K) - I(K+1) = atan(lam / (lam^2 + K(K+1))) / lam.
    const auto bracket = [&](std::int64_t k) {
      const double kd = static_cast<double>(k);
      return std::atan2(lam, lam2 + kd * (kd + 1.0)) / lam;
    };
    const std::int64_t cutoff = smallest_cutoff(bracket, tol);
    if (cutoff < 0)
      throw resource_error("brute_force_sum: tol unattainable within term cap",
                           bracket(kCutoffCap));
    double sum = 0.0;
    for (std::int64_t k = cutoff; k >= 1; --k) {
      const double kd = static_cast<double>(k);
      sum += 2.0 / (lam2 + kd * kd);
    }
    sum += 1.0 / lam2;
    const double kd = static_cast<double>(cutoff);
    const double correction =
        (std::atan2(lam, kd) + std::atan2(lam, kd + 1.0)) / lam;
    out.value = sum + correction;
    out.tail_hi = bracket(cutoff);
    out.terms_used = 2 * cutoff + 1;
    return out;
  }

  const double sin_half = std::fabs(std::sin(0.5 * delta));
  const auto bound = [&](std::int64_t k) {
    const double kd = static_cast<double>(k);
    double b = integral_tail(lam, mi, kd);
    if (sin_half > 0.0) {
      const double dirichlet =
          2.0 / (pow_int(lam2 + (kd + 1.0) * (kd + 1.0), mi) * sin_half);
      b = std::min(b, dirichlet);
    }
    return b;
  };
  const std::int64_t cutoff = smallest_cutoff(bound, tol);
  if (cutoff < 0)
    throw resource_error("brute_force_sum: tol unattainable within term cap",
                         bound(kCutoffCap));
  double sum = 0.0;
  if (delta == 0.0) {
    for (std::int64_t k = cutoff; k >= 1; --k) {
      const double kd = static_cast<double>(k);
      sum += 2.0 / pow_int(lam2 + kd * kd, mi);
    }
  } else {
    for (std::int64_t k = cutoff; k >= 1; --k) {
      const double kd = static_cast<double>(k);
      sum += 2.0 * std::cos(kd * delta) / pow_int(lam2 + kd * kd, mi);
    }
  }
  sum += 1.0 / pow_int(lam2, mi);
  out.value = sum;
  out.tail_hi = bound(cutoff);
  out.terms_used = 2 * cutoff + 1;
  return out;
}

namespace {

// Neville extrapolation to lambda = 0 of a function with an even expansion
// f = c0 + c1*lambda^2 + c2*lambda^4 + ..., nodes lambda0 / 2^i.
template <class F>
double richardson_limit(F f, double lambda0, int steps) {
  constexpr int kMaxSteps = 8;
  double x[kMaxSteps + 1];
  double tab[kMaxSteps + 1];
  for (int i = 0; i <= steps; ++i) {
    const double lam = std::ldexp(lambda0, -i);
    x[i] = lam * lam;
    tab[i] = f(lam);
  }
  for (int j = 1; j <= steps; ++j)
    for (int i = steps; i >= j; --i)
      tab[i] += (tab[i] - tab[i - 1]) * x[i] / (x[i - j] - x[i]);
  return tab[steps];
}

// One-sided sums sum_{k>=1} (lambda^2+k^2)^-m written so the lambda^-2m
// singular part of the closed form cancels analytically, not in floating
// point:
//   m=1:  pi * (coth(x) - 1/x) / (2 lambda),                    x = lambda*pi
//   m=2:  pi^2 * ((coth(x)-1/x)/x + csch(x)^2 - 1/x^2) / (4 lambda^2)
double one_sided_m1(double lam) {
  return kPi * coth_excess(lam * kPi) / (2.0 * lam);
}

double one_sided_m2(double lam) {
  const double x = lam * kPi;
  return kPi * kPi * (coth_excess(x) / x + csch2_excess(x)) /
         (4.0 * lam * lam);
}

}  // namespace

double zeta_even(int n) {
  if (n == 1) return richardson_limit(one_sided_m1, 1e-2, 2);
  if (n == 2) return richardson_limit(one_sided_m2, 0.05, 2);
  throw unsupported_error("zeta_even: only zeta(2) and zeta(4) are supported");
}

}  // namespace ccdist

#pragma once

#include <cstdint>

#include "ccdist/errors.hpp"

namespace ccdist {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Scale parameter lambda >= 0. lambda == 0 encodes the degenerate
/// point mass at zero.
class ScaleParam {
 public:
  explicit ScaleParam(double lambda);
  double value() const noexcept { return lambda_; }

 private:
  double lambda_;
};

/// Exponent m >= 1 of the lattice kernel (lambda^2 + k^2)^m. Related to the
/// Student degrees of freedom nu by m = (nu + 1) / 2.
class PowerIndex {
 public:
  explicit PowerIndex(int m);
  int value() const noexcept { return m_; }

 private:
  int m_;
};

/// A truncated series value with a rigorous bracket on the omitted tail:
/// the exact sum lies in [value - tail_hi, value + tail_hi].
struct SeriesSum {
  double value = 0.0;
  double tail_lo = 0.0;
  double tail_hi = 0.0;
  std::int64_t terms_used = 0;
};

/// cosh(a)/cosh(b) in exponent-shifted form,
///
///   e^(|a|-b) * (1 + e^(-2|a|)) / (1 + e^(-2b)),
///
/// so neither cosh overflows for arguments up to ~700 in magnitude.
/// Requires finite a, b and b >= 0; relative error is a few ulp.
double cosh_ratio(double a, double b);

/// coth(x) - 1/x without cancellation near x = 0 (odd, -> 0 as x -> 0).
double coth_excess(double x);

/// csch(x)^2 - 1/x^2 without the 1/x^2 blow-up (even, -> -1/3 as x -> 0).
double csch2_excess(double x);

/// Closed form of sum_{k in Z} 1/(lambda^2 + k^2)^m for m in {1, 2}:
///
///   m = 1:  pi / (lambda * tanh(lambda*pi))
///   m = 2:  pi*coth(lambda*pi)/(2 lambda^3) + pi^2*csch(lambda*pi)^2/(2 lambda^2)
///
/// The m = 2 form follows by differentiating the m = 1 identity with respect
/// to mu = lambda^2 (see docs/derivations.md); both are gated by oracle tests
/// against brute_force_sum. Throws unsupported_error for other m, and
/// std::domain_error for lambda <= 0.
double sum_inverse_power(ScaleParam lambda, PowerIndex m);

/// Truncated evaluation of sum_{k in Z} cos(k*t) / (lambda^2 + k^2)^m with a
/// rigorous tail bracket. Terms k = 0, +-1, ..., +-K are summed explicitly.
///
/// The phase is reduced modulo 2*pi before any cosine is evaluated: the sum
/// is exactly periodic in exact arithmetic, while cos(k*t) for unreduced t
/// loses all accuracy once k * ulp(t) is order one.
///
/// Tail control:
///  - t == 0 (mod 2*pi), m == 1: all terms are positive and decreasing, so
///    the integral sandwich int_{K+1}..inf <= tail <= int_K..inf applies; the
///    midpoint of the sandwich is added to the partial sum and the bracket is
///    its half-width, which decays like 1/K^2.
///  - t == 0 (mod 2*pi), m >= 2: plain truncation with the integral bound
///    2*int_K^inf (lambda^2+x^2)^-m dx, which already decays like K^(1-2m).
///  - otherwise: the minimum of the integral bound and the summation-by-parts
///    bound 2*(lambda^2+(K+1)^2)^-m / |sin(t/2)| (Dirichlet kernel), which
///    decays like K^-2m away from the lattice points.
///
/// K is the smallest cutoff whose bound is <= tol, subject to a cap of 1e8
/// summed terms; past the cap a resource_error reports the achievable
/// bracket.
SeriesSum brute_force_sum(ScaleParam lambda, PowerIndex m, double t, double tol);

/// zeta(2n) for n in {1, 2} obtained as the lambda -> 0 limit of the
/// one-sided sums sum_{k>=1} (lambda^2+k^2)^-m via Richardson extrapolation
/// in lambda^2. Accurate to better than 1e-8; throws unsupported_error for
/// other n.
double zeta_even(int n);

namespace detail {

/// sinh(a)/cosh(b) in the same exponent-shifted style as cosh_ratio.
double sinh_cosh_ratio(double a, double b);

}  // namespace detail

}  // namespace ccdist

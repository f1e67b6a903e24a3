#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ccdist/series.hpp"

namespace ccdist {

/// Two-sided bracket on a cumulative probability: lo <= P(X <= k) <= hi.
struct CdfBracket {
  double lo = 0.0;
  double hi = 1.0;
};

/// An integer-supported Cauchy-type law with scale lambda >= 0,
///
///   f_lambda(k) = (tanh(lambda*pi) / pi) * lambda / (lambda^2 + k^2),
///
/// the lambda = 0 member being the point mass at zero. Immutable after
/// construction; cheap hyperbolic constants are cached.
class CCDistribution {
 public:
  explicit CCDistribution(double lambda);

  double lambda() const noexcept { return lambda_; }
  /// alpha(lambda) = cosh(lambda*pi); >= 1 with equality iff lambda == 0.
  double alpha() const noexcept { return alpha_; }
  double tanh_lpi() const noexcept { return tanh_lpi_; }
  /// pmf prefactor lambda * tanh(lambda*pi) / pi; pmf(k) = norm/(lambda^2+k^2).
  double norm() const noexcept { return norm_; }
  bool is_degenerate() const noexcept { return lambda_ == 0.0; }

  double pmf(std::int64_t k) const noexcept;
  double log_pmf(std::int64_t k) const;

  /// Bracket on P(X <= k) of width <= tol, from explicit partial sums plus
  /// the integral tail sandwich. Requires lambda > 0 and tol > 0; throws
  /// resource_error if tol needs more than the term cap.
  CdfBracket cdf(std::int64_t k, double tol) const;

  /// Smallest integer k with P(X <= k) >= u, for u in (0,1). The search
  /// window comes from the tail bound, then integer bisection over cdf
  /// brackets, refining tol until the bracket decides each comparison.
  std::int64_t quantile(double u) const;

 private:
  double lambda_;
  double alpha_;
  double tanh_lpi_;
  double norm_;
};

inline CCDistribution make_cc(double lambda) { return CCDistribution(lambda); }

/// Weighted mixture of at most two CC members; the convolution of two CC
/// laws decomposes this way (a member may be the degenerate lambda = 0 one).
class CCMixture {
 public:
  struct Component {
    double weight;
    CCDistribution member;
  };

  explicit CCMixture(std::vector<Component> components);

  std::span<const Component> components() const noexcept {
    return components_;
  }
  double pmf(std::int64_t k) const noexcept;

 private:
  std::vector<Component> components_;
};

/// Law of X + Y for independent X ~ CC(lambda1), Y ~ CC(lambda2): the
/// two-component mixture with weights
///
///   p = alpha(l1+l2) / (2 alpha(l1) alpha(l2))   on the member l1 + l2,
///   q = alpha(|l2-l1|) / (2 alpha(l1) alpha(l2)) on the member |l2 - l1|,
///
/// p + q = 1 by the cosh product formula. Weights are computed in
/// exponent-shifted form so they stay finite for any scales. If either input
/// is degenerate the other distribution is returned with weight 1.
CCMixture convolve(const CCDistribution& d1, const CCDistribution& d2);

/// Closed form for the pmf of X + Y with X, Y iid CC(lambda):
///   k = 0:  1/(2 cosh(lambda*pi)^2) + tanh(lambda*pi)/(2 lambda*pi)
///   k != 0: (tanh(lambda*pi)/pi) * 2 lambda / ((2 lambda)^2 + k^2)
/// Must match convolve(d, d).pmf(k); kept as an independent route.
double iid_sum_pmf(double lambda, std::int64_t k);

/// Discrete Student-type law with odd nu in {1, 3, 5, 7} and scale
/// lambda > 0:
///
///   f_{nu;lambda}(k) = c_{nu;lambda} / (lambda^2 + k^2)^((nu+1)/2).
///
/// nu = 1 coincides with CCDistribution(lambda). The normalizing constant is
/// closed-form for nu in {1, 3} and backed by the brute-force series oracle
/// for nu in {5, 7}.
class StudentDiscrete {
 public:
  StudentDiscrete(int nu, double lambda);

  int nu() const noexcept { return nu_; }
  double lambda() const noexcept { return lambda_; }
  /// c_{nu;lambda}
  double norm_const() const noexcept { return c_; }
  int power_index() const noexcept { return (nu_ + 1) / 2; }

  double pmf(std::int64_t k) const noexcept;

 private:
  int nu_;
  double lambda_;
  double c_;
};

}  // namespace ccdist

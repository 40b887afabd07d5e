#pragma once

#include <utility>
#include <vector>

#include "syngand/properties.hpp"
#include "syngand/rng.hpp"

namespace syngand {

/// Variance-preserving Gaussian schedule: alpha strictly decreasing from 1
/// with sigma^2 = 1 - alpha^2 at every step.
struct ContinuousSchedule {
  int T = 0;
  std::vector<double> alpha;  // t = 0..T, alpha[0] = 1
  std::vector<double> sigma;

  /// alpha^t = cos(0.5 pi t / T), floored at alpha_min on the last step.
  static ContinuousSchedule cosine(int T, double alpha_min = 1e-3);

  double a(int t) const { return alpha.at(static_cast<std::size_t>(t)); }
  double sig(int t) const { return sigma.at(static_cast<std::size_t>(t)); }

  void validate() const;
};

/// Per-step coefficients (alpha^{t|t-1}, sigma^{t|t-1}) of
/// q(y^t | y^{t-1}).
std::pair<double, double> transition_coefficients(int t, const ContinuousSchedule& s);

/// y^t = alpha^t y + sigma^t eps per channel; returns the noisy vector and
/// the noise that was drawn. t = 0 returns y unchanged with zero noise.
std::pair<PropertyVector, std::vector<double>> noise_y(const PropertyVector& y, int t,
                                                       const ContinuousSchedule& s, Rng& rng);

/// Closed-form mean and std of q(y^{t-1} | y, y^t).
std::pair<double, double> posterior_params(double y, double y_t, int t,
                                           const ContinuousSchedule& s);

/// Clean-value estimate from predicted noise: (y^t - sigma^t eps_hat) / alpha^t.
double y_from_noise(double y_t, double eps_hat, int t, const ContinuousSchedule& s);

/// One reverse step of the property chain. For t >= 2 it is the posterior
/// mean under the noise-based clean estimate plus posterior-std noise; the
/// final step t = 1 is deterministic and returns the clean estimate.
double reverse_step_y(double z_t, double eps_hat, int t, const ContinuousSchedule& s, Rng& rng);

}  // namespace syngand

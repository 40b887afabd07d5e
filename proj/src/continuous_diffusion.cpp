#include "syngand/continuous_diffusion.hpp"

#include <cmath>
#include <stdexcept>

namespace syngand {

namespace {

void check_t(int t, int T, int lo) {
  if (t < lo || t > T)
    throw std::out_of_range("continuous diffusion: timestep " + std::to_string(t) +
                            " outside [" + std::to_string(lo) + ", " + std::to_string(T) + "]");
}

}  // namespace

ContinuousSchedule ContinuousSchedule::cosine(int T, double alpha_min) {
  if (T < 1) throw std::invalid_argument("ContinuousSchedule: T must be >= 1");
  ContinuousSchedule out;
  out.T = T;
  out.alpha.resize(static_cast<std::size_t>(T) + 1);
  out.sigma.resize(static_cast<std::size_t>(T) + 1);
  for (int t = 0; t <= T; ++t) {
    double a = std::cos(0.5 * M_PI * static_cast<double>(t) / T);
    if (t == T) a = std::max(a, alpha_min);
    out.alpha[static_cast<std::size_t>(t)] = a;
    out.sigma[static_cast<std::size_t>(t)] = std::sqrt(std::max(0.0, 1.0 - a * a));
  }
  out.alpha[0] = 1.0;
  out.sigma[0] = 0.0;
  out.validate();
  return out;
}

void ContinuousSchedule::validate() const {
  if (T < 1) throw std::invalid_argument("ContinuousSchedule: T must be >= 1");
  if (static_cast<int>(alpha.size()) != T + 1 || sigma.size() != alpha.size())
    throw std::invalid_argument("ContinuousSchedule: need T+1 alpha and sigma entries");
  if (alpha[0] != 1.0) throw std::invalid_argument("ContinuousSchedule: alpha[0] must be 1");
  for (int t = 1; t <= T; ++t) {
    const double a = alpha[static_cast<std::size_t>(t)];
    if (!(a > 0.0) || a >= alpha[static_cast<std::size_t>(t) - 1])
      throw std::invalid_argument("ContinuousSchedule: alpha must be strictly decreasing and > 0");
    const double s2 = sigma[static_cast<std::size_t>(t)] * sigma[static_cast<std::size_t>(t)];
    if (std::abs(a * a + s2 - 1.0) > 1e-12)
      throw std::invalid_argument("ContinuousSchedule: alpha^2 + sigma^2 must equal 1");
  }
  if (alpha[static_cast<std::size_t>(T)] > 0.05)
    throw std::invalid_argument("ContinuousSchedule: alpha[T] must be <= 0.05");
}

std::pair<double, double> transition_coefficients(int t, const ContinuousSchedule& s) {
  check_t(t, s.T, 1);
  const double a_step = s.a(t) / s.a(t - 1);
  const double var = s.sig(t) * s.sig(t) - a_step * a_step * s.sig(t - 1) * s.sig(t - 1);
  return {a_step, std::sqrt(std::max(0.0, var))};
}

std::pair<PropertyVector, std::vector<double>> noise_y(const PropertyVector& y, int t,
                                                       const ContinuousSchedule& s, Rng& rng) {
  check_t(t, s.T, 0);
  PropertyVector out = y;
  std::vector<double> eps(y.values.size(), 0.0);
  if (t == 0) return {out, eps};
  const double a = s.a(t);
  const double sig = s.sig(t);
  for (std::size_t k = 0; k < y.values.size(); ++k) {
    eps[k] = rng.normal();
    out.values[k] = a * y.values[k] + sig * eps[k];
  }
  return {out, eps};
}

std::pair<double, double> posterior_params(double y, double y_t, int t,
                                           const ContinuousSchedule& s) {
  check_t(t, s.T, 1);
  const auto [a_step, sig_step] = transition_coefficients(t, s);
  const double sig_t2 = s.sig(t) * s.sig(t);
  const double sig_prev = s.sig(t - 1);
  const double mu = (a_step * sig_prev * sig_prev / sig_t2) * y_t +
                    (s.a(t - 1) * sig_step * sig_step / sig_t2) * y;
  const double sd = sig_step * sig_prev / s.sig(t);
  return {mu, sd};
}

double y_from_noise(double y_t, double eps_hat, int t, const ContinuousSchedule& s) {
  check_t(t, s.T, 1);
  return (y_t - s.sig(t) * eps_hat) / s.a(t);
}

double reverse_step_y(double z_t, double eps_hat, int t, const ContinuousSchedule& s, Rng& rng) {
  check_t(t, s.T, 1);
  if (t == 1) return y_from_noise(z_t, eps_hat, 1, s);
  const auto [a_step, sig_step] = transition_coefficients(t, s);
  const double sd = sig_step * s.sig(t - 1) / s.sig(t);
  return z_t / a_step - (sig_step * sig_step / (a_step * s.sig(t))) * eps_hat + sd * rng.normal();
}

}  // namespace syngand

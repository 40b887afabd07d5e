#include "syngand/discrete_diffusion.hpp"

#include <cmath>
#include <stdexcept>

#include "syngand/common.hpp"

namespace syngand {

namespace {

void check_t(int t, int T, int lo) {
  if (t < lo || t > T)
    throw std::out_of_range("discrete diffusion: timestep " + std::to_string(t) +
                            " outside [" + std::to_string(lo) + ", " + std::to_string(T) + "]");
}

void check_marginal(const Eigen::VectorXd& m) {
  if (m.size() < 2) throw std::invalid_argument("marginal needs at least two categories");
  if (std::abs(m.sum() - 1.0) > 1e-12) throw std::invalid_argument("marginal must sum to 1");
  if ((m.array() < 0.0).any()) throw std::invalid_argument("marginal entries must be >= 0");
}

}  // namespace

DiscreteSchedule DiscreteSchedule::cosine(int T, Eigen::VectorXd m_x, Eigen::VectorXd m_e,
                                          double s) {
  if (T < 1) throw std::invalid_argument("DiscreteSchedule: T must be >= 1");
  DiscreteSchedule out;
  out.T = T;
  out.m_x = std::move(m_x);
  out.m_e = std::move(m_e);
  out.abar.resize(static_cast<std::size_t>(T) + 1);
  const auto f = [&](double t) {
    const double x = 0.5 * M_PI * (t / T + s) / (1.0 + s);
    const double c = std::cos(x);
    return c * c;
  };
  const double f0 = f(0.0);
  double prev = 1.0;
  for (int t = 0; t <= T; ++t) {
    double v = f(static_cast<double>(t)) / f0;
    v = std::min(std::max(v, 1e-5), 1.0);
    if (t > 0) v = std::min(v, prev);  // guard against floating roundoff
    out.abar[static_cast<std::size_t>(t)] = v;
    prev = v;
  }
  out.abar[0] = 1.0;
  out.validate();
  return out;
}

double DiscreteSchedule::alpha(int t) const {
  check_t(t, T, 1);
  return abar[static_cast<std::size_t>(t)] / abar[static_cast<std::size_t>(t) - 1];
}

void DiscreteSchedule::validate() const {
  if (T < 1) throw std::invalid_argument("DiscreteSchedule: T must be >= 1");
  if (static_cast<int>(abar.size()) != T + 1)
    throw std::invalid_argument("DiscreteSchedule: abar must have T+1 entries");
  if (abar[0] != 1.0) throw std::invalid_argument("DiscreteSchedule: abar[0] must be 1");
  for (int t = 1; t <= T; ++t) {
    const double v = abar[static_cast<std::size_t>(t)];
    if (!(v > 0.0) || v > abar[static_cast<std::size_t>(t) - 1])
      throw std::invalid_argument("DiscreteSchedule: abar must be positive and non-increasing");
  }
  if (!(abar[static_cast<std::size_t>(T)] < 0.01))
    throw std::invalid_argument("DiscreteSchedule: abar[T] must be < 0.01");
  check_marginal(m_x);
  check_marginal(m_e);
}

Eigen::MatrixXd transition_matrix(int t, const DiscreteSchedule& s, Chain which) {
  check_t(t, s.T, 1);
  const Eigen::VectorXd& m = s.marginal(which);
  const double a = s.alpha(t);
  const auto K = m.size();
  Eigen::MatrixXd q = (1.0 - a) * Eigen::VectorXd::Ones(K) * m.transpose();
  q.diagonal().array() += a;
  return q;
}

Eigen::MatrixXd cumulative_transition(int t, const DiscreteSchedule& s, Chain which) {
  check_t(t, s.T, 0);
  const Eigen::VectorXd& m = s.marginal(which);
  const double ab = s.abar[static_cast<std::size_t>(t)];
  const auto K = m.size();
  Eigen::MatrixXd q = (1.0 - ab) * Eigen::VectorXd::Ones(K) * m.transpose();
  q.diagonal().array() += ab;
  return q;
}

MolecularGraph noise_graph(const MolecularGraph& g, int t, const DiscreteSchedule& s, Rng& rng) {
  check_t(t, s.T, 1);
  const Eigen::MatrixXd qx = cumulative_transition(t, s, Chain::Node);
  const Eigen::MatrixXd qe = cumulative_transition(t, s, Chain::Edge);
  const int n = g.node_count();
  MolecularGraph out(n);
  std::vector<double> row(static_cast<std::size_t>(qx.cols()));
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd::Map(row.data(), qx.cols()) = qx.row(g.node(i)).transpose();
    out.set_node(i, rng.categorical(row));
  }
  row.resize(static_cast<std::size_t>(qe.cols()));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Eigen::VectorXd::Map(row.data(), qe.cols()) =
          qe.row(static_cast<int>(g.edge(i, j))).transpose();
      out.set_edge(i, j, static_cast<Bond>(rng.categorical(row)));
    }
  }
  return out;
}

Eigen::VectorXd discrete_posterior(int x_clean, int x_t, int t, const DiscreteSchedule& s,
                                   Chain which) {
  check_t(t, s.T, 1);
  const Eigen::VectorXd& m = s.marginal(which);
  const auto K = m.size();
  if (x_clean < 0 || x_clean >= K || x_t < 0 || x_t >= K)
    throw std::out_of_range("discrete_posterior: category out of range");
  const double a = s.alpha(t);
  const double ab_prev = s.abar[static_cast<std::size_t>(t) - 1];
  // q(v | x_clean, x_t) proportional to Q^t[v, x_t] * Qbar^{t-1}[x_clean, v].
  Eigen::VectorXd w(K);
  for (Eigen::Index v = 0; v < K; ++v) {
    const double step = (v == x_t ? a : 0.0) + (1.0 - a) * m[x_t];
    const double cum = (v == x_clean ? ab_prev : 0.0) + (1.0 - ab_prev) * m[v];
    w[v] = step * cum;
  }
  const double z = w.sum();
  if (!(z > 0.0))
    throw NumericError("discrete_posterior: zero normalizer (zero-marginal category)");
  return w / z;
}

Eigen::VectorXd denoising_distribution(const Eigen::VectorXd& p_hat, int x_t, int t,
                                       const DiscreteSchedule& s, Chain which) {
  check_t(t, s.T, 1);
  const Eigen::VectorXd& m = s.marginal(which);
  const auto K = m.size();
  if (p_hat.size() != K) throw std::invalid_argument("denoising_distribution: p_hat size");
  if (std::abs(p_hat.sum() - 1.0) > 1e-9 || (p_hat.array() < -1e-12).any())
    throw std::invalid_argument("denoising_distribution: p_hat is not a distribution");

  const double a = s.alpha(t);
  const double ab_prev = s.abar[static_cast<std::size_t>(t) - 1];
  Eigen::VectorXd mix = Eigen::VectorXd::Zero(K);
  for (Eigen::Index x = 0; x < K; ++x) {
    if (p_hat[x] <= 0.0) continue;
    Eigen::VectorXd w(K);
    for (Eigen::Index v = 0; v < K; ++v) {
      const double step = (v == x_t ? a : 0.0) + (1.0 - a) * m[x_t];
      const double cum = (v == x ? ab_prev : 0.0) + (1.0 - ab_prev) * m[v];
      w[v] = step * cum;
    }
    const double z = w.sum();
    // A zero normalizer means p_hat placed mass on a clean category that
    // cannot reach x_t; that component carries no information, skip it.
    if (z > 0.0) mix += p_hat[x] * (w / z);
  }
  const double total = mix.sum();
  if (!(total > 0.0)) {
    Eigen::VectorXd fallback = Eigen::VectorXd::Zero(K);
    fallback[x_t] = 1.0;
    return fallback;
  }
  return mix / total;
}

}  // namespace syngand

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "syngand/molgraph.hpp"
#include "syngand/rng.hpp"

namespace syngand {

enum class Chain { Node, Edge };

/// Marginal-preserving categorical noise schedule. abar holds cumulative
/// retention for t = 0..T with abar[0] == 1, strictly decreasing and
/// abar[T] < 0.01; m_x and m_e are the category marginals the chain
/// converges to.
struct DiscreteSchedule {
  int T = 0;
  std::vector<double> abar;
  Eigen::VectorXd m_x;
  Eigen::VectorXd m_e;

  /// Squared-cosine cumulative retention, normalized so abar[0] == 1 and
  /// floored at 1e-5 to keep every entry positive.
  static DiscreteSchedule cosine(int T, Eigen::VectorXd m_x, Eigen::VectorXd m_e,
                                 double s = 0.008);

  const Eigen::VectorXd& marginal(Chain which) const {
    return which == Chain::Node ? m_x : m_e;
  }

  /// Single-step retention alpha^t = abar^t / abar^{t-1}.
  double alpha(int t) const;

  void validate() const;
};

/// Q^t = alpha^t I + (1 - alpha^t) 1 m^T. Row-stochastic with stationary
/// distribution m.
Eigen::MatrixXd transition_matrix(int t, const DiscreteSchedule& s, Chain which);

/// Qbar^t = abar^t I + (1 - abar^t) 1 m^T; equals the ordered product
/// Q^1 ... Q^t. t = 0 gives the identity.
Eigen::MatrixXd cumulative_transition(int t, const DiscreteSchedule& s, Chain which);

/// Independently resamples every node from Qbar^t_X and every
/// upper-triangle edge from Qbar^t_E, mirrored to keep symmetry.
MolecularGraph noise_graph(const MolecularGraph& g, int t, const DiscreteSchedule& s, Rng& rng);

/// q(x^{t-1} | x_clean, x^t), normalized over the t-1 category.
Eigen::VectorXd discrete_posterior(int x_clean, int x_t, int t, const DiscreteSchedule& s,
                                   Chain which);

/// p(x^{t-1} | x^t) as the posterior mixture weighted by the predicted
/// clean-category distribution p_hat.
Eigen::VectorXd denoising_distribution(const Eigen::VectorXd& p_hat, int x_t, int t,
                                       const DiscreteSchedule& s, Chain which);

}  // namespace syngand

#pragma once

#include <string>
#include <vector>

#include "syngand/common.hpp"

namespace syngand {

/// Per-ligand continuous property channels with an observed mask.
/// Values are kept in standardized space; unobserved entries carry the
/// imputation value 0 (the standardized mean), never NaN.
struct PropertyVector {
  std::vector<double> values;
  std::vector<bool> mask;

  PropertyVector() = default;
  explicit PropertyVector(int d)
      : values(static_cast<std::size_t>(d), 0.0), mask(static_cast<std::size_t>(d), false) {}

  int channels() const { return static_cast<int>(values.size()); }
  bool any_observed() const {
    for (bool b : mask)
      if (b) return true;
    return false;
  }
};

/// Per-channel z-score transform; statistics come from the training data
/// manifest and travel with checkpoints.
struct Standardizer {
  std::vector<std::string> names;
  std::vector<double> means;
  std::vector<double> stds;

  int channels() const { return static_cast<int>(means.size()); }

  double standardize(int channel, double raw) const {
    return (raw - means.at(static_cast<std::size_t>(channel))) /
           stds.at(static_cast<std::size_t>(channel));
  }

  double destandardize(int channel, double z) const {
    return z * stds.at(static_cast<std::size_t>(channel)) +
           means.at(static_cast<std::size_t>(channel));
  }

  /// Fits mean/std per channel over observed raw values. Channels with
  /// fewer than two observations get the identity transform.
  static Standardizer fit(const std::vector<std::string>& names,
                          const std::vector<std::vector<double>>& observed_per_channel);
};

}  // namespace syngand

#include "syngand/properties.hpp"

#include <cmath>

namespace syngand {

Standardizer Standardizer::fit(const std::vector<std::string>& names,
                               const std::vector<std::vector<double>>& observed_per_channel) {
  Standardizer out;
  out.names = names;
  for (const auto& values : observed_per_channel) {
    if (values.size() < 2) {
      out.means.push_back(0.0);
      out.stds.push_back(1.0);
      continue;
    }
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    double sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
    if (!(sd > 0.0)) sd = 1.0;
    out.means.push_back(mean);
    out.stds.push_back(sd);
  }
  if (out.names.size() != out.means.size())
    throw DataError("Standardizer: channel name count mismatch");
  return out;
}

}  // namespace syngand

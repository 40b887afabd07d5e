#include "syngand/fingerprint.hpp"

#include <algorithm>
#include <stdexcept>

#include "syngand/common.hpp"
#include "syngand/smiles.hpp"

namespace syngand {

namespace {
constexpr std::uint64_t kFingerprintSeed = 0x53594e47414e4400ull;
}

std::vector<std::uint32_t> fingerprint(const MolecularGraph& g, int bits, int radius) {
  if (bits < 1 || (bits & (bits - 1)) != 0)
    throw std::invalid_argument("fingerprint: bits must be a power of two");
  if (radius < 0 || radius > 3) throw std::invalid_argument("fingerprint: radius must be in 0..3");

  // Relabel canonically so identifiers do not depend on input node order.
  const std::vector<int> ranks = canonical_ranks(g);
  const MolecularGraph canon = permute(g, ranks);
  const int n = canon.node_count();

  std::vector<std::uint32_t> counts(static_cast<std::size_t>(bits), 0);
  std::vector<std::uint64_t> id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::uint64_t h = kFingerprintSeed;
    h = hash_combine64(h, static_cast<std::uint64_t>(canon.node(i)));
    h = hash_combine64(h, static_cast<std::uint64_t>(canon.degree(i)));
    h = hash_combine64(h, static_cast<std::uint64_t>(canon.valence_sum(i) * 2.0));
    id[i] = h;
  }

  const std::uint64_t mask = static_cast<std::uint64_t>(bits) - 1;
  for (int r = 0; r <= radius; ++r) {
    if (r > 0) {
      std::vector<std::uint64_t> next(id.size());
      for (int i = 0; i < n; ++i) {
        std::vector<std::uint64_t> neigh;
        for (int j = 0; j < n; ++j) {
          const Bond b = canon.edge(i, j);
          if (j != i && b != Bond::None)
            neigh.push_back(hash_combine64(static_cast<std::uint64_t>(b), id[j]));
        }
        std::sort(neigh.begin(), neigh.end());
        std::uint64_t h = hash_combine64(kFingerprintSeed, static_cast<std::uint64_t>(r));
        h = hash_combine64(h, id[i]);
        for (std::uint64_t v : neigh) h = hash_combine64(h, v);
        next[i] = h;
      }
      id = std::move(next);
    }
    for (int i = 0; i < n; ++i) ++counts[id[i] & mask];
  }
  return counts;
}

}  // namespace syngand

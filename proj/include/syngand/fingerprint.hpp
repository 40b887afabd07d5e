#pragma once

#include <cstdint>
#include <vector>

#include "syngand/molgraph.hpp"

namespace syngand {

constexpr int kDefaultFingerprintBits = 1024;
constexpr int kDefaultFingerprintRadius = 2;

/// Hashed circular count fingerprint. One identifier is emitted per atom
/// per radius level 0..radius, each hashing the atom environment together
/// with its neighbors' previous-level identifiers and bond types, then
/// folded into `bits` buckets. The graph is canonically relabeled first so
/// the result is independent of node order, and the hash is a fixed 64-bit
/// function, so values are stable across runs and platforms.
std::vector<std::uint32_t> fingerprint(const MolecularGraph& g,
                                       int bits = kDefaultFingerprintBits,
                                       int radius = kDefaultFingerprintRadius);

}  // namespace syngand

#include "syngand/molgraph.hpp"

#include <cmath>
#include <stdexcept>

namespace syngand {

AtomVocab AtomVocab::standard() {
  // Guacamol-permitted elements minus implicit hydrogen, with max valences
  // as bond-order sums.
  return AtomVocab({
      {"B", 3},
      {"C", 4},
      {"N", 3},
      {"O", 2},
      {"F", 1},
      {"Si", 4},
      {"P", 5},
      {"S", 6},
      {"Cl", 1},
      {"Se", 6},
      {"Br", 1},
      {"I", 1},
  });
}

std::optional<int> AtomVocab::index_of(const std::string& symbol) const {
  for (std::size_t i = 0; i < specs_.size(); ++i)
    if (specs_[i].symbol == symbol) return static_cast<int>(i);
  return std::nullopt;
}

bool MolecularGraph::valid_against(const AtomVocab& vocab, int max_nodes) const {
  if (n_ < 1 || n_ > max_nodes) return false;
  for (int i = 0; i < n_; ++i)
    if (node(i) < 0 || node(i) >= vocab.size()) return false;
  return true;
}

bool relaxed_validity(const MolecularGraph& g, const AtomVocab& vocab) {
  for (int i = 0; i < g.node_count(); ++i) {
    const int type = g.node(i);
    if (type < 0 || type >= vocab.size()) return false;
    const double order_sum = g.valence_sum(i);
    if (static_cast<int>(std::ceil(order_sum - 1e-9)) > vocab.at(type).max_valence) return false;
    if (g.aromatic_degree(i) == 1) return false;
  }
  return true;
}

MolecularGraph permute(const MolecularGraph& g, const std::vector<int>& perm) {
  const int n = g.node_count();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permute: size mismatch");
  MolecularGraph out(n);
  for (int i = 0; i < n; ++i) out.set_node(perm[i], g.node(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.edge(i, j) != Bond::None) out.set_edge(perm[i], perm[j], g.edge(i, j));
  return out;
}

}  // namespace syngand

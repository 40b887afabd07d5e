#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace syngand {

/// Edge categories. Absence of a bond is a category of its own so the
/// edge matrix is dense over all pairs.
enum class Bond : std::uint8_t {
  None = 0,
  Single = 1,
  Double = 2,
  Triple = 3,
  Aromatic = 4,
};

constexpr int kBondCategories = 5;

/// Bond-order contribution used by the valence check.
inline double bond_order(Bond b) {
  switch (b) {
    case Bond::None: return 0.0;
    case Bond::Single: return 1.0;
    case Bond::Double: return 2.0;
    case Bond::Triple: return 3.0;
    case Bond::Aromatic: return 1.5;
  }
  return 0.0;
}

struct AtomSpec {
  std::string symbol;
  int max_valence = 4;
};

/// Ordered element list for graph nodes. Hydrogen is implicit and never a
/// node; the permitted-element story counts it separately. The default list
/// is editable through the run config.
class AtomVocab {
public:
  AtomVocab() = default;
  explicit AtomVocab(std::vector<AtomSpec> specs) : specs_(std::move(specs)) {}

  static AtomVocab standard();

  int size() const { return static_cast<int>(specs_.size()); }
  const AtomSpec& at(int i) const { return specs_.at(static_cast<std::size_t>(i)); }
  const std::vector<AtomSpec>& specs() const { return specs_; }

  std::optional<int> index_of(const std::string& symbol) const;

private:
  std::vector<AtomSpec> specs_;
};

constexpr int kDefaultMaxNodes = 60;

/// Heavy-atom molecular graph: categorical node types plus a symmetric
/// categorical edge matrix. The diagonal is pinned to Bond::None and writes
/// mirror automatically, so the symmetry invariant cannot be broken through
/// the public surface.
class MolecularGraph {
public:
  explicit MolecularGraph(int n)
      : n_(n),
        nodes_(static_cast<std::size_t>(n), 0),
        edges_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
               static_cast<std::uint8_t>(Bond::None)) {
    if (n < 1) throw std::invalid_argument("MolecularGraph: need at least one node");
  }

  int node_count() const { return n_; }

  int node(int i) const { return nodes_[idx(i)]; }
  void set_node(int i, int type) { nodes_[idx(i)] = static_cast<std::uint8_t>(type); }

  Bond edge(int i, int j) const { return static_cast<Bond>(edges_[idx(i) * n_ + idx(j)]); }

  void set_edge(int i, int j, Bond b) {
    if (i == j) {
      if (b != Bond::None) throw std::invalid_argument("MolecularGraph: self-bond");
      return;
    }
    edges_[idx(i) * n_ + idx(j)] = static_cast<std::uint8_t>(b);
    edges_[idx(j) * n_ + idx(i)] = static_cast<std::uint8_t>(b);
  }

  int degree(int i) const {
    int d = 0;
    for (int j = 0; j < n_; ++j)
      if (j != i && edge(i, j) != Bond::None) ++d;
    return d;
  }

  double valence_sum(int i) const {
    double s = 0.0;
    for (int j = 0; j < n_; ++j)
      if (j != i) s += bond_order(edge(i, j));
    return s;
  }

  int aromatic_degree(int i) const {
    int d = 0;
    for (int j = 0; j < n_; ++j)
      if (j != i && edge(i, j) == Bond::Aromatic) ++d;
    return d;
  }

  bool operator==(const MolecularGraph& other) const {
    return n_ == other.n_ && nodes_ == other.nodes_ && edges_ == other.edges_;
  }

  /// Checks node bounds against a vocab; structural invariants hold by
  /// construction.
  bool valid_against(const AtomVocab& vocab, int max_nodes = kDefaultMaxNodes) const;

private:
  std::size_t idx(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("MolecularGraph: node index");
    return static_cast<std::size_t>(i);
  }

  int n_;
  std::vector<std::uint8_t> nodes_;
  std::vector<std::uint8_t> edges_;
};

/// Permissive chemical sanity check: per-atom bond-order sum (aromatic
/// counts 1.5, total rounded up) within the element's max valence, and no
/// atom with exactly one aromatic edge.
bool relaxed_validity(const MolecularGraph& g, const AtomVocab& vocab);

/// Applies a node relabeling: node i of the input becomes node perm[i].
MolecularGraph permute(const MolecularGraph& g, const std::vector<int>& perm);

}  // namespace syngand

#pragma once

// Random valid-molecule generator shared by tests and the acceptance
// suite. Structures are built with per-atom valence budgets so every
// output passes the relaxed validity check by construction.

#include <string>
#include <vector>

#include "syngand/molgraph.hpp"
#include "syngand/rng.hpp"

namespace syngand::testsupport {

struct MolGenCfg {
  int min_nodes = 2;
  int max_nodes = 9;
  double p_extra_ring = 0.25;
  double p_double = 0.15;
  double p_triple = 0.03;
  double p_aromatic_ring = 0.2;
  bool rich_elements = false;  // sprinkle halogens, S, P, Si, Se, B
};

inline int pick_element(Rng& rng, const AtomVocab& vocab, bool rich, bool need_multivalent) {
  // Indices follow AtomVocab::standard(): B C N O F Si P S Cl Se Br I.
  for (;;) {
    const double u = rng.uniform();
    int e;
    if (!rich) {
      e = u < 0.7 ? 1 : (u < 0.88 ? 2 : 3);  // C / N / O
    } else if (u < 0.55) {
      e = 1;
    } else if (u < 0.68) {
      e = 2;
    } else if (u < 0.78) {
      e = 3;
    } else {
      const int extras[] = {0, 4, 5, 6, 7, 8, 9, 10, 11};
      e = extras[rng.uniform_int(0, 8)];
    }
    if (!need_multivalent || vocab.at(e).max_valence >= 2) return e;
  }
}

inline MolecularGraph random_molecule(Rng& rng, const AtomVocab& vocab, const MolGenCfg& cfg) {
  const int n = rng.uniform_int(cfg.min_nodes, cfg.max_nodes);
  MolecularGraph g(n);
  std::vector<int> budget(static_cast<std::size_t>(n), 0);

  int start = 0;
  const bool aromatic = n >= 6 && rng.uniform() < cfg.p_aromatic_ring;
  if (aromatic) {
    // Plain six-ring; members carry bond order 3, leaving maxval - 3.
    for (int i = 0; i < 6; ++i) {
      const int e = rng.uniform() < 0.85 ? 1 : 2;  // c or n
      g.set_node(i, e);
      budget[static_cast<std::size_t>(i)] = vocab.at(e).max_valence - 3;
    }
    for (int i = 0; i < 6; ++i) g.set_edge(i, (i + 1) % 6, Bond::Aromatic);
    start = 6;
  }

  for (int i = start; i < n; ++i) {
    const bool first = (i == 0);
    const int e = pick_element(rng, vocab, cfg.rich_elements, first && n > 1);
    g.set_node(i, e);
    budget[static_cast<std::size_t>(i)] = vocab.at(e).max_valence;
    if (i == 0) continue;
    std::vector<int> avail;
    for (int j = 0; j < i; ++j)
      if (budget[static_cast<std::size_t>(j)] >= 1) avail.push_back(j);
    int parent;
    if (avail.empty()) {
      // All previous atoms are saturated; free a slot by retyping one as C.
      parent = rng.uniform_int(0, i - 1);
      budget[static_cast<std::size_t>(parent)] +=
          vocab.at(1).max_valence - vocab.at(g.node(parent)).max_valence;
      g.set_node(parent, 1);
      if (budget[static_cast<std::size_t>(parent)] < 1) {
        g.set_edge(parent, i, Bond::Single);  // best effort; caller revalidates
        continue;
      }
    } else {
      parent = avail[rng.uniform_int(0, static_cast<int>(avail.size()) - 1)];
    }
    Bond b = Bond::Single;
    int cost = 1;
    const int pb = budget[static_cast<std::size_t>(parent)];
    const int cb = budget[static_cast<std::size_t>(i)];
    if (pb >= 3 && cb >= 3 && rng.uniform() < cfg.p_triple) {
      b = Bond::Triple;
      cost = 3;
    } else if (pb >= 2 && cb >= 2 && rng.uniform() < cfg.p_double) {
      b = Bond::Double;
      cost = 2;
    }
    g.set_edge(parent, i, b);
    budget[static_cast<std::size_t>(parent)] -= cost;
    budget[static_cast<std::size_t>(i)] -= cost;
  }

  if (n >= 4 && rng.uniform() < cfg.p_extra_ring) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      const int i = rng.uniform_int(0, n - 1);
      const int j = rng.uniform_int(0, n - 1);
      if (i == j || g.edge(i, j) != Bond::None) continue;
      if (budget[static_cast<std::size_t>(i)] >= 1 && budget[static_cast<std::size_t>(j)] >= 1) {
        g.set_edge(i, j, Bond::Single);
        budget[static_cast<std::size_t>(i)] -= 1;
        budget[static_cast<std::size_t>(j)] -= 1;
        break;
      }
    }
  }
  return g;
}

/// Hand-picked subset-SMILES strings plus generated structures, `count`
/// total. Every entry parses and round-trips in the supported subset.
std::vector<std::string> parser_corpus(int count);

}  // namespace syngand::testsupport

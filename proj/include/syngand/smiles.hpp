#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "syngand/molgraph.hpp"

namespace syngand {

enum class SmilesErrorKind {
  EmptyInput,
  UnsupportedToken,
  UnclosedRing,
  UnclosedBranch,
  TooManyAtoms,
};

class SmilesError : public std::runtime_error {
public:
  SmilesError(SmilesErrorKind kind, std::size_t pos, const std::string& msg,
              bool unknown_element = false)
      : std::runtime_error(msg), kind(kind), position(pos), unknown_element(unknown_element) {}

  SmilesErrorKind kind;
  std::size_t position;
  /// True when the offending token was an element symbol outside the vocab,
  /// as opposed to charge/isotope/stereo syntax.
  bool unknown_element;
};

/// Parses the supported SMILES subset: the vocab elements in bracket or
/// organic-subset form, aromatic lowercase c/n/o/s/p, bonds - = # :,
/// branches, ring closures (digit, %nn, %{n}) and '.' separators.
/// Hydrogens, including bracket H counts, are dropped. Charges, isotopes,
/// stereo markers and wildcards are rejected.
MolecularGraph parse_smiles(std::string_view text,
                            const AtomVocab& vocab = AtomVocab::standard(),
                            int max_nodes = kDefaultMaxNodes);

/// Deterministic canonical SMILES via iterative neighborhood refinement
/// with (element, degree, bond-order multiset) tie-breaking. Disconnected
/// graphs are written as '.'-joined components sorted lexicographically.
std::string write_canonical_smiles(const MolecularGraph& g,
                                   const AtomVocab& vocab = AtomVocab::standard());

/// Canonical node order underlying the writer; rank 0 is emitted first
/// within its component. Exposed so featurization can reuse it.
std::vector<int> canonical_ranks(const MolecularGraph& g);

}  // namespace syngand

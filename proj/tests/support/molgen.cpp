#include "support/molgen.hpp"

#include "syngand/smiles.hpp"

namespace syngand::testsupport {

std::vector<std::string> parser_corpus(int count) {
  std::vector<std::string> corpus = {
      "C",
      "CC",
      "CCO",
      "OCC",
      "C=O",
      "C#N",
      "O=C=O",
      "CCCCCCCCCC",
      "CC(C)C",
      "C(C)(C)(C)C",
      "CC(C)(C)CO",
      "C1CC1",
      "C1CCC1",
      "C1CCCC1",
      "C1CCCCC1",
      "C1CC2CCC1CC2",
      "c1ccccc1",
      "Cc1ccccc1",
      "c1ccncc1",
      "c1cnccn1",
      "c1ccc2ccccc2c1",
      "Cc1ccc(O)cc1",
      "c1ccsc1",
      "c1cc[nH]c1",
      "c1ccoc1",
      "CC(=O)OC",
      "CC(=O)NC",
      "CCOC(=O)CC",
      "N#CC1CC1",
      "ClCCl",
      "ClC(Cl)(Cl)Cl",
      "FC(F)(F)CO",
      "BrCCBr",
      "ICCI",
      "CSC",
      "CS(=O)C",
      "CP(C)C",
      "OB(O)O",
      "[Si](C)(C)(C)C",
      "C[Se]C",
      "CC%10CC%10",
      "C=1CCCCC=1",
      "CC(C)c1ccccc1C",
      "OCC(O)C(O)CO",
      "CN(C)C(=O)c1ccccc1",
      "CCC(C)(C)OC",
      "S1C=CC=C1",
      "CC12CC(C1)C2",
  };
  AtomVocab vocab = AtomVocab::standard();
  Rng rng(20240601);
  MolGenCfg cfg;
  cfg.min_nodes = 2;
  cfg.max_nodes = 14;
  cfg.rich_elements = true;
  while (static_cast<int>(corpus.size()) < count) {
    MolecularGraph g = random_molecule(rng, vocab, cfg);
    corpus.push_back(write_canonical_smiles(g, vocab));
  }
  corpus.resize(static_cast<std::size_t>(count));
  return corpus;
}

}  // namespace syngand::testsupport

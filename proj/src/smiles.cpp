#include "syngand/smiles.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace syngand {

namespace {

bool writable_aromatic_element(const std::string& symbol) {
  return symbol == "C" || symbol == "N" || symbol == "O" || symbol == "S" || symbol == "P";
}

bool organic_subset(const std::string& symbol) {
  static const char* kOrganic[] = {"B", "C", "N", "O", "F", "P", "S", "Cl", "Br", "I"};
  for (const char* s : kOrganic)
    if (symbol == s) return true;
  return false;
}

struct ParsedAtom {
  int element = 0;
  bool aromatic = false;
};

struct RingOpen {
  int atom = -1;
  char bond = 0;  // explicit bond char at the opening end, 0 if none
};

class Parser {
public:
  Parser(std::string_view text, const AtomVocab& vocab, int max_nodes)
      : text_(text), vocab_(vocab), max_nodes_(max_nodes) {}

  MolecularGraph run() {
    std::size_t begin = text_.find_first_not_of(" \t\r\n");
    std::size_t end = text_.find_last_not_of(" \t\r\n");
    if (begin == std::string_view::npos)
      throw SmilesError(SmilesErrorKind::EmptyInput, 0, "empty SMILES input");
    text_ = text_.substr(begin, end - begin + 1);

    while (pos_ < text_.size()) step();

    if (!branch_stack_.empty())
      throw SmilesError(SmilesErrorKind::UnclosedBranch, pos_, "unclosed branch");
    if (!open_rings_.empty())
      throw SmilesError(SmilesErrorKind::UnclosedRing, pos_, "unclosed ring bond");
    if (pending_bond_ != 0)
      throw SmilesError(SmilesErrorKind::UnsupportedToken, pos_, "dangling bond");
    if (atoms_.empty())
      throw SmilesError(SmilesErrorKind::EmptyInput, 0, "no atoms in input");

    MolecularGraph g(static_cast<int>(atoms_.size()));
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      g.set_node(static_cast<int>(i), atoms_[i].element);
    for (const auto& [a, b, bond] : bonds_) g.set_edge(a, b, bond);
    return g;
  }

private:
  void step() {
    const char c = text_[pos_];
    switch (c) {
      case '-': case '=': case '#': case ':':
        if (pending_bond_ != 0)
          fail("repeated bond symbol");
        pending_bond_ = c;
        ++pos_;
        return;
      case '(':
        if (prev_atom_ < 0) fail("branch before any atom");
        if (pending_bond_ != 0) fail("bond before branch open");
        branch_stack_.push_back(prev_atom_);
        ++pos_;
        return;
      case ')':
        if (branch_stack_.empty())
          throw SmilesError(SmilesErrorKind::UnclosedBranch, pos_, "branch close without open");
        if (pending_bond_ != 0) fail("dangling bond before branch close");
        prev_atom_ = branch_stack_.back();
        branch_stack_.pop_back();
        ++pos_;
        return;
      case '.':
        if (pending_bond_ != 0) fail("bond across component separator");
        if (!branch_stack_.empty()) fail("component separator inside branch");
        prev_atom_ = -1;
        ++pos_;
        return;
      case '%':
        ring_closure(parse_percent_number());
        return;
      case '[':
        add_atom(parse_bracket_atom());
        return;
      default:
        if (std::isdigit(static_cast<unsigned char>(c))) {
          ++pos_;
          ring_closure(c - '0');
          return;
        }
        add_atom(parse_bare_atom());
        return;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw SmilesError(SmilesErrorKind::UnsupportedToken, pos_, what);
  }

  int parse_percent_number() {
    const std::size_t at = pos_;
    ++pos_;  // consume '%'
    if (pos_ < text_.size() && text_[pos_] == '{') {
      ++pos_;
      std::size_t close = text_.find('}', pos_);
      if (close == std::string_view::npos)
        throw SmilesError(SmilesErrorKind::UnsupportedToken, at, "unterminated %{ ring number");
      int num = 0;
      for (std::size_t i = pos_; i < close; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text_[i])))
          throw SmilesError(SmilesErrorKind::UnsupportedToken, at, "malformed %{ ring number");
        num = num * 10 + (text_[i] - '0');
      }
      pos_ = close + 1;
      return num;
    }
    if (pos_ + 1 >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))
      throw SmilesError(SmilesErrorKind::UnsupportedToken, at, "%% needs two digits");
    const int num = (text_[pos_] - '0') * 10 + (text_[pos_ + 1] - '0');
    pos_ += 2;
    return num;
  }

  ParsedAtom parse_bare_atom() {
    const std::size_t at = pos_;
    const char c = text_[pos_];
    if (c == 'c' || c == 'n' || c == 'o' || c == 's' || c == 'p') {
      ++pos_;
      std::string symbol(1, static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
      return make_atom(symbol, true, at);
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      std::string symbol(1, c);
      if (pos_ + 1 < text_.size()) {
        const char d = text_[pos_ + 1];
        if ((c == 'C' && d == 'l') || (c == 'B' && d == 'r')) symbol.push_back(d);
      }
      if (!organic_subset(symbol))
        throw SmilesError(SmilesErrorKind::UnsupportedToken, at,
                          "element '" + symbol + "' needs bracket form or is unsupported",
                          vocab_.index_of(symbol).has_value() == false);
      pos_ += symbol.size();
      return make_atom(symbol, false, at);
    }
    fail(std::string("unsupported token '") + c + "'");
  }

  ParsedAtom parse_bracket_atom() {
    const std::size_t at = pos_;
    ++pos_;  // consume '['
    if (pos_ >= text_.size())
      throw SmilesError(SmilesErrorKind::UnsupportedToken, at, "unterminated bracket atom");

    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)))
      throw SmilesError(SmilesErrorKind::UnsupportedToken, pos_, "isotope labels unsupported");

    bool aromatic = false;
    std::string symbol;
    if (c == 'c' || c == 'n' || c == 'o' || c == 's' || c == 'p') {
      aromatic = true;
      symbol = std::string(1, static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
      ++pos_;
    } else if (std::isupper(static_cast<unsigned char>(c))) {
      symbol = std::string(1, c);
      ++pos_;
      // Two-letter symbols: second char lowercase, but a trailing 'H' count
      // or ']' ends the symbol.
      if (pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_]))) {
        symbol.push_back(text_[pos_]);
        ++pos_;
      }
    } else {
      throw SmilesError(SmilesErrorKind::UnsupportedToken, pos_, "malformed bracket atom");
    }

    // Optional hydrogen count, dropped (hydrogens are implicit).
    if (pos_ < text_.size() && text_[pos_] == 'H') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    if (pos_ >= text_.size())
      throw SmilesError(SmilesErrorKind::UnsupportedToken, at, "unterminated bracket atom");
    c = text_[pos_];
    if (c == '+' || c == '-')
      throw SmilesError(SmilesErrorKind::UnsupportedToken, pos_, "charges unsupported");
    if (c == '@')
      throw SmilesError(SmilesErrorKind::UnsupportedToken, pos_, "stereo markers unsupported");
    if (c != ']')
      throw SmilesError(SmilesErrorKind::UnsupportedToken, pos_,
                        std::string("unsupported bracket content '") + c + "'");
    ++pos_;
    return make_atom(symbol, aromatic, at);
  }

  ParsedAtom make_atom(const std::string& symbol, bool aromatic, std::size_t at) {
    auto idx = vocab_.index_of(symbol);
    if (!idx)
      throw SmilesError(SmilesErrorKind::UnsupportedToken, at,
                        "element '" + symbol + "' not in the permitted set", true);
    if (aromatic && !writable_aromatic_element(symbol))
      throw SmilesError(SmilesErrorKind::UnsupportedToken, at,
                        "element '" + symbol + "' cannot be aromatic in this subset");
    return ParsedAtom{*idx, aromatic};
  }

  void add_atom(const ParsedAtom& atom) {
    if (static_cast<int>(atoms_.size()) >= max_nodes_)
      throw SmilesError(SmilesErrorKind::TooManyAtoms, pos_,
                        "more than " + std::to_string(max_nodes_) + " atoms");
    const int id = static_cast<int>(atoms_.size());
    atoms_.push_back(atom);
    if (prev_atom_ >= 0) add_bond(prev_atom_, id, pending_bond_);
    pending_bond_ = 0;
    prev_atom_ = id;
  }

  void ring_closure(int number) {
    if (prev_atom_ < 0) fail("ring closure before any atom");
    auto it = open_rings_.find(number);
    if (it == open_rings_.end()) {
      open_rings_[number] = RingOpen{prev_atom_, pending_bond_};
      pending_bond_ = 0;
      return;
    }
    const RingOpen open = it->second;
    open_rings_.erase(it);
    if (open.atom == prev_atom_) fail("ring closure onto the same atom");
    char bond_char = 0;
    if (open.bond != 0 && pending_bond_ != 0 && open.bond != pending_bond_)
      fail("conflicting ring closure bonds");
    bond_char = open.bond != 0 ? open.bond : pending_bond_;
    pending_bond_ = 0;
    add_bond(open.atom, prev_atom_, bond_char);
  }

  void add_bond(int a, int b, char bond_char) {
    for (const auto& [x, y, unused] : bonds_)
      if ((x == a && y == b) || (x == b && y == a)) fail("duplicate bond between atoms");
    Bond bond;
    switch (bond_char) {
      case 0:
        bond = (atoms_[a].aromatic && atoms_[b].aromatic) ? Bond::Aromatic : Bond::Single;
        break;
      case '-': bond = Bond::Single; break;
      case '=': bond = Bond::Double; break;
      case '#': bond = Bond::Triple; break;
      case ':': bond = Bond::Aromatic; break;
      default: fail("unknown bond symbol");
    }
    bonds_.emplace_back(a, b, bond);
  }

  std::string_view text_;
  const AtomVocab& vocab_;
  int max_nodes_;
  std::size_t pos_ = 0;
  int prev_atom_ = -1;
  char pending_bond_ = 0;
  std::vector<int> branch_stack_;
  std::map<int, RingOpen> open_rings_;
  std::vector<ParsedAtom> atoms_;
  std::vector<std::tuple<int, int, Bond>> bonds_;
};

// Dense re-rank of nodes by lexicographic signature order.
int rerank(const std::vector<std::vector<std::uint64_t>>& sig, std::vector<int>& ranks) {
  const int n = static_cast<int>(sig.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
  int classes = 0;
  for (int k = 0; k < n; ++k) {
    if (k > 0 && sig[order[k]] != sig[order[k - 1]]) ++classes;
    ranks[order[k]] = classes;
  }
  return classes + 1;
}

int refine(const MolecularGraph& g, std::vector<int>& ranks, int classes) {
  const int n = g.node_count();
  while (classes < n) {
    std::vector<std::vector<std::uint64_t>> sig(n);
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint64_t> neigh;
      for (int j = 0; j < n; ++j) {
        const Bond b = g.edge(i, j);
        if (j != i && b != Bond::None)
          neigh.push_back((static_cast<std::uint64_t>(b) << 32) |
                          static_cast<std::uint64_t>(ranks[j]));
      }
      std::sort(neigh.begin(), neigh.end());
      sig[i].push_back(static_cast<std::uint64_t>(ranks[i]));
      sig[i].insert(sig[i].end(), neigh.begin(), neigh.end());
    }
    const int next = rerank(sig, ranks);
    if (next == classes) break;
    classes = next;
  }
  return classes;
}

}  // namespace

MolecularGraph parse_smiles(std::string_view text, const AtomVocab& vocab, int max_nodes) {
  return Parser(text, vocab, max_nodes).run();
}

std::vector<int> canonical_ranks(const MolecularGraph& g) {
  const int n = g.node_count();
  std::vector<std::vector<std::uint64_t>> sig(n);
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> orders;
    for (int j = 0; j < n; ++j) {
      const Bond b = g.edge(i, j);
      if (j != i && b != Bond::None) orders.push_back(static_cast<std::uint64_t>(b));
    }
    std::sort(orders.begin(), orders.end());
    sig[i].push_back(static_cast<std::uint64_t>(g.node(i)));
    sig[i].push_back(orders.size());
    sig[i].insert(sig[i].end(), orders.begin(), orders.end());
  }
  std::vector<int> ranks(n, 0);
  int classes = rerank(sig, ranks);
  classes = refine(g, ranks, classes);

  // Remaining ties are broken by individualizing one member of the lowest
  // tied class; ties surviving refinement are automorphic in practice, so
  // the choice does not affect the written string.
  while (classes < n) {
    std::vector<int> class_size(classes, 0);
    for (int r : ranks) ++class_size[r];
    int target_rank = -1;
    for (int r = 0; r < classes; ++r)
      if (class_size[r] > 1) {
        target_rank = r;
        break;
      }
    int chosen = -1;
    for (int i = 0; i < n; ++i)
      if (ranks[i] == target_rank) {
        chosen = i;
        break;
      }
    for (int& r : ranks) r = 2 * r + 1;
    ranks[chosen] -= 1;
    std::vector<std::vector<std::uint64_t>> s2(n);
    for (int i = 0; i < n; ++i) s2[i].push_back(static_cast<std::uint64_t>(ranks[i]));
    classes = rerank(s2, ranks);
    classes = refine(g, ranks, classes);
  }
  return ranks;
}

namespace {

class Writer {
public:
  Writer(const MolecularGraph& g, const AtomVocab& vocab)
      : g_(g), vocab_(vocab), ranks_(canonical_ranks(g)) {
    const int n = g_.node_count();
    aromatic_.resize(n);
    for (int i = 0; i < n; ++i)
      aromatic_[i] =
          g_.aromatic_degree(i) > 0 && writable_aromatic_element(vocab_.at(g_.node(i)).symbol);
  }

  std::string run() {
    const int n = g_.node_count();
    visited_.assign(n, false);
    std::vector<std::string> parts;
    while (true) {
      int root = -1;
      for (int i = 0; i < n; ++i)
        if (!visited_[i] && (root < 0 || ranks_[i] < ranks_[root])) root = i;
      if (root < 0) break;
      collect_tree(root, -1);
      out_.clear();
      ring_slot_.clear();
      used_numbers_.clear();
      emit(root, -1);
      parts.push_back(out_);
    }
    std::sort(parts.begin(), parts.end());
    std::string joined;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) joined.push_back('.');
      joined += parts[i];
    }
    return joined;
  }

private:
  // First pass: spanning tree in canonical order plus ring-edge lists.
  void collect_tree(int u, int parent) {
    visited_[u] = true;
    for (int v : neighbors_by_rank(u)) {
      if (v == parent) continue;
      if (visited_[v]) {
        if (!ring_seen_.contains(edge_key(u, v))) {
          ring_seen_.insert(edge_key(u, v));
          ring_at_[v].push_back(u);  // v was emitted earlier; it opens
          ring_at_[u].push_back(v);
        }
      } else {
        children_[u].push_back(v);
        collect_tree(v, u);
      }
    }
  }

  void emit(int u, int parent) {
    out_ += atom_token(u);
    for (int v : ring_partners_ordered(u)) {
      auto it = ring_slot_.find(edge_key(u, v));
      int number;
      if (it == ring_slot_.end()) {
        number = allocate_ring_number();
        ring_slot_[edge_key(u, v)] = number;
      } else {
        number = it->second;
        ring_slot_.erase(it);
        free_ring_number(number);
      }
      out_ += bond_symbol(u, v);
      out_ += ring_token(number);
    }
    const auto& kids = children_[u];
    for (std::size_t k = 0; k < kids.size(); ++k) {
      const int v = kids[k];
      const bool last = (k + 1 == kids.size());
      if (!last) out_.push_back('(');
      out_ += bond_symbol(u, v);
      emit(v, u);
      if (!last) out_.push_back(')');
    }
    (void)parent;
  }

  std::vector<int> neighbors_by_rank(int u) {
    std::vector<int> result;
    for (int v = 0; v < g_.node_count(); ++v)
      if (v != u && g_.edge(u, v) != Bond::None) result.push_back(v);
    std::sort(result.begin(), result.end(), [&](int a, int b) { return ranks_[a] < ranks_[b]; });
    return result;
  }

  std::vector<int> ring_partners_ordered(int u) {
    auto it = ring_at_.find(u);
    if (it == ring_at_.end()) return {};
    std::vector<int> partners = it->second;
    // Closures (partner already emitted) first, then opens, by rank.
    std::stable_sort(partners.begin(), partners.end(), [&](int a, int b) {
      const bool ca = ring_slot_.contains(edge_key(u, a));
      const bool cb = ring_slot_.contains(edge_key(u, b));
      if (ca != cb) return ca;
      return ranks_[a] < ranks_[b];
    });
    return partners;
  }

  std::string atom_token(int u) const {
    const std::string& symbol = vocab_.at(g_.node(u)).symbol;
    if (aromatic_[u]) {
      std::string t = symbol;
      t[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(t[0])));
      return t;
    }
    if (organic_subset(symbol)) return symbol;
    return "[" + symbol + "]";
  }

  std::string bond_symbol(int u, int v) const {
    const Bond b = g_.edge(u, v);
    const Bond def = (aromatic_[u] && aromatic_[v]) ? Bond::Aromatic : Bond::Single;
    if (b == def) return "";
    switch (b) {
      case Bond::Single: return "-";
      case Bond::Double: return "=";
      case Bond::Triple: return "#";
      case Bond::Aromatic: return ":";
      default: return "";
    }
  }

  static std::string ring_token(int number) {
    if (number < 10) return std::string(1, static_cast<char>('0' + number));
    if (number < 100)
      return "%" + std::string(1, static_cast<char>('0' + number / 10)) +
             std::string(1, static_cast<char>('0' + number % 10));
    return "%{" + std::to_string(number) + "}";
  }

  int allocate_ring_number() {
    int number = 1;
    while (used_numbers_.contains(number)) ++number;
    used_numbers_.insert(number);
    return number;
  }

  void free_ring_number(int number) { used_numbers_.erase(number); }

  static std::uint64_t edge_key(int a, int b) {
    const int lo = std::min(a, b), hi = std::max(a, b);
    return (static_cast<std::uint64_t>(lo) << 32) | static_cast<std::uint64_t>(hi);
  }

  const MolecularGraph& g_;
  const AtomVocab& vocab_;
  std::vector<int> ranks_;
  std::vector<bool> aromatic_;
  std::vector<bool> visited_;
  std::map<int, std::vector<int>> children_;
  std::map<int, std::vector<int>> ring_at_;
  std::set<std::uint64_t> ring_seen_;
  std::map<std::uint64_t, int> ring_slot_;
  std::set<int> used_numbers_;
  std::string out_;
};

}  // namespace

std::string write_canonical_smiles(const MolecularGraph& g, const AtomVocab& vocab) {
  return Writer(g, vocab).run();
}

}  // namespace syngand

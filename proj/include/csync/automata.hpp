#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csync/alphabet.hpp"
#include "csync/exec.hpp"
#include "csync/state_set.hpp"

namespace csync {

// Complete deterministic semi-automaton: no start or final states.
class Dcsa {
 public:
  Dcsa() = default;
  // table[q * |sigma| + x] is the successor of q on symbol x. Every entry must
  // name a state. Empty names default to "q0", "q1", ...
  Dcsa(Alphabet sigma, std::size_t num_states, std::vector<State> table,
       std::vector<std::string> names = {});

  const Alphabet& alphabet() const noexcept { return sigma_; }
  std::size_t num_states() const noexcept { return n_; }
  State next(State q, std::size_t x) const { return table_[q * sigma_.size() + x]; }
  const std::vector<State>& table() const noexcept { return table_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(State q) const { return names_[q]; }

  StateSet all_states() const { return StateSet::full(n_); }

  bool operator==(const Dcsa& o) const {
    return sigma_ == o.sigma_ && n_ == o.n_ && table_ == o.table_ && names_ == o.names_;
  }

 private:
  Alphabet sigma_;
  std::size_t n_ = 0;
  std::vector<State> table_;
  std::vector<std::string> names_;
};

// Partial deterministic finite automaton. Missing transitions hold kNoState.
class Pdfa {
 public:
  Pdfa() = default;
  Pdfa(Alphabet sigma, std::size_t num_states, std::vector<State> table, State start,
       std::vector<bool> finals, std::vector<std::string> names = {});

  const Alphabet& alphabet() const noexcept { return sigma_; }
  std::size_t num_states() const noexcept { return n_; }
  State next(State q, std::size_t x) const { return table_[q * sigma_.size() + x]; }
  const std::vector<State>& table() const noexcept { return table_; }
  State start() const noexcept { return start_; }
  bool is_final(State q) const { return finals_[q]; }
  const std::vector<bool>& finals() const noexcept { return finals_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(State q) const { return names_[q]; }

  // State reached from `from` by reading w, kNoState if the run dies.
  State run(State from, std::string_view w) const;
  bool accepts(std::string_view w) const;

  bool operator==(const Pdfa& o) const {
    return sigma_ == o.sigma_ && n_ == o.n_ && table_ == o.table_ && start_ == o.start_ &&
           finals_ == o.finals_ && names_ == o.names_;
  }

 private:
  Alphabet sigma_;
  std::size_t n_ = 0;
  std::vector<State> table_;
  State start_ = 0;
  std::vector<bool> finals_;
  std::vector<std::string> names_;
};

// Nondeterministic automaton with epsilon edges; internal plumbing.
struct Nfa {
  static constexpr int kEpsilon = -1;
  struct Edge {
    int symbol;  // alphabet index or kEpsilon
    State to;
  };

  Alphabet alphabet;
  std::vector<std::vector<Edge>> edges;
  std::vector<State> starts;
  std::vector<bool> finals;

  explicit Nfa(Alphabet sigma) : alphabet(std::move(sigma)) {}
  std::size_t num_states() const noexcept { return edges.size(); }
  State add_state(bool final_state = false);
  void add_edge(State from, int symbol, State to) { edges[from].push_back({symbol, to}); }

  // Epsilon closure, in place.
  void close(StateSet& s) const;
  StateSet start_set() const;
  StateSet step(const StateSet& s, std::size_t x) const;
  bool any_final(const StateSet& s) const;
  bool accepts(std::string_view w) const;
};

// Homomorphism phi: domain* -> image*; images may be empty.
class Hom {
 public:
  Hom(Alphabet domain, Alphabet image, std::vector<Word> images);

  const Alphabet& domain() const noexcept { return domain_; }
  const Alphabet& image() const noexcept { return image_; }
  const Word& of(std::size_t x) const { return images_[x]; }
  const std::vector<Word>& images() const noexcept { return images_; }
  Word apply(std::string_view w) const;

 private:
  Alphabet domain_;
  Alphabet image_;
  std::vector<Word> images_;
};

struct ContainmentResult {
  bool contained = true;
  std::optional<Word> counterexample;
};

// ---------------------------------------------------------------------------
// stepping

StateSet step_set(const Dcsa& a, const StateSet& s, std::string_view w);
StateSet step_set(const Pdfa& b, const StateSet& s, std::string_view w);
bool is_synchronizing_word(const Dcsa& a, std::string_view w);

// ---------------------------------------------------------------------------
// language operations

std::optional<Word> intersect_nonempty(const Pdfa& b, const Nfa& n, Exec exec = kDefaultExec);
ContainmentResult contained_in(const Pdfa& b, const Pdfa& d);
bool language_equal(const Pdfa& x, const Pdfa& y);

// Subset construction. The result is trimmed and numbered in shortest-lex
// discovery order from the start state.
Pdfa determinize(const Nfa& n);
// Moore partition refinement, then trim and renumber as determinize does.
Pdfa minimize(const Pdfa& b);

Nfa to_nfa(const Pdfa& b);

std::vector<bool> accessible(const Pdfa& b);
std::vector<bool> coaccessible(const Pdfa& b);
// Keeps states that are both accessible and coaccessible. The start state is
// always kept, so the empty language yields a single non-final state.
Pdfa trim(const Pdfa& b);
// Renumbers reachable states in BFS discovery order from the start state.
Pdfa canonical(const Pdfa& b);
// Moves onto a superset alphabet. New symbols have no transitions in a Pdfa
// and act as the identity in a Dcsa.
Pdfa extend_alphabet(const Pdfa& b, const Alphabet& wider);
Dcsa extend_alphabet(const Dcsa& a, const Alphabet& wider);

// Tarjan SCCs; component ids are in reverse topological order of discovery.
std::vector<std::size_t> strongly_connected_components(const Pdfa& b, std::size_t* count = nullptr);

Pdfa preimage_under_hom(const Pdfa& b, const Hom& phi);
Pdfa image_under_hom(const Pdfa& b, const Hom& phi);

// Pdfa accepting every word over sigma.
Pdfa universal_pdfa(const Alphabet& sigma);
// Pdfa for a_1* a_2* ... a_k*.
Pdfa letter_chain_pdfa(const Alphabet& sigma, std::string_view seq);

}  // namespace csync

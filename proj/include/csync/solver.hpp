#pragma once

#include <cstddef>
#include <optional>

#include "csync/automata.hpp"
#include "csync/decomposition.hpp"
#include "csync/exec.hpp"

namespace csync {

inline constexpr std::size_t kDefaultSearchCap = 2'000'000;
inline constexpr std::size_t kDefaultStepCap = 1'000'000;

// Shortest-lex w in L(b) with |delta(Q, w)| = 1, by BFS over (subset, state).
// Throws ResourceError past `cap` explored pairs.
std::optional<Word> solve_brute(const Dcsa& a, const Pdfa& b, std::size_t cap = kDefaultSearchCap,
                                Exec exec = kDefaultExec);

// Polynomial solver for unions whose terms satisfy the P-condition. p_size is
// the state count of the constraint recognizer. Throws InputError on a term
// that violates the condition.
std::optional<Word> solve_poly(const Dcsa& a, const BoundedUnion& u, std::size_t p_size);

// Pair-merging: decides existence, then merges the two smallest remaining
// states greedily. Not necessarily a shortest word.
std::optional<Word> sync_unconstrained(const Dcsa& a);

// Shortest-lex synchronizing word by subset BFS. The cap bounds explored subsets.
std::optional<Word> shortest_sync_word(const Dcsa& a, std::size_t cap = kDefaultSearchCap,
                                       Exec exec = kDefaultExec);

// Least m with delta(S, c^m) inside T for a unary automaton. Absent once the
// subset trajectory cycles; ResourceError after max_steps.
std::optional<std::size_t> transporter_oracle(const Dcsa& a, const StateSet& s, const StateSet& t,
                                              std::size_t max_steps = kDefaultStepCap);

}  // namespace csync

#pragma once

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "csync/automata.hpp"
#include "csync/syntax.hpp"

namespace csync::testing {

// Every word over sigma of length <= max_len, shortest-lex order.
std::vector<Word> all_words(const Alphabet& sigma, std::size_t max_len);

// Direct recursive membership for the regex AST (no automata involved).
bool regex_matches(const RegexNode& r, std::string_view w);

// Reference stepping on a single state by following the table.
State run_state(const Dcsa& a, State q, std::string_view w);

// First word (shortest-lex) up to max_len satisfying pred.
std::optional<Word> first_word(const Alphabet& sigma, std::size_t max_len,
                               const std::function<bool(const Word&)>& pred);

// Cerny automaton C_n: a rotates, b merges 0 into 1.
Dcsa cerny(std::size_t n);
Dcsa identity_dcsa(const Alphabet& sigma, std::size_t n);
// T1: a sends both states to q0, b is the identity.
Dcsa t1();
// t1 with extra identity letters c, d.
Dcsa t1_ext();

using Rng = std::mt19937_64;

Dcsa random_dcsa(Rng& rng, const Alphabet& sigma, std::size_t n);
// Partial DFA; each transition present with probability density.
Pdfa random_pdfa(Rng& rng, const Alphabet& sigma, std::size_t n, double density);
Word random_word(Rng& rng, const Alphabet& sigma, std::size_t max_len);

// Unary automaton (letter c) with random successor function.
Dcsa random_unary(Rng& rng, std::size_t n);

}  // namespace csync::testing

namespace csync::testing {

// Random regex for a union of letter-bounded products, e.g. "a^2(b^3)*c|b".
std::string random_bounded_regex(Rng& rng, const Alphabet& sigma);
// Random polycyclic letter-bounded Pdfa with at most max_states states,
// mixing compiled bounded regexes and forward-only graphs with letter loops.
Pdfa random_letter_bounded(Rng& rng, std::size_t max_states);

}  // namespace csync::testing

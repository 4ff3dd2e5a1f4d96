#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "csync/automata.hpp"

namespace csync {

// delta'(p, x) = delta(p, phi(x)); a is over phi's image alphabet.
Dcsa hom_reduce(const Dcsa& a, const Hom& phi);

struct Lift {
  Dcsa automaton;
  // Pref(phi(Sigma)) minus phi(Sigma), the empty word first.
  std::vector<Word> prefixes;
  std::size_t base_states = 0;
  State state(std::size_t prefix_index, State q) const {
    return static_cast<State>(prefix_index * base_states + q);
  }
};

// a is over phi's domain; the result is over phi's image alphabet. State q of
// a keeps its id. Throws InputError unless the images are distinct and form a
// strongly self-synchronizing code.
Lift lift_strongly_self_sync(const Dcsa& a, const Hom& phi);

// Replaces every transition by a chain of n transitions on the same letter.
// The Pdfa version leaves off-chain letters and missing targets undefined.
Dcsa inflate(const Dcsa& m, std::size_t n);
Pdfa inflate(const Pdfa& m, std::size_t n);

struct Gadget {
  Dcsa automaton;
  // One "# " comment line per role group.
  std::vector<std::string> roles;
};

// Set-transporter gadget over {a, b} for a unary automaton. Original states
// keep their ids; then Q_1..Q_{p2-1}, S_1..S_{r2}, and the sink t last.
Gadget gen_transporter_gadget(const Dcsa& a, const StateSet& s, const StateSet& t, std::size_t r2,
                              std::size_t p2);

// Gadget for (ab)(ba)*(ab): ids q, n+q (q_a), 2n+q (q_b), 3n (t).
Gadget gen_abba_gadget(const Dcsa& a, const StateSet& s, const StateSet& t);

struct GadgetParams {
  std::size_t r1 = 0, r2 = 0, r3 = 0, p2 = 1;
};

// Shortest a^{r1} b^{r2} a^{r3} in L(b) with r1, r3 >= 1 and r2 >= |P|, plus
// the pump length of its b-run. Absent when no such word exists.
std::optional<GadgetParams> derive_gadget_params(const Pdfa& b);

}  // namespace csync

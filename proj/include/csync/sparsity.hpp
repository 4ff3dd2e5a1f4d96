#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csync/automata.hpp"

namespace csync {

// A bounding sequence a_1 ... a_k is stored as the string of its letters.
using BoundingSequence = std::string;

struct PolycyclicResult {
  bool polycyclic = true;
  // Names of the states of the first offending component (trimmed automaton).
  std::vector<std::string> violating_scc;
};

// Tested on the trimmed automaton: every state of a component may keep at
// most one symbol inside that component.
PolycyclicResult is_polycyclic(const Pdfa& b);
bool is_sparse(const Pdfa& b);

// L(b) inside a_1* ... a_k*; the counterexample is shortest-lex.
ContainmentResult verify_letter_bounded(const Pdfa& b, std::string_view seq);

struct Bounding {
  std::vector<Word> words;
  bool letter_bounded = false;
  // Concatenation of the words; the bounding sequence when letter_bounded.
  std::string letters() const;
};

inline constexpr std::size_t kSkeletonCap = 4096;

// Heuristic: concatenates the path patterns of all accepting skeletons.
// Absent when b is not polycyclic. Throws ResourceError past the cap.
std::optional<Bounding> infer_bounding(const Pdfa& b, std::size_t cap = kSkeletonCap);

}  // namespace csync

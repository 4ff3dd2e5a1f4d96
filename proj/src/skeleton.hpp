#pragma once

#include <optional>
#include <vector>

#include "csync/automata.hpp"

namespace csync::detail {

// One piece of an accepting path: fixed text, or a cycle label that may be
// read any number of times.
struct Piece {
  Word text;
  bool pumped = false;
  bool operator==(const Piece& o) const { return text == o.text && pumped == o.pumped; }
};

using Skeleton = std::vector<Piece>;

// b must be trimmed and polycyclic. Skeletons are produced in DFS order with
// symbols expanded in alphabet order. Absent once more than `cap` exist.
std::optional<std::vector<Skeleton>> enumerate_skeletons(const Pdfa& b, std::size_t cap);

}  // namespace csync::detail

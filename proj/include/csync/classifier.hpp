#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csync/automata.hpp"
#include "csync/exec.hpp"
#include "csync/sparsity.hpp"

namespace csync {

enum class VerdictKind {
  in_p,
  np_complete,
  // Sparse, hence in NP, but outside both decidable fragments.
  np_member_undecided,
  // Not sparse; no classification procedure applies.
  not_sparse,
};

struct Verdict {
  VerdictKind kind = VerdictKind::in_p;
  std::string route;
  // 1-based positions in the bounding sequence.
  std::optional<std::array<std::size_t, 3>> triple;
  // Word of L(B) in the triple language.
  std::optional<Word> witness;
  // For the code-lift route: the witness before applying the code map.
  std::optional<Word> witness_preimage;
  // Bounding sequence or words that were used.
  std::vector<Word> bounding;
  std::string note;
};

std::string verdict_label(VerdictKind kind);

// NFA for S* x S* y^n S* z S* over sigma.
Nfa triple_language(const Alphabet& sigma, char x, char y, char z, std::size_t n);

Verdict classify_letter_bounded(const Pdfa& b, std::string_view seq, Exec exec = kDefaultExec);
Verdict classify_word_bounded(const Pdfa& b, const std::vector<Word>& words, Exec exec = kDefaultExec);
// Infers a bounding sequence or bounding words, then routes.
Verdict classify_auto(const Pdfa& b, Exec exec = kDefaultExec);

bool np_membership(const Pdfa& b);

}  // namespace csync

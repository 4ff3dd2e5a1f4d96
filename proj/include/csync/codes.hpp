#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "csync/alphabet.hpp"

namespace csync {

// Finite non-empty set of non-empty words, stored sorted and unique.
class CodeSet {
 public:
  explicit CodeSet(std::vector<Word> words);

  const std::vector<Word>& words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool contains(std::string_view w) const;
  // Pref(C) minus C, sorted, starting with the empty word.
  std::vector<Word> proper_prefixes() const;

 private:
  std::vector<Word> words_;
};

struct CodeCounterexample {
  Word u;
  Word v;
  std::size_t offset = 0;  // 0-based start of `match` inside uv
  Word match;
};

struct CodeCheck {
  bool ok = true;
  std::optional<CodeCounterexample> counterexample;
};

CodeCheck is_self_synchronizing(const CodeSet& c);
CodeCheck is_strongly_self_synchronizing(const CodeSet& c);
// Independent check of the positional characterization: inside uv with u a
// prefix of a code word and v a code word, code words occur only as v at the
// end or as u at the start.
bool positional_check(const CodeSet& c);

bool is_prefix_code(const CodeSet& c);
bool is_infix_code(const CodeSet& c);

struct ConstructedCode {
  std::vector<Word> words;  // in the order of the base words
  std::size_t k = 0;        // longest marker run inside a base word
  CodeCheck strong;         // result of the strong check on the output
};

// Prefixes every word of x with marker^(k+1). Requires equal lengths >= 1 and
// no word starting with the marker; throws InputError otherwise.
ConstructedCode construct_code(const std::vector<Word>& x, char marker);

}  // namespace csync

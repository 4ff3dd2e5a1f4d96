#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace csync {

using Word = std::string;

// Ordered set of single-character symbols. The declaration order fixes the
// lexicographic order used for every witness word.
class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::string_view symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  char symbol(std::size_t i) const { return symbols_[i]; }
  const std::string& symbols() const noexcept { return symbols_; }

  // -1 when absent.
  int index_of(char c) const noexcept { return index_[static_cast<unsigned char>(c)]; }
  bool contains(char c) const noexcept { return index_of(c) >= 0; }
  // Throws InputError when c is not part of the alphabet.
  std::size_t require(char c) const;
  void require_word(std::string_view w) const;

  bool operator==(const Alphabet& other) const noexcept { return symbols_ == other.symbols_; }

 private:
  std::string symbols_;
  std::array<int, 256> index_;
};

// Shortest first, then lexicographic by alphabet declaration order.
bool shortlex_less(const Alphabet& sigma, std::string_view u, std::string_view v);

// Sorted distinct characters of text.
std::string sorted_letters(std::string_view text);

}  // namespace csync

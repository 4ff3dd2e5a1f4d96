#include "csync/alphabet.hpp"

#include <algorithm>

#include "csync/errors.hpp"

namespace csync {

Alphabet::Alphabet() { index_.fill(-1); }

Alphabet::Alphabet(std::string_view symbols) : Alphabet() {
  if (symbols.empty()) throw InputError("alphabet must not be empty");
  for (char c : symbols) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
      throw InputError("alphabet symbols must not be whitespace");
    if (contains(c)) throw InputError(std::string("duplicate alphabet symbol '") + c + "'");
    index_[static_cast<unsigned char>(c)] = static_cast<int>(symbols_.size());
    symbols_.push_back(c);
  }
}

std::size_t Alphabet::require(char c) const {
  int i = index_of(c);
  if (i < 0) throw InputError(std::string("symbol '") + c + "' is not in alphabet {" + symbols_ + "}");
  return static_cast<std::size_t>(i);
}

void Alphabet::require_word(std::string_view w) const {
  for (char c : w) require(c);
}

bool shortlex_less(const Alphabet& sigma, std::string_view u, std::string_view v) {
  if (u.size() != v.size()) return u.size() < v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return sigma.index_of(u[i]) < sigma.index_of(v[i]);
  }
  return false;
}

std::string sorted_letters(std::string_view text) {
  std::string out(text);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace csync

#include "csync/state_set.hpp"

namespace csync {

StateSet StateSet::full(std::size_t universe) {
  StateSet s(universe);
  for (State q = 0; q < universe; ++q) s.insert(q);
  return s;
}

StateSet StateSet::from(std::size_t universe, const std::vector<State>& members) {
  StateSet s(universe);
  for (State q : members) s.insert(q);
  return s;
}

std::size_t StateSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : bits_) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

bool StateSet::empty() const noexcept {
  for (auto w : bits_)
    if (w != 0) return false;
  return true;
}

bool StateSet::subset_of(const StateSet& other) const noexcept {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    std::uint64_t o = i < other.bits_.size() ? other.bits_[i] : 0;
    if ((bits_[i] & ~o) != 0) return false;
  }
  return true;
}

bool StateSet::intersects(const StateSet& other) const noexcept {
  std::size_t n = bits_.size() < other.bits_.size() ? bits_.size() : other.bits_.size();
  for (std::size_t i = 0; i < n; ++i)
    if ((bits_[i] & other.bits_[i]) != 0) return true;
  return false;
}

State StateSet::first() const noexcept {
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if (bits_[w] != 0) return static_cast<State>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits_[w])));
  return kNoState;
}

std::vector<State> StateSet::members() const {
  std::vector<State> out;
  for_each([&](State q) { out.push_back(q); });
  return out;
}

std::size_t StateSet::hash() const noexcept {
  std::size_t h = universe_;
  for (auto w : bits_) h = hash_combine(h, static_cast<std::size_t>(w));
  return h;
}

}  // namespace csync

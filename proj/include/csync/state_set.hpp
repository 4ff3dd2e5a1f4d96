#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <vector>

namespace csync {

using State = std::uint32_t;
inline constexpr State kNoState = std::numeric_limits<State>::max();

// Dense bitset over the states 0..universe-1.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe) : universe_(universe), bits_((universe + 63) / 64, 0) {}
  StateSet(std::size_t universe, std::initializer_list<State> members) : StateSet(universe) {
    for (State q : members) insert(q);
  }
  static StateSet full(std::size_t universe);
  static StateSet from(std::size_t universe, const std::vector<State>& members);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(State q) const noexcept {
    return q < universe_ && ((bits_[q >> 6] >> (q & 63)) & 1u) != 0;
  }
  void insert(State q) { bits_[q >> 6] |= std::uint64_t{1} << (q & 63); }
  void erase(State q) { bits_[q >> 6] &= ~(std::uint64_t{1} << (q & 63)); }

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool subset_of(const StateSet& other) const noexcept;
  bool intersects(const StateSet& other) const noexcept;
  // Smallest member, kNoState when empty.
  State first() const noexcept;
  std::vector<State> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t x = bits_[w];
      while (x != 0) {
        int b = __builtin_ctzll(x);
        f(static_cast<State>(w * 64 + static_cast<std::size_t>(b)));
        x &= x - 1;
      }
    }
  }

  bool operator==(const StateSet& other) const noexcept {
    return universe_ == other.universe_ && bits_ == other.bits_;
  }
  std::size_t hash() const noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct StateSetHash {
  std::size_t operator()(const StateSet& s) const noexcept { return s.hash(); }
};

inline std::size_t hash_combine(std::size_t seed, std::size_t v) noexcept {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace csync

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "csync/automata.hpp"
#include "csync/sparsity.hpp"

namespace csync {

// {a^r} or a^r (a^p)*.
struct UnaryFactor {
  enum class Kind { singleton, progression };
  char letter = 0;
  Kind kind = Kind::singleton;
  std::size_t r = 0;
  std::size_t p = 0;

  static UnaryFactor singleton(char a, std::size_t r) { return {a, Kind::singleton, r, 0}; }
  static UnaryFactor progression(char a, std::size_t r, std::size_t p) { return {a, Kind::progression, r, p}; }

  bool infinite() const noexcept { return kind == Kind::progression; }
  bool is_epsilon() const noexcept { return kind == Kind::singleton && r == 0; }
  bool contains(std::size_t n) const noexcept {
    return kind == Kind::singleton ? n == r : (n >= r && (n - r) % p == 0);
  }
  bool operator==(const UnaryFactor& o) const {
    return letter == o.letter && kind == o.kind && r == o.r && p == o.p;
  }
};

// Factor j uses letter j of the bounding sequence.
struct BoundedTerm {
  std::vector<UnaryFactor> factors;
  bool operator==(const BoundedTerm& o) const { return factors == o.factors; }
};

struct BoundedUnion {
  BoundingSequence sequence;
  std::vector<BoundedTerm> terms;
};

// Throws InputError when L(b) is not inside a_1*...a_k*, ResourceError when
// the skeleton or term cap is exceeded.
BoundedUnion decompose(const Pdfa& b, std::string_view seq, std::size_t cap = kSkeletonCap);

bool term_member(const BoundedTerm& t, std::string_view w);
bool union_member(const BoundedUnion& u, std::string_view w);

// True when no infinite factor has non-empty factors on other letters on both
// of its sides.
bool satisfies_p_condition(const BoundedTerm& t);

std::string to_string(const UnaryFactor& f);
std::string to_string(const BoundedTerm& t);
std::string to_string(const BoundedUnion& u);

}  // namespace csync

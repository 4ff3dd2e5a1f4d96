#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "csync/alphabet.hpp"
#include "csync/errors.hpp"
#include "csync/exec.hpp"

namespace csync {

// Breadth-first search over an implicit graph whose edges are labelled by
// alphabet symbols. Letters are expanded in declaration order and each node
// keeps the parent that discovered it first, so the first goal node found
// yields the shortest, then lexicographically least, word.
//
// succ(node, symbol_index) -> std::optional<Node>; goal(node) -> bool.
// Throws ResourceError once more than `cap` nodes have been discovered.
template <class Node, class Hash>
class LexBfs {
 public:
  struct Result {
    std::optional<Word> word;
    std::size_t explored = 0;
  };

  template <class Succ, class Goal>
  static Result run(const Alphabet& sigma, Node start, Succ&& succ, Goal&& goal, std::size_t cap,
                    Exec exec, const char* what = "search") {
    return exec == Exec::parallel ? run_parallel(sigma, std::move(start), succ, goal, cap, what)
                                  : run_serial(sigma, std::move(start), succ, goal, cap, what);
  }

 private:
  struct Entry {
    std::size_t parent;
    int symbol;
  };

  static Word trace(const Alphabet& sigma, const std::vector<Entry>& entries, std::size_t at) {
    Word w;
    while (entries[at].symbol >= 0) {
      w.push_back(sigma.symbol(static_cast<std::size_t>(entries[at].symbol)));
      at = entries[at].parent;
    }
    return Word(w.rbegin(), w.rend());
  }

  static void over_cap(const char* what, std::size_t cap) {
    throw ResourceError(std::string(what) + ": exploration cap of " + std::to_string(cap) +
                        " states exceeded");
  }

  template <class Succ, class Goal>
  static Result run_serial(const Alphabet& sigma, Node start, Succ& succ, Goal& goal,
                           std::size_t cap, const char* what) {
    std::vector<Node> nodes;
    std::vector<Entry> entries;
    std::unordered_map<Node, std::size_t, Hash> index;
    if (goal(start)) return {Word{}, 1};
    index.emplace(start, 0);
    nodes.push_back(std::move(start));
    entries.push_back({0, -1});
    for (std::size_t head = 0; head < nodes.size(); ++head) {
      for (std::size_t x = 0; x < sigma.size(); ++x) {
        std::optional<Node> next = succ(nodes[head], x);
        if (!next) continue;
        auto [it, fresh] = index.emplace(*next, nodes.size());
        if (!fresh) continue;
        entries.push_back({head, static_cast<int>(x)});
        bool hit = goal(*next);
        nodes.push_back(std::move(*next));
        if (hit) return {trace(sigma, entries, nodes.size() - 1), nodes.size()};
        if (nodes.size() > cap) over_cap(what, cap);
      }
    }
    return {std::nullopt, nodes.size()};
  }

  // Level-synchronous variant: successors of the whole frontier are computed
  // concurrently, then merged serially in (frontier position, symbol) order,
  // which reproduces the serial discovery order exactly.
  template <class Succ, class Goal>
  static Result run_parallel(const Alphabet& sigma, Node start, Succ& succ, Goal& goal,
                             std::size_t cap, const char* what) {
    std::vector<Node> nodes;
    std::vector<Entry> entries;
    std::unordered_map<Node, std::size_t, Hash> index;
    if (goal(start)) return {Word{}, 1};
    index.emplace(start, 0);
    nodes.push_back(std::move(start));
    entries.push_back({0, -1});
    const std::size_t k = sigma.size();
    std::size_t level_begin = 0;
    std::vector<std::optional<Node>> expanded;
    while (level_begin < nodes.size()) {
      const std::size_t level_end = nodes.size();
      const std::ptrdiff_t width = static_cast<std::ptrdiff_t>(level_end - level_begin);
      expanded.assign(static_cast<std::size_t>(width) * k, std::nullopt);
#pragma omp parallel for schedule(dynamic, 16)
      for (std::ptrdiff_t i = 0; i < width; ++i) {
        const Node& from = nodes[level_begin + static_cast<std::size_t>(i)];
        for (std::size_t x = 0; x < k; ++x) expanded[static_cast<std::size_t>(i) * k + x] = succ(from, x);
      }
      for (std::size_t i = 0; i < static_cast<std::size_t>(width); ++i) {
        for (std::size_t x = 0; x < k; ++x) {
          std::optional<Node>& next = expanded[i * k + x];
          if (!next) continue;
          auto [it, fresh] = index.emplace(*next, nodes.size());
          if (!fresh) continue;
          entries.push_back({level_begin + i, static_cast<int>(x)});
          bool hit = goal(*next);
          nodes.push_back(std::move(*next));
          if (hit) return {trace(sigma, entries, nodes.size() - 1), nodes.size()};
          if (nodes.size() > cap) over_cap(what, cap);
        }
      }
      level_begin = level_end;
    }
    return {std::nullopt, nodes.size()};
  }
};

}  // namespace csync

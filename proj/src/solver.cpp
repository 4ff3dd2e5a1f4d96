#include "csync/solver.hpp"

#include <algorithm>
#include <unordered_set>

#include "csync/bfs.hpp"
#include "csync/errors.hpp"

namespace csync {

namespace {

struct PairNode {
  StateSet s;
  State p;
  bool operator==(const PairNode& o) const { return p == o.p && s == o.s; }
};

struct PairNodeHash {
  std::size_t operator()(const PairNode& n) const noexcept { return hash_combine(n.s.hash(), n.p); }
};

StateSet image(const Dcsa& a, const StateSet& s, std::size_t x) {
  StateSet out(a.num_states());
  s.for_each([&](State q) { out.insert(a.next(q, x)); });
  return out;
}

}  // namespace

std::optional<Word> solve_brute(const Dcsa& a, const Pdfa& b, std::size_t cap, Exec exec) {
  if (!(a.alphabet() == b.alphabet()))
    throw InputError("alphabet mismatch between automaton {" + a.alphabet().symbols() + "} and constraint {" +
                     b.alphabet().symbols() + "}");
  const std::vector<bool> live = coaccessible(b);
  if (!live[b.start()]) return std::nullopt;
  auto succ = [&](const PairNode& n, std::size_t x) -> std::optional<PairNode> {
    State p = b.next(n.p, x);
    if (p == kNoState || !live[p]) return std::nullopt;
    return PairNode{image(a, n.s, x), p};
  };
  auto goal = [&](const PairNode& n) { return b.is_final(n.p) && n.s.count() == 1; };
  return LexBfs<PairNode, PairNodeHash>::run(a.alphabet(), PairNode{a.all_states(), b.start()}, succ, goal, cap,
                                             exec, "constrained search")
      .word;
}

namespace {

// Same-letter neighbours of a term merged, empty factors dropped.
struct Block {
  char letter;
  std::vector<UnaryFactor> parts;

  bool infinite() const {
    return std::any_of(parts.begin(), parts.end(), [](const UnaryFactor& f) { return f.infinite(); });
  }
  std::size_t fixed() const {
    std::size_t n = 0;
    for (const auto& f : parts) n += f.r;
    return n;
  }
  // Sorted achievable lengths up to limit.
  std::vector<std::size_t> lengths(std::size_t limit) const {
    std::vector<bool> reach(limit + 1, false);
    reach[0] = true;
    for (const auto& f : parts) {
      std::vector<bool> nxt(limit + 1, false);
      for (std::size_t i = 0; i <= limit; ++i) {
        if (!reach[i]) continue;
        for (std::size_t m = f.r; i + m <= limit; m += f.p) {
          nxt[i + m] = true;
          if (!f.infinite()) break;
        }
      }
      reach = std::move(nxt);
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i <= limit; ++i)
      if (reach[i]) out.push_back(i);
    return out;
  }
};

std::vector<Block> merge_blocks(const BoundedTerm& t) {
  std::vector<Block> blocks;
  for (const auto& f : t.factors) {
    if (f.is_epsilon()) continue;
    if (blocks.empty() || blocks.back().letter != f.letter) blocks.push_back({f.letter, {}});
    blocks.back().parts.push_back(f);
  }
  return blocks;
}

}  // namespace

std::optional<Word> solve_poly(const Dcsa& a, const BoundedUnion& u, std::size_t p_size) {
  for (char c : u.sequence) a.alphabet().require(c);
  const std::size_t nq = a.num_states();
  std::vector<Word> candidates;
  for (const auto& term : u.terms) {
    std::vector<Block> blocks = merge_blocks(term);
    for (std::size_t i = 1; i + 1 < blocks.size(); ++i)
      if (blocks[i].infinite())
        throw InputError("term '" + to_string(term) + "' has an infinite factor strictly inside");
    if (blocks.empty()) {
      candidates.emplace_back();
      continue;
    }
    // Options for an end block: every member up to the point where the
    // reached set can no longer change.
    auto options = [&](const Block& blk) -> std::vector<std::size_t> {
      if (!blk.infinite()) return {blk.fixed()};
      std::size_t limit = nq + p_size + blk.fixed();
      for (const auto& f : blk.parts) limit += f.p;
      std::vector<std::size_t> all = blk.lengths(limit);
      std::size_t least = *std::find_if(all.begin(), all.end(), [&](std::size_t n) { return n + 1 >= nq; });
      std::size_t bound = std::max(nq - 1 + p_size, least);
      std::vector<std::size_t> out;
      for (auto n : all)
        if (n <= bound) out.push_back(n);
      return out;
    };
    Word middle;
    for (std::size_t i = 1; i + 1 < blocks.size(); ++i) middle += Word(blocks[i].fixed(), blocks[i].letter);
    std::vector<std::size_t> lead = options(blocks.front());
    if (blocks.size() == 1) {
      for (auto n : lead) candidates.push_back(Word(n, blocks.front().letter));
      continue;
    }
    std::vector<std::size_t> trail = options(blocks.back());
    for (auto n : lead)
      for (auto m : trail)
        candidates.push_back(Word(n, blocks.front().letter) + middle + Word(m, blocks.back().letter));
  }
  const Alphabet& sigma = a.alphabet();
  std::sort(candidates.begin(), candidates.end(),
            [&](const Word& x, const Word& y) { return shortlex_less(sigma, x, y); });
  for (const auto& w : candidates)
    if (is_synchronizing_word(a, w)) return w;
  return std::nullopt;
}

namespace {

struct Pair {
  State p, q;
  bool operator==(const Pair& o) const { return p == o.p && q == o.q; }
};

struct PairHash {
  std::size_t operator()(const Pair& x) const noexcept { return hash_combine(x.p, x.q); }
};

Pair ordered(State p, State q) { return p < q ? Pair{p, q} : Pair{q, p}; }

}  // namespace

std::optional<Word> sync_unconstrained(const Dcsa& a) {
  const std::size_t n = a.num_states(), k = a.alphabet().size();
  // Backward reachability of the diagonal in the pair automaton.
  std::vector<std::vector<std::size_t>> rev(n * n);
  for (State p = 0; p < n; ++p)
    for (State q = p + 1; q < n; ++q)
      for (std::size_t x = 0; x < k; ++x) {
        Pair t = ordered(a.next(p, x), a.next(q, x));
        rev[t.p * n + t.q].push_back(p * n + q);
      }
  std::vector<bool> good(n * n, false);
  std::vector<std::size_t> stack;
  for (State p = 0; p < n; ++p) {
    good[p * n + p] = true;
    stack.push_back(p * n + p);
  }
  while (!stack.empty()) {
    std::size_t c = stack.back();
    stack.pop_back();
    for (auto from : rev[c])
      if (!good[from]) {
        good[from] = true;
        stack.push_back(from);
      }
  }
  for (State p = 0; p < n; ++p)
    for (State q = p + 1; q < n; ++q)
      if (!good[p * n + q]) return std::nullopt;

  Word w;
  StateSet cur = a.all_states();
  while (cur.count() > 1) {
    std::vector<State> m = cur.members();
    auto succ = [&](const Pair& x, std::size_t s) -> std::optional<Pair> {
      return ordered(a.next(x.p, s), a.next(x.q, s));
    };
    auto goal = [](const Pair& x) { return x.p == x.q; };
    auto r = LexBfs<Pair, PairHash>::run(a.alphabet(), Pair{m[0], m[1]}, succ, goal, n * n + 1, Exec::serial,
                                         "pair merge");
    w += *r.word;
    cur = step_set(a, cur, *r.word);
  }
  return w;
}

std::optional<Word> shortest_sync_word(const Dcsa& a, std::size_t cap, Exec exec) {
  auto succ = [&](const StateSet& s, std::size_t x) -> std::optional<StateSet> { return image(a, s, x); };
  auto goal = [](const StateSet& s) { return s.count() == 1; };
  return LexBfs<StateSet, StateSetHash>::run(a.alphabet(), a.all_states(), succ, goal, cap, exec, "subset search")
      .word;
}

std::optional<std::size_t> transporter_oracle(const Dcsa& a, const StateSet& s, const StateSet& t,
                                              std::size_t max_steps) {
  if (a.alphabet().size() != 1) throw InputError("set transporter oracle needs a unary automaton");
  if (s.universe() != a.num_states() || t.universe() != a.num_states())
    throw InputError("state sets do not belong to this automaton");
  if (s.intersects(t)) throw InputError("S and T must be disjoint");
  std::unordered_set<StateSet, StateSetHash> seen;
  StateSet x = s;
  for (std::size_t m = 0;; ++m) {
    if (x.subset_of(t)) return m;
    if (!seen.insert(x).second) return std::nullopt;
    if (m >= max_steps) throw ResourceError("set transporter oracle: step cap of " + std::to_string(max_steps) +
                                            " exceeded");
    x = image(a, x, 0);
  }
}

}  // namespace csync

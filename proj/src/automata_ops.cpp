#include <algorithm>
#include <map>
#include <unordered_map>

#include "csync/automata.hpp"
#include "csync/bfs.hpp"
#include "csync/errors.hpp"

namespace csync {

namespace {

void require_same_alphabet(const Alphabet& x, const Alphabet& y) {
  if (!(x == y))
    throw InputError("alphabet mismatch: {" + x.symbols() + "} vs {" + y.symbols() + "}");
}

struct ProductNode {
  State p;
  StateSet s;
  bool operator==(const ProductNode& o) const { return p == o.p && s == o.s; }
};

struct ProductHash {
  std::size_t operator()(const ProductNode& n) const noexcept { return hash_combine(n.s.hash(), n.p); }
};

constexpr std::size_t kUnbounded = static_cast<std::size_t>(-1);

// Keeps only the states flagged in `keep` (start forced), preserving order.
Pdfa restrict_states(const Pdfa& b, std::vector<bool> keep) {
  keep[b.start()] = true;  // callers guarantee start is live
  const std::size_t k = b.alphabet().size();
  std::vector<State> remap(b.num_states(), kNoState);
  std::size_t n = 0;
  for (State q = 0; q < b.num_states(); ++q)
    if (keep[q]) remap[q] = static_cast<State>(n++);
  std::vector<State> table(n * k, kNoState);
  std::vector<bool> finals(n, false);
  std::vector<std::string> names(n);
  for (State q = 0; q < b.num_states(); ++q) {
    if (!keep[q]) continue;
    State nq = remap[q];
    finals[nq] = b.is_final(q);
    names[nq] = b.name(q);
    for (std::size_t x = 0; x < k; ++x) {
      State t = b.next(q, x);
      if (t != kNoState && keep[t]) table[nq * k + x] = remap[t];
    }
  }
  return Pdfa(b.alphabet(), n, std::move(table), remap[b.start()], std::move(finals), std::move(names));
}

}  // namespace

std::optional<Word> intersect_nonempty(const Pdfa& b, const Nfa& n, Exec exec) {
  require_same_alphabet(b.alphabet(), n.alphabet);
  const std::vector<bool> live = coaccessible(b);
  if (!live[b.start()]) return std::nullopt;
  ProductNode start{b.start(), n.start_set()};
  if (start.s.empty()) return std::nullopt;
  auto succ = [&](const ProductNode& node, std::size_t x) -> std::optional<ProductNode> {
    State p = b.next(node.p, x);
    if (p == kNoState || !live[p]) return std::nullopt;
    StateSet s = n.step(node.s, x);
    if (s.empty()) return std::nullopt;
    return ProductNode{p, std::move(s)};
  };
  auto goal = [&](const ProductNode& node) { return b.is_final(node.p) && n.any_final(node.s); };
  return LexBfs<ProductNode, ProductHash>::run(b.alphabet(), std::move(start), succ, goal, kUnbounded,
                                                exec, "intersection")
      .word;
}

ContainmentResult contained_in(const Pdfa& b, const Pdfa& d) {
  require_same_alphabet(b.alphabet(), d.alphabet());
  // Complement of d as an NFA: complete it with a sink, flip finality.
  Nfa comp(d.alphabet());
  const std::size_t k = d.alphabet().size();
  for (State q = 0; q < d.num_states(); ++q) comp.add_state(!d.is_final(q));
  State sink = comp.add_state(true);
  for (State q = 0; q < d.num_states(); ++q)
    for (std::size_t x = 0; x < k; ++x) {
      State t = d.next(q, x);
      comp.add_edge(q, static_cast<int>(x), t == kNoState ? sink : t);
    }
  for (std::size_t x = 0; x < k; ++x) comp.add_edge(sink, static_cast<int>(x), sink);
  comp.starts.push_back(d.start());
  std::optional<Word> w = intersect_nonempty(b, comp, Exec::serial);
  if (w) return {false, w};
  return {true, std::nullopt};
}

bool language_equal(const Pdfa& x, const Pdfa& y) {
  return contained_in(x, y).contained && contained_in(y, x).contained;
}

Nfa to_nfa(const Pdfa& b) {
  Nfa n(b.alphabet());
  const std::size_t k = b.alphabet().size();
  for (State q = 0; q < b.num_states(); ++q) n.add_state(b.is_final(q));
  for (State q = 0; q < b.num_states(); ++q)
    for (std::size_t x = 0; x < k; ++x) {
      State t = b.next(q, x);
      if (t != kNoState) n.add_edge(q, static_cast<int>(x), t);
    }
  n.starts.push_back(b.start());
  return n;
}

Pdfa determinize(const Nfa& n) {
  const std::size_t k = n.alphabet.size();
  std::unordered_map<StateSet, State, StateSetHash> index;
  std::vector<StateSet> subsets;
  std::vector<State> table;
  StateSet start = n.start_set();
  index.emplace(start, 0);
  subsets.push_back(start);
  for (std::size_t head = 0; head < subsets.size(); ++head) {
    table.resize((head + 1) * k, kNoState);
    for (std::size_t x = 0; x < k; ++x) {
      StateSet t = n.step(subsets[head], x);
      if (t.empty()) continue;
      auto [it, fresh] = index.emplace(t, static_cast<State>(subsets.size()));
      if (fresh) subsets.push_back(std::move(t));
      table[head * k + x] = it->second;
    }
  }
  std::vector<bool> finals(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) finals[i] = n.any_final(subsets[i]);
  Pdfa raw(n.alphabet, subsets.size(), std::move(table), 0, std::move(finals));
  return canonical(trim(raw));
}

Pdfa minimize(const Pdfa& input) {
  Pdfa b = trim(input);
  const std::size_t k = b.alphabet().size();
  const std::size_t n = b.num_states() + 1;  // last state is the completion sink
  const State sink = static_cast<State>(n - 1);
  auto succ = [&](State q, std::size_t x) -> State {
    if (q == sink) return sink;
    State t = b.next(q, x);
    return t == kNoState ? sink : t;
  };
  std::vector<std::size_t> cls(n);
  for (State q = 0; q < n; ++q) cls[q] = (q != sink && b.is_final(q)) ? 1 : 0;
  std::size_t num_classes = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> sig_index;
    std::vector<std::size_t> next_cls(n);
    for (State q = 0; q < n; ++q) {
      std::vector<std::size_t> sig{cls[q]};
      for (std::size_t x = 0; x < k; ++x) sig.push_back(cls[succ(q, x)]);
      auto [it, fresh] = sig_index.emplace(std::move(sig), sig_index.size());
      next_cls[q] = it->second;
    }
    std::size_t count = sig_index.size();
    cls = std::move(next_cls);
    if (count == num_classes) break;
    num_classes = count;
  }
  const std::size_t sink_cls = cls[sink];
  std::vector<State> table(num_classes * k, kNoState);
  std::vector<bool> finals(num_classes, false);
  for (State q = 0; q < sink; ++q) {
    finals[cls[q]] = b.is_final(q);
    for (std::size_t x = 0; x < k; ++x) {
      std::size_t t = cls[succ(q, x)];
      if (t != sink_cls) table[cls[q] * k + x] = static_cast<State>(t);
    }
  }
  // The sink class keeps no transitions and is dropped by trim.
  Pdfa quotient(b.alphabet(), num_classes, std::move(table), static_cast<State>(cls[b.start()]),
                std::move(finals));
  return canonical(trim(quotient));
}

std::vector<bool> accessible(const Pdfa& b) {
  std::vector<bool> seen(b.num_states(), false);
  std::vector<State> stack{b.start()};
  seen[b.start()] = true;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (std::size_t x = 0; x < b.alphabet().size(); ++x) {
      State t = b.next(q, x);
      if (t != kNoState && !seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

std::vector<bool> coaccessible(const Pdfa& b) {
  std::vector<std::vector<State>> rev(b.num_states());
  for (State q = 0; q < b.num_states(); ++q)
    for (std::size_t x = 0; x < b.alphabet().size(); ++x) {
      State t = b.next(q, x);
      if (t != kNoState) rev[t].push_back(q);
    }
  std::vector<bool> seen(b.num_states(), false);
  std::vector<State> stack;
  for (State q = 0; q < b.num_states(); ++q)
    if (b.is_final(q)) {
      seen[q] = true;
      stack.push_back(q);
    }
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State p : rev[q])
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
  }
  return seen;
}

Pdfa trim(const Pdfa& b) {
  std::vector<bool> acc = accessible(b);
  std::vector<bool> co = coaccessible(b);
  if (!co[b.start()])
    return Pdfa(b.alphabet(), 1, std::vector<State>(b.alphabet().size(), kNoState), 0, {false},
                {b.name(b.start())});
  std::vector<bool> keep(b.num_states());
  for (State q = 0; q < b.num_states(); ++q) keep[q] = acc[q] && co[q];
  return restrict_states(b, std::move(keep));
}

Pdfa canonical(const Pdfa& b) {
  const std::size_t k = b.alphabet().size();
  std::vector<State> order;
  std::vector<State> remap(b.num_states(), kNoState);
  remap[b.start()] = 0;
  order.push_back(b.start());
  for (std::size_t head = 0; head < order.size(); ++head)
    for (std::size_t x = 0; x < k; ++x) {
      State t = b.next(order[head], x);
      if (t != kNoState && remap[t] == kNoState) {
        remap[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  const std::size_t n = order.size();
  std::vector<State> table(n * k, kNoState);
  std::vector<bool> finals(n);
  for (std::size_t i = 0; i < n; ++i) {
    finals[i] = b.is_final(order[i]);
    for (std::size_t x = 0; x < k; ++x) {
      State t = b.next(order[i], x);
      if (t != kNoState) table[i * k + x] = remap[t];
    }
  }
  return Pdfa(b.alphabet(), n, std::move(table), 0, std::move(finals));
}

Pdfa extend_alphabet(const Pdfa& b, const Alphabet& wider) {
  for (char c : b.alphabet().symbols())
    if (!wider.contains(c)) throw InputError(std::string("symbol '") + c + "' missing from wider alphabet");
  const std::size_t k = wider.size();
  std::vector<State> table(b.num_states() * k, kNoState);
  for (State q = 0; q < b.num_states(); ++q)
    for (std::size_t x = 0; x < b.alphabet().size(); ++x)
      table[q * k + static_cast<std::size_t>(wider.index_of(b.alphabet().symbol(x)))] = b.next(q, x);
  return Pdfa(wider, b.num_states(), std::move(table), b.start(), b.finals(), b.names());
}

Dcsa extend_alphabet(const Dcsa& a, const Alphabet& wider) {
  for (char c : a.alphabet().symbols())
    if (!wider.contains(c)) throw InputError(std::string("symbol '") + c + "' missing from wider alphabet");
  const std::size_t k = wider.size();
  std::vector<State> table(a.num_states() * k);
  for (State q = 0; q < a.num_states(); ++q)
    for (std::size_t y = 0; y < k; ++y) {
      int x = a.alphabet().index_of(wider.symbol(y));
      table[q * k + y] = x < 0 ? q : a.next(q, static_cast<std::size_t>(x));
    }
  return Dcsa(wider, a.num_states(), std::move(table), a.names());
}

std::vector<std::size_t> strongly_connected_components(const Pdfa& b, std::size_t* count) {
  const std::size_t n = b.num_states();
  const std::size_t k = b.alphabet().size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> idx(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<State> stack;
  std::size_t counter = 0, num = 0;
  struct Frame {
    State q;
    std::size_t x;
  };
  for (State root = 0; root < n; ++root) {
    if (idx[root] != kUnset) continue;
    std::vector<Frame> call{{root, 0}};
    idx[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.x < k) {
        State t = b.next(f.q, f.x++);
        if (t == kNoState) continue;
        if (idx[t] == kUnset) {
          idx[t] = low[t] = counter++;
          stack.push_back(t);
          on_stack[t] = true;
          call.push_back({t, 0});
        } else if (on_stack[t]) {
          low[f.q] = std::min(low[f.q], idx[t]);
        }
        continue;
      }
      State q = f.q;
      call.pop_back();
      if (!call.empty()) low[call.back().q] = std::min(low[call.back().q], low[q]);
      if (low[q] == idx[q]) {
        State m;
        do {
          m = stack.back();
          stack.pop_back();
          on_stack[m] = false;
          comp[m] = num;
        } while (m != q);
        ++num;
      }
    }
  }
  if (count) *count = num;
  return comp;
}

Pdfa preimage_under_hom(const Pdfa& b, const Hom& phi) {
  require_same_alphabet(phi.image(), b.alphabet());
  const std::size_t k = phi.domain().size();
  std::vector<State> table(b.num_states() * k, kNoState);
  for (State q = 0; q < b.num_states(); ++q)
    for (std::size_t x = 0; x < k; ++x) table[q * k + x] = b.run(q, phi.of(x));
  return Pdfa(phi.domain(), b.num_states(), std::move(table), b.start(), b.finals(), b.names());
}

Pdfa image_under_hom(const Pdfa& b, const Hom& phi) {
  require_same_alphabet(phi.domain(), b.alphabet());
  Nfa n(phi.image());
  for (State q = 0; q < b.num_states(); ++q) n.add_state(b.is_final(q));
  for (State q = 0; q < b.num_states(); ++q)
    for (std::size_t x = 0; x < b.alphabet().size(); ++x) {
      State t = b.next(q, x);
      if (t == kNoState) continue;
      const Word& w = phi.of(x);
      if (w.empty()) {
        n.add_edge(q, Nfa::kEpsilon, t);
        continue;
      }
      State cur = q;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        State mid = n.add_state();
        n.add_edge(cur, static_cast<int>(phi.image().index_of(w[i])), mid);
        cur = mid;
      }
      n.add_edge(cur, static_cast<int>(phi.image().index_of(w.back())), t);
    }
  n.starts.push_back(b.start());
  return minimize(determinize(n));
}

Pdfa universal_pdfa(const Alphabet& sigma) {
  return Pdfa(sigma, 1, std::vector<State>(sigma.size(), 0), 0, {true});
}

Pdfa letter_chain_pdfa(const Alphabet& sigma, std::string_view seq) {
  if (seq.empty()) throw InputError("bounding sequence must not be empty");
  Nfa n(sigma);
  for (std::size_t i = 0; i < seq.size(); ++i) n.add_state(true);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    n.add_edge(static_cast<State>(i), static_cast<int>(sigma.require(seq[i])), static_cast<State>(i));
    if (i + 1 < seq.size()) n.add_edge(static_cast<State>(i), Nfa::kEpsilon, static_cast<State>(i + 1));
  }
  n.starts.push_back(0);
  return minimize(determinize(n));
}

}  // namespace csync

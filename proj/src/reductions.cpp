#include "csync/reductions.hpp"

#include <algorithm>

#include "csync/codes.hpp"
#include "csync/errors.hpp"

namespace csync {

Dcsa hom_reduce(const Dcsa& a, const Hom& phi) {
  if (!(phi.image() == a.alphabet()))
    throw InputError("homomorphism image alphabet {" + phi.image().symbols() + "} differs from automaton alphabet {" +
                     a.alphabet().symbols() + "}");
  const std::size_t n = a.num_states(), k = phi.domain().size();
  std::vector<State> table(n * k);
  for (State q = 0; q < n; ++q)
    for (std::size_t x = 0; x < k; ++x) {
      StateSet s(n, {q});
      table[q * k + x] = step_set(a, s, phi.of(x)).first();
    }
  return Dcsa(phi.domain(), n, std::move(table), a.names());
}

Lift lift_strongly_self_sync(const Dcsa& a, const Hom& phi) {
  if (!(phi.domain() == a.alphabet()))
    throw InputError("homomorphism domain {" + phi.domain().symbols() + "} differs from automaton alphabet {" +
                     a.alphabet().symbols() + "}");
  const auto& images = phi.images();
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].empty()) throw InputError("code images must be non-empty");
    for (std::size_t j = 0; j < i; ++j)
      if (images[i] == images[j]) throw InputError("code images must be pairwise distinct: '" + images[i] + "'");
  }
  CodeSet code(images);
  CodeCheck strong = is_strongly_self_synchronizing(code);
  if (!strong.ok) {
    const auto& c = *strong.counterexample;
    throw InputError("images are not a strongly self-synchronizing code: (" + c.u + ")(" + c.v + ") contains " +
                     c.match + " at offset " + std::to_string(c.offset));
  }

  Lift lift;
  lift.prefixes = code.proper_prefixes();
  lift.base_states = a.num_states();
  const std::size_t n = a.num_states();
  const Alphabet& gamma = phi.image();
  const std::size_t k = gamma.size();
  const std::size_t np = lift.prefixes.size();

  auto prefix_index = [&](const Word& z) -> std::ptrdiff_t {
    auto it = std::lower_bound(lift.prefixes.begin(), lift.prefixes.end(), z);
    return (it != lift.prefixes.end() && *it == z) ? it - lift.prefixes.begin() : -1;
  };
  auto image_index = [&](const Word& z) -> std::ptrdiff_t {
    auto it = std::find(images.begin(), images.end(), z);
    return it == images.end() ? -1 : it - images.begin();
  };

  std::vector<State> table(np * n * k);
  std::vector<std::string> names(np * n);
  for (std::size_t xi = 0; xi < np; ++xi) {
    const Word& x = lift.prefixes[xi];
    for (std::size_t y = 0; y < k; ++y) {
      const Word xy = x + gamma.symbol(y);
      // Longest suffix of xy in Pref(C); the empty suffix always qualifies.
      std::ptrdiff_t zi = 0, ci = -1;
      for (std::size_t cut = 0; cut <= xy.size(); ++cut) {
        const Word z = xy.substr(cut);
        if ((ci = image_index(z)) >= 0) break;
        if ((zi = prefix_index(z)) >= 0) break;
      }
      for (State q = 0; q < n; ++q) {
        State target = ci >= 0 ? a.next(q, static_cast<std::size_t>(ci))
                               : lift.state(static_cast<std::size_t>(zi), q);
        table[lift.state(xi, q) * k + y] = target;
      }
    }
    for (State q = 0; q < n; ++q)
      names[lift.state(xi, q)] = x.empty() ? a.name(q) : a.name(q) + "_" + x;
  }
  lift.automaton = Dcsa(gamma, np * n, std::move(table), std::move(names));

  // delta'(q_x, phi(a_i)) = delta(q, a_i) for every state q_x and code word.
  for (std::size_t xi = 0; xi < np; ++xi)
    for (State q = 0; q < n; ++q)
      for (std::size_t i = 0; i < images.size(); ++i) {
        StateSet s(np * n, {lift.state(xi, q)});
        if (step_set(lift.automaton, s, images[i]).first() != a.next(q, i))
          throw std::logic_error("lift transition identity failed at " + names[lift.state(xi, q)]);
      }
  return lift;
}

namespace {

// Id of q_{i,x}, i in 1..n-1.
State aux(std::size_t base, std::size_t k, std::size_t n, std::size_t i, std::size_t x, State q) {
  return static_cast<State>(base + ((x * (n - 1)) + (i - 1)) * k + q);
}

template <class M>
std::vector<std::string> inflated_names(const M& m, std::size_t n) {
  std::vector<std::string> names = m.names();
  for (std::size_t x = 0; x < m.alphabet().size(); ++x)
    for (std::size_t i = 1; i < n; ++i)
      for (State q = 0; q < m.num_states(); ++q)
        names.push_back(m.name(q) + "_" + std::to_string(i) + m.alphabet().symbol(x));
  return names;
}

}  // namespace

Dcsa inflate(const Dcsa& m, std::size_t n) {
  if (n == 0) throw InputError("inflation factor must be positive");
  if (n == 1) return m;
  const std::size_t q_count = m.num_states(), k = m.alphabet().size();
  const std::size_t total = q_count + k * (n - 1) * q_count;
  std::vector<State> table(total * k);
  for (State q = 0; q < total; ++q)
    for (std::size_t y = 0; y < k; ++y) table[q * k + y] = q;  // otherwise: stay
  for (State q = 0; q < q_count; ++q)
    for (std::size_t x = 0; x < k; ++x) {
      table[q * k + x] = aux(q_count, q_count, n, 1, x, q);
      for (std::size_t i = 1; i < n; ++i) {
        State from = aux(q_count, q_count, n, i, x, q);
        table[from * k + x] = i + 1 < n ? aux(q_count, q_count, n, i + 1, x, q) : m.next(q, x);
      }
    }
  return Dcsa(m.alphabet(), total, std::move(table), inflated_names(m, n));
}

Pdfa inflate(const Pdfa& m, std::size_t n) {
  if (n == 0) throw InputError("inflation factor must be positive");
  if (n == 1) return m;
  const std::size_t q_count = m.num_states(), k = m.alphabet().size();
  const std::size_t total = q_count + k * (n - 1) * q_count;
  std::vector<State> table(total * k, kNoState);
  for (State q = 0; q < q_count; ++q)
    for (std::size_t x = 0; x < k; ++x) {
      if (m.next(q, x) == kNoState) continue;
      table[q * k + x] = aux(q_count, q_count, n, 1, x, q);
      for (std::size_t i = 1; i < n; ++i) {
        State from = aux(q_count, q_count, n, i, x, q);
        table[from * k + x] = i + 1 < n ? aux(q_count, q_count, n, i + 1, x, q) : m.next(q, x);
      }
    }
  std::vector<bool> finals(total, false);
  for (State q = 0; q < q_count; ++q) finals[q] = m.is_final(q);
  return Pdfa(m.alphabet(), total, std::move(table), m.start(), std::move(finals), inflated_names(m, n));
}

namespace {

void check_transporter_instance(const Dcsa& a, const StateSet& s, const StateSet& t) {
  if (a.alphabet().size() != 1) throw InputError("gadget input must be a unary automaton");
  if (s.universe() != a.num_states() || t.universe() != a.num_states())
    throw InputError("state sets do not belong to this automaton");
  if (s.empty()) throw InputError("S must be non-empty");
  if (t.empty()) throw InputError("T must be non-empty");
  if (s.intersects(t)) throw InputError("S and T must be disjoint");
}

std::string join_names(const Dcsa& a, const StateSet& s) {
  std::string out;
  s.for_each([&](State q) { out += (out.empty() ? "" : " ") + a.name(q); });
  return out;
}

}  // namespace

Gadget gen_transporter_gadget(const Dcsa& a, const StateSet& s, const StateSet& t, std::size_t r2,
                              std::size_t p2) {
  check_transporter_instance(a, s, t);
  if (p2 == 0) throw InputError("p2 must be at least 1");
  const std::size_t n = a.num_states();
  const std::vector<State> sm = s.members();
  const std::size_t ns = sm.size();
  const State q_base = 0;
  const std::size_t copies_base = n;                        // Q_1 .. Q_{p2-1}
  const std::size_t s_base = n + (p2 - 1) * n;              // S_1 .. S_{r2}
  const State sink = static_cast<State>(s_base + r2 * ns);  // t
  const std::size_t total = sink + 1;
  (void)q_base;

  auto q_copy = [&](std::size_t i, State q) { return static_cast<State>(copies_base + (i - 1) * n + q); };
  // s_i for the j-th member of S; s_0 is the original state.
  auto s_copy = [&](std::size_t i, std::size_t j) {
    return i == 0 ? sm[j] : static_cast<State>(s_base + (i - 1) * ns + j);
  };
  const State s_hat = s_copy(r2, 0);
  constexpr std::size_t A = 0, B = 1;

  std::vector<State> table(total * 2);
  for (State q = 0; q < total; ++q) table[q * 2 + A] = table[q * 2 + B] = q;
  auto set = [&](State from, std::size_t x, State to) { table[from * 2 + x] = to; };

  for (State q = 0; q < n; ++q) {
    // a on Q: T -> t, S -> S_{r2}, the rest -> s_hat.
    if (t.contains(q))
      set(q, A, sink);
    else if (!s.contains(q))
      set(q, A, s_hat);
    // b on Q: into the top copy, or straight through when p2 == 1.
    set(q, B, p2 == 1 ? a.next(q, 0) : q_copy(p2 - 1, q));
    for (std::size_t i = 1; i < p2; ++i) {
      set(q_copy(i, q), A, s_hat);
      set(q_copy(i, q), B, i == 1 ? a.next(q, 0) : q_copy(i - 1, q));
    }
  }
  for (std::size_t j = 0; j < ns; ++j)
    for (std::size_t i = 0; i <= r2; ++i) {
      set(s_copy(i, j), A, s_copy(r2, j));
      if (i >= 1) set(s_copy(i, j), B, s_copy(i - 1, j));
    }

  std::vector<std::string> names(total);
  for (State q = 0; q < n; ++q) {
    names[q] = a.name(q);
    for (std::size_t i = 1; i < p2; ++i) names[q_copy(i, q)] = a.name(q) + "^" + std::to_string(i);
  }
  for (std::size_t j = 0; j < ns; ++j)
    for (std::size_t i = 1; i <= r2; ++i) names[s_copy(i, j)] = a.name(sm[j]) + "_" + std::to_string(i);
  names[sink] = "t";
  for (const auto& nm : names)
    if (nm == "t" && &nm != &names[sink]) names[sink] = "t'";

  Gadget g{Dcsa(Alphabet("ab"), total, std::move(table), std::move(names)), {}};
  g.roles.push_back("set-transporter gadget, r2=" + std::to_string(r2) + " p2=" + std::to_string(p2));
  g.roles.push_back("Q: " + join_names(a, StateSet::full(n)) + "  (S: " + join_names(a, s) +
                    ", T: " + join_names(a, t) + ")");
  for (std::size_t i = 1; i < p2; ++i) g.roles.push_back("Q_" + std::to_string(i) + ": copies q^" + std::to_string(i));
  for (std::size_t i = 1; i <= r2; ++i) g.roles.push_back("S_" + std::to_string(i) + ": copies s_" + std::to_string(i));
  g.roles.push_back("t: sink " + g.automaton.name(sink) + ", s_hat: " + g.automaton.name(s_hat));
  return g;
}

Gadget gen_abba_gadget(const Dcsa& a, const StateSet& s, const StateSet& t) {
  check_transporter_instance(a, s, t);
  const std::size_t n = a.num_states();
  const State sink = static_cast<State>(3 * n);
  const State s_hat = s.first();
  auto qa = [&](State q) { return static_cast<State>(n + q); };
  auto qb = [&](State q) { return static_cast<State>(2 * n + q); };
  constexpr std::size_t A = 0, B = 1;
  std::vector<State> table((3 * n + 1) * 2);
  auto set = [&](State from, std::size_t x, State to) { table[from * 2 + x] = to; };
  for (State q = 0; q < n; ++q) {
    set(q, A, qa(q));
    set(q, B, qb(q));
    set(qb(q), B, sink);
    set(qb(q), A, a.next(q, 0));
    set(qa(q), A, qa(q));
    set(qa(q), B, t.contains(q) ? sink : s.contains(q) ? q : s_hat);
  }
  set(sink, A, sink);
  set(sink, B, sink);
  std::vector<std::string> names(3 * n + 1);
  for (State q = 0; q < n; ++q) {
    names[q] = a.name(q);
    names[qa(q)] = a.name(q) + "_a";
    names[qb(q)] = a.name(q) + "_b";
  }
  names[sink] = "t";
  for (State q = 0; q < 3 * n; ++q)
    if (names[q] == "t") names[sink] = "t'";
  Gadget g{Dcsa(Alphabet("ab"), 3 * n + 1, std::move(table), std::move(names)), {}};
  g.roles.push_back("(ab)(ba)*(ab) gadget");
  g.roles.push_back("Q: " + join_names(a, StateSet::full(n)) + "  (S: " + join_names(a, s) + ", T: " +
                    join_names(a, t) + ")");
  g.roles.push_back("Q_a: q_a copies, Q_b: q_b copies");
  g.roles.push_back("t: sink " + g.automaton.name(sink) + ", s_hat: " + a.name(s_hat));
  return g;
}

std::optional<GadgetParams> derive_gadget_params(const Pdfa& input) {
  const Alphabet& sigma = input.alphabet();
  if (!sigma.contains('a') || !sigma.contains('b')) return std::nullopt;
  Pdfa b = trim(input);
  const std::size_t np = b.num_states();
  // a+ b^{np} b* a+ as an NFA.
  Nfa n(sigma);
  const int a = sigma.index_of('a'), bb = sigma.index_of('b');
  State s0 = n.add_state(), s1 = n.add_state();
  n.starts.push_back(s0);
  n.add_edge(s0, a, s1);
  n.add_edge(s1, a, s1);
  State cur = s1;
  for (std::size_t i = 0; i < np; ++i) {
    State nx = n.add_state();
    n.add_edge(cur, bb, nx);
    cur = nx;
  }
  n.add_edge(cur, bb, cur);
  State fin = n.add_state(true);
  n.add_edge(cur, a, fin);
  n.add_edge(fin, a, fin);
  std::optional<Word> w = intersect_nonempty(b, n, Exec::serial);
  if (!w) return std::nullopt;
  GadgetParams gp;
  gp.r1 = w->find('b');
  gp.r2 = w->find_last_of('b') + 1 - gp.r1;
  gp.r3 = w->size() - gp.r1 - gp.r2;
  // Pigeonhole on the states along the b-run.
  std::vector<State> seen{b.run(b.start(), w->substr(0, gp.r1))};
  for (std::size_t j = 1; j <= gp.r2; ++j) {
    State q = b.next(seen.back(), static_cast<std::size_t>(bb));
    auto it = std::find(seen.begin(), seen.end(), q);
    if (it != seen.end()) {
      gp.p2 = seen.size() - static_cast<std::size_t>(it - seen.begin());
      return gp;
    }
    seen.push_back(q);
  }
  return gp;
}

}  // namespace csync

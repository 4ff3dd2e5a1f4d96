#include "csync/automata.hpp"

#include <unordered_set>

#include "csync/errors.hpp"

namespace csync {

namespace {

std::vector<std::string> default_names(std::size_t n, char prefix) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

void check_names(std::vector<std::string>& names, std::size_t n, char prefix) {
  if (names.empty()) {
    names = default_names(n, prefix);
    return;
  }
  if (names.size() != n) throw InputError("state name list does not match state count");
  std::unordered_set<std::string> seen;
  for (const auto& nm : names) {
    if (nm.empty()) throw InputError("empty state name");
    if (!seen.insert(nm).second) throw InputError("duplicate state name '" + nm + "'");
  }
}

}  // namespace

Dcsa::Dcsa(Alphabet sigma, std::size_t num_states, std::vector<State> table,
           std::vector<std::string> names)
    : sigma_(std::move(sigma)), n_(num_states), table_(std::move(table)), names_(std::move(names)) {
  if (n_ == 0) throw InputError("a semi-automaton needs at least one state");
  if (table_.size() != n_ * sigma_.size()) throw InputError("transition table has wrong size");
  for (State t : table_) {
    if (t == kNoState) throw InputError("semi-automaton is incomplete");
    if (t >= n_) throw InputError("transition target out of range");
  }
  check_names(names_, n_, 'q');
}

Pdfa::Pdfa(Alphabet sigma, std::size_t num_states, std::vector<State> table, State start,
           std::vector<bool> finals, std::vector<std::string> names)
    : sigma_(std::move(sigma)),
      n_(num_states),
      table_(std::move(table)),
      start_(start),
      finals_(std::move(finals)),
      names_(std::move(names)) {
  if (n_ == 0) throw InputError("an automaton needs at least one state");
  if (table_.size() != n_ * sigma_.size()) throw InputError("transition table has wrong size");
  if (finals_.size() != n_) throw InputError("final-state vector has wrong size");
  if (start_ >= n_) throw InputError("start state out of range");
  for (State t : table_)
    if (t != kNoState && t >= n_) throw InputError("transition target out of range");
  check_names(names_, n_, 'p');
}

State Pdfa::run(State from, std::string_view w) const {
  State q = from;
  for (char c : w) {
    int x = sigma_.index_of(c);
    if (x < 0) throw InputError(std::string("symbol '") + c + "' is not in alphabet {" + sigma_.symbols() + "}");
    q = next(q, static_cast<std::size_t>(x));
    if (q == kNoState) return kNoState;
  }
  return q;
}

bool Pdfa::accepts(std::string_view w) const {
  State q = run(start_, w);
  return q != kNoState && finals_[q];
}

State Nfa::add_state(bool final_state) {
  edges.emplace_back();
  finals.push_back(final_state);
  return static_cast<State>(edges.size() - 1);
}

void Nfa::close(StateSet& s) const {
  std::vector<State> stack = s.members();
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (const Edge& e : edges[q]) {
      if (e.symbol == kEpsilon && !s.contains(e.to)) {
        s.insert(e.to);
        stack.push_back(e.to);
      }
    }
  }
}

StateSet Nfa::start_set() const {
  StateSet s(num_states());
  for (State q : starts) s.insert(q);
  close(s);
  return s;
}

StateSet Nfa::step(const StateSet& s, std::size_t x) const {
  StateSet out(num_states());
  const int sym = static_cast<int>(x);
  s.for_each([&](State q) {
    for (const Edge& e : edges[q])
      if (e.symbol == sym) out.insert(e.to);
  });
  close(out);
  return out;
}

bool Nfa::any_final(const StateSet& s) const {
  bool hit = false;
  s.for_each([&](State q) { hit = hit || finals[q]; });
  return hit;
}

bool Nfa::accepts(std::string_view w) const {
  StateSet s = start_set();
  for (char c : w) s = step(s, alphabet.require(c));
  return any_final(s);
}

Hom::Hom(Alphabet domain, Alphabet image, std::vector<Word> images)
    : domain_(std::move(domain)), image_(std::move(image)), images_(std::move(images)) {
  if (images_.size() != domain_.size())
    throw InputError("homomorphism must give exactly one image per domain symbol");
  for (const Word& w : images_) image_.require_word(w);
}

Word Hom::apply(std::string_view w) const {
  Word out;
  for (char c : w) out += images_[domain_.require(c)];
  return out;
}

StateSet step_set(const Dcsa& a, const StateSet& s, std::string_view w) {
  if (s.universe() != a.num_states()) throw InputError("state set does not belong to this automaton");
  StateSet cur = s;
  for (char c : w) {
    std::size_t x = a.alphabet().require(c);
    StateSet nxt(a.num_states());
    cur.for_each([&](State q) { nxt.insert(a.next(q, x)); });
    cur = std::move(nxt);
  }
  return cur;
}

StateSet step_set(const Pdfa& b, const StateSet& s, std::string_view w) {
  if (s.universe() != b.num_states()) throw InputError("state set does not belong to this automaton");
  StateSet cur = s;
  for (char c : w) {
    std::size_t x = b.alphabet().require(c);
    StateSet nxt(b.num_states());
    cur.for_each([&](State q) {
      State t = b.next(q, x);
      if (t != kNoState) nxt.insert(t);
    });
    cur = std::move(nxt);
  }
  return cur;
}

bool is_synchronizing_word(const Dcsa& a, std::string_view w) {
  return step_set(a, a.all_states(), w).count() == 1;
}

}  // namespace csync

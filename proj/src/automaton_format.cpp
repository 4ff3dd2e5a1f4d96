#include <sstream>
#include <unordered_map>

#include "csync/errors.hpp"
#include "csync/syntax.hpp"

namespace csync {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

struct Transition {
  std::size_t line;
  std::string from, symbol, to;
};

}  // namespace

Automaton parse_automaton(std::string_view text) {
  std::optional<std::string> alphabet_symbols;
  std::vector<std::string> states;
  std::optional<std::string> start;
  std::optional<std::vector<std::string>> finals;
  std::size_t alphabet_line = 0, states_line = 0, start_line = 0, final_line = 0;
  std::vector<Transition> trans;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto tok = split_ws(raw);
    if (tok.empty()) continue;
    const std::string& d = tok[0];
    if (d == "alphabet") {
      if (alphabet_symbols) fail(lineno, "duplicate alphabet directive");
      if (tok.size() < 2) fail(lineno, "alphabet needs at least one symbol");
      std::string syms;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (tok[i].size() != 1) fail(lineno, "symbol '" + tok[i] + "' is not a single character");
        if (syms.find(tok[i][0]) != std::string::npos) fail(lineno, "duplicate symbol '" + tok[i] + "'");
        syms += tok[i];
      }
      alphabet_symbols = syms;
      alphabet_line = lineno;
    } else if (d == "states") {
      if (states_line) fail(lineno, "duplicate states directive");
      if (tok.size() < 2) fail(lineno, "states needs at least one state");
      states.assign(tok.begin() + 1, tok.end());
      states_line = lineno;
    } else if (d == "start") {
      if (start) fail(lineno, "duplicate start directive");
      if (tok.size() != 2) fail(lineno, "start takes exactly one state");
      start = tok[1];
      start_line = lineno;
    } else if (d == "final") {
      if (finals) fail(lineno, "duplicate final directive");
      finals = std::vector<std::string>(tok.begin() + 1, tok.end());
      final_line = lineno;
    } else if (d == "trans") {
      if (tok.size() != 4) fail(lineno, "trans takes: from symbol to");
      trans.push_back({lineno, tok[1], tok[2], tok[3]});
    } else {
      fail(lineno, "unknown directive '" + d + "'");
    }
    if (end == text.size()) break;
  }

  if (!alphabet_symbols) throw InputError("missing alphabet directive");
  if (!states_line) throw InputError("missing states directive");
  if (start.has_value() != finals.has_value())
    fail(start ? start_line : final_line, "start and final must be given together");
  Alphabet sigma(*alphabet_symbols);
  std::unordered_map<std::string, State> id;
  for (const auto& s : states)
    if (!id.emplace(s, static_cast<State>(id.size())).second)
      fail(states_line, "duplicate state '" + s + "'");
  auto lookup = [&](const std::string& s, std::size_t line) {
    auto it = id.find(s);
    if (it == id.end()) fail(line, "unknown state '" + s + "'");
    return it->second;
  };

  const std::size_t n = states.size(), k = sigma.size();
  std::vector<State> table(n * k, kNoState);
  for (const auto& t : trans) {
    State from = lookup(t.from, t.line);
    State to = lookup(t.to, t.line);
    if (t.symbol.size() != 1 || !sigma.contains(t.symbol[0]))
      fail(t.line, "symbol '" + t.symbol + "' is not in the alphabet");
    std::size_t x = static_cast<std::size_t>(sigma.index_of(t.symbol[0]));
    if (table[from * k + x] != kNoState)
      fail(t.line, "duplicate transition for (" + t.from + ", " + t.symbol + ")");
    table[from * k + x] = to;
  }
  (void)alphabet_line;

  if (start) {
    State s = lookup(*start, start_line);
    std::vector<bool> fin(n, false);
    for (const auto& f : *finals) fin[lookup(f, final_line)] = true;
    return Pdfa(sigma, n, std::move(table), s, std::move(fin), states);
  }
  for (State q = 0; q < n; ++q)
    for (std::size_t x = 0; x < k; ++x)
      if (table[q * k + x] == kNoState)
        fail(states_line, std::string("incomplete semi-automaton: no transition for (") + states[q] + ", " +
                              sigma.symbol(x) + ")");
  return Dcsa(sigma, n, std::move(table), states);
}

Dcsa parse_dcsa(std::string_view text) {
  Automaton m = parse_automaton(text);
  if (auto* a = std::get_if<Dcsa>(&m)) return *a;
  throw InputError("expected a semi-automaton without start/final lines");
}

Pdfa parse_pdfa(std::string_view text) {
  Automaton m = parse_automaton(text);
  if (auto* b = std::get_if<Pdfa>(&m)) return *b;
  throw InputError("expected an automaton with start and final lines");
}

namespace {

template <class M>
std::string header(const M& m, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "alphabet";
  for (char c : m.alphabet().symbols()) {
    out += ' ';
    out += c;
  }
  out += "\nstates";
  for (const auto& s : m.names()) out += " " + s;
  out += '\n';
  return out;
}

template <class M>
void transitions(const M& m, std::string& out) {
  const std::size_t k = m.alphabet().size();
  for (State q = 0; q < m.num_states(); ++q)
    for (std::size_t x = 0; x < k; ++x) {
      State t = m.next(q, x);
      if (t == kNoState) continue;
      out += "trans " + m.name(q) + ' ' + m.alphabet().symbol(x) + ' ' + m.name(t) + '\n';
    }
}

}  // namespace

std::string serialize_automaton(const Dcsa& a, const std::vector<std::string>& comments) {
  std::string out = header(a, comments);
  transitions(a, out);
  return out;
}

std::string serialize_automaton(const Pdfa& b, const std::vector<std::string>& comments) {
  std::string out = header(b, comments);
  out += "start " + b.name(b.start()) + "\nfinal";
  for (State q = 0; q < b.num_states(); ++q)
    if (b.is_final(q)) out += " " + b.name(q);
  out += '\n';
  transitions(b, out);
  return out;
}

std::string serialize_automaton(const Automaton& m, const std::vector<std::string>& comments) {
  return std::visit([&](const auto& x) { return serialize_automaton(x, comments); }, m);
}

}  // namespace csync

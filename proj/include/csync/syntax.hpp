#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "csync/automata.hpp"

namespace csync {

struct RegexNode;
using RegexPtr = std::shared_ptr<const RegexNode>;

struct RegexNode {
  enum class Kind { symbol, concat, alt, star, power, epsilon };
  Kind kind;
  char symbol = 0;
  unsigned power = 0;
  std::vector<RegexPtr> children;
};

// Grammar:
//   alt := cat ('|' cat)* ; cat := rep+ ; rep := atom ('*' | '^*' | '^' INT)* ;
//   atom := LETTER | '(' alt ')'
// Letters are lowercase a-z; whitespace is ignored. Throws ParseError.
RegexPtr parse_regex(std::string_view text);

// Debug rendering, e.g. Concat[a,Star(b),a].
std::string to_string(const RegexNode& node);
std::string regex_letters(const RegexNode& node);

// Thompson construction, subset construction and minimization. The alphabet
// defaults to the sorted letters of the expression.
Pdfa compile_regex(const RegexNode& node, std::optional<Alphabet> sigma = std::nullopt);
Pdfa compile_regex(std::string_view text, std::optional<Alphabet> sigma = std::nullopt);

using Automaton = std::variant<Dcsa, Pdfa>;

// Line-oriented format:
//   alphabet a b     states q0 q1     start q0     final q1     trans q0 a q1
// A file with start/final lines is a Pdfa, otherwise a Dcsa.
Automaton parse_automaton(std::string_view text);
Dcsa parse_dcsa(std::string_view text);
Pdfa parse_pdfa(std::string_view text);

// Canonical text. Each entry of `comments` becomes a leading "# " line.
std::string serialize_automaton(const Dcsa& a, const std::vector<std::string>& comments = {});
std::string serialize_automaton(const Pdfa& b, const std::vector<std::string>& comments = {});
std::string serialize_automaton(const Automaton& m, const std::vector<std::string>& comments = {});

}  // namespace csync

#include <cctype>
#include <string>

#include "csync/errors.hpp"
#include "csync/syntax.hpp"

namespace csync {

namespace {

constexpr unsigned kMaxPower = 10000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RegexPtr parse() {
    skip();
    if (pos_ == text_.size()) throw ParseError("empty regular expression", pos_);
    RegexPtr r = alt();
    skip();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') throw ParseError("unbalanced ')'", pos_);
      throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    return r;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool at_atom() {
    skip();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || (c >= 'a' && c <= 'z');
  }

  static RegexPtr make(RegexNode::Kind kind, std::vector<RegexPtr> children = {}, char symbol = 0,
                       unsigned power = 0) {
    auto n = std::make_shared<RegexNode>();
    n->kind = kind;
    n->children = std::move(children);
    n->symbol = symbol;
    n->power = power;
    return n;
  }

  RegexPtr alt() {
    std::vector<RegexPtr> parts{cat()};
    while (peek('|')) {
      ++pos_;
      parts.push_back(cat());
    }
    return parts.size() == 1 ? parts[0] : make(RegexNode::Kind::alt, std::move(parts));
  }

  RegexPtr cat() {
    if (!at_atom()) {
      if (pos_ >= text_.size()) throw ParseError("expected a letter or '('", pos_);
      throw ParseError(std::string("expected a letter or '(' but found '") + text_[pos_] + "'", pos_);
    }
    std::vector<RegexPtr> parts;
    while (at_atom()) parts.push_back(rep());
    return parts.size() == 1 ? parts[0] : make(RegexNode::Kind::concat, std::move(parts));
  }

  RegexPtr rep() {
    RegexPtr r = atom();
    while (true) {
      if (peek('*')) {
        ++pos_;
        r = make(RegexNode::Kind::star, {r});
      } else if (peek('^')) {
        std::size_t at = pos_++;
        skip();
        if (pos_ < text_.size() && text_[pos_] == '*') {
          ++pos_;
          r = make(RegexNode::Kind::star, {r});
          continue;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          throw ParseError("expected exponent after '^'", at);
        unsigned n = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          n = n * 10 + static_cast<unsigned>(text_[pos_] - '0');
          if (n > kMaxPower) throw ParseError("exponent too large", at);
          ++pos_;
        }
        r = make(RegexNode::Kind::power, {r}, 0, n);
      } else {
        return r;
      }
    }
  }

  RegexPtr atom() {
    skip();
    char c = text_[pos_];
    if (c == '(') {
      std::size_t open = pos_++;
      RegexPtr inner = alt();
      if (!peek(')')) throw ParseError("unbalanced '('", open);
      ++pos_;
      return inner;
    }
    ++pos_;
    return make(RegexNode::Kind::symbol, {}, c);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Fragment {
  State in;
  State out;
};

Fragment build(Nfa& n, const RegexNode& r) {
  switch (r.kind) {
    case RegexNode::Kind::symbol: {
      State a = n.add_state(), b = n.add_state();
      n.add_edge(a, static_cast<int>(n.alphabet.require(r.symbol)), b);
      return {a, b};
    }
    case RegexNode::Kind::epsilon: {
      State a = n.add_state();
      return {a, a};
    }
    case RegexNode::Kind::concat: {
      Fragment f = build(n, *r.children[0]);
      for (std::size_t i = 1; i < r.children.size(); ++i) {
        Fragment g = build(n, *r.children[i]);
        n.add_edge(f.out, Nfa::kEpsilon, g.in);
        f.out = g.out;
      }
      return f;
    }
    case RegexNode::Kind::alt: {
      State a = n.add_state(), b = n.add_state();
      for (const auto& c : r.children) {
        Fragment g = build(n, *c);
        n.add_edge(a, Nfa::kEpsilon, g.in);
        n.add_edge(g.out, Nfa::kEpsilon, b);
      }
      return {a, b};
    }
    case RegexNode::Kind::star: {
      State a = n.add_state(), b = n.add_state();
      Fragment g = build(n, *r.children[0]);
      n.add_edge(a, Nfa::kEpsilon, g.in);
      n.add_edge(a, Nfa::kEpsilon, b);
      n.add_edge(g.out, Nfa::kEpsilon, g.in);
      n.add_edge(g.out, Nfa::kEpsilon, b);
      return {a, b};
    }
    case RegexNode::Kind::power: {
      State a = n.add_state();
      Fragment f{a, a};
      for (unsigned i = 0; i < r.power; ++i) {
        Fragment g = build(n, *r.children[0]);
        n.add_edge(f.out, Nfa::kEpsilon, g.in);
        f.out = g.out;
      }
      return f;
    }
  }
  throw std::logic_error("unknown regex node");
}

void collect_letters(const RegexNode& r, std::string& out) {
  if (r.kind == RegexNode::Kind::symbol) out.push_back(r.symbol);
  for (const auto& c : r.children) collect_letters(*c, out);
}

}  // namespace

RegexPtr parse_regex(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const RegexNode& r) {
  auto list = [&](const char* head) {
    std::string s = head;
    s += '[';
    for (std::size_t i = 0; i < r.children.size(); ++i) {
      if (i) s += ',';
      s += to_string(*r.children[i]);
    }
    return s + ']';
  };
  switch (r.kind) {
    case RegexNode::Kind::symbol:
      return std::string(1, r.symbol);
    case RegexNode::Kind::epsilon:
      return "Epsilon";
    case RegexNode::Kind::concat:
      return list("Concat");
    case RegexNode::Kind::alt:
      return list("Union");
    case RegexNode::Kind::star:
      return "Star(" + to_string(*r.children[0]) + ")";
    case RegexNode::Kind::power:
      return "Power(" + to_string(*r.children[0]) + "," + std::to_string(r.power) + ")";
  }
  return {};
}

std::string regex_letters(const RegexNode& node) {
  std::string s;
  collect_letters(node, s);
  return sorted_letters(s);
}

Pdfa compile_regex(const RegexNode& node, std::optional<Alphabet> sigma) {
  Alphabet alphabet = sigma ? *sigma : Alphabet(regex_letters(node));
  Nfa n(alphabet);
  Fragment f = build(n, node);
  n.starts.push_back(f.in);
  n.finals[f.out] = true;
  return minimize(determinize(n));
}

Pdfa compile_regex(std::string_view text, std::optional<Alphabet> sigma) {
  return compile_regex(*parse_regex(text), std::move(sigma));
}

}  // namespace csync

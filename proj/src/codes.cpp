#include "csync/codes.hpp"

#include <algorithm>
#include <set>

#include "csync/errors.hpp"

namespace csync {

CodeSet::CodeSet(std::vector<Word> words) : words_(std::move(words)) {
  if (words_.empty()) throw InputError("a code must contain at least one word");
  for (const auto& w : words_)
    if (w.empty()) throw InputError("code words must be non-empty");
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool CodeSet::contains(std::string_view w) const {
  return std::binary_search(words_.begin(), words_.end(), w,
                            [](std::string_view a, std::string_view b) { return a < b; });
}

std::vector<Word> CodeSet::proper_prefixes() const {
  std::set<Word> out;
  for (const auto& w : words_)
    for (std::size_t n = 0; n < w.size(); ++n)
      if (!contains(std::string_view(w).substr(0, n))) out.insert(w.substr(0, n));
  return {out.begin(), out.end()};
}

namespace {

// First code word occurring in uv at a start in [lo, ...) and ending at or
// before `last_end`, scanning offsets then code words in order.
std::optional<CodeCounterexample> find_occurrence(const CodeSet& c, const Word& u, const Word& v,
                                                  std::size_t lo, std::size_t last_end) {
  const Word uv = u + v;
  for (std::size_t off = lo; off < uv.size(); ++off)
    for (const auto& w : c.words())
      if (off + w.size() <= last_end && uv.compare(off, w.size(), w) == 0) return CodeCounterexample{u, v, off, w};
  return std::nullopt;
}

}  // namespace

CodeCheck is_self_synchronizing(const CodeSet& c) {
  for (const auto& u : c.words())
    for (const auto& v : c.words()) {
      const std::size_t n = u.size() + v.size();
      if (auto hit = find_occurrence(c, u, v, 1, n - 1)) return {false, hit};
    }
  return {};
}

CodeCheck is_strongly_self_synchronizing(const CodeSet& c) {
  CodeCheck self = is_self_synchronizing(c);
  if (!self.ok) return self;
  for (const auto& u : c.proper_prefixes())
    for (const auto& v : c.words()) {
      const std::size_t n = u.size() + v.size();
      if (auto hit = find_occurrence(c, u, v, 0, n - 1)) return {false, hit};
    }
  return {};
}

bool positional_check(const CodeSet& c) {
  std::set<Word> prefixes;
  for (const auto& w : c.words())
    for (std::size_t n = 0; n <= w.size(); ++n) prefixes.insert(w.substr(0, n));
  for (const auto& u : prefixes)
    for (const auto& v : c.words()) {
      const Word uv = u + v;
      for (std::size_t j = 0; j < uv.size(); ++j)
        for (std::size_t len = 1; j + len <= uv.size(); ++len) {
          if (!c.contains(std::string_view(uv).substr(j, len))) continue;
          bool at_end = j == u.size() && len == v.size();
          bool at_start = j == 0 && len == u.size();
          if (!at_end && !at_start) return false;
        }
    }
  return true;
}

bool is_prefix_code(const CodeSet& c) {
  for (const auto& x : c.words())
    for (const auto& y : c.words())
      if (x != y && y.size() > x.size() && y.compare(0, x.size(), x) == 0) return false;
  return true;
}

bool is_infix_code(const CodeSet& c) {
  for (const auto& x : c.words())
    for (const auto& y : c.words())
      if (x != y && y.find(x) != Word::npos) return false;
  return true;
}

ConstructedCode construct_code(const std::vector<Word>& x, char marker) {
  if (x.empty()) throw InputError("base code must contain at least one word");
  const std::size_t n = x.front().size();
  if (n == 0) throw InputError("base words must be non-empty");
  std::size_t k = 0;
  for (const auto& w : x) {
    if (w.size() != n) throw InputError("base word '" + w + "' differs in length from '" + x.front() + "'");
    if (w.front() == marker) throw InputError("base word '" + w + "' starts with the marker");
    std::size_t run = 0;
    for (char ch : w) {
      run = ch == marker ? run + 1 : 0;
      k = std::max(k, run);
    }
  }
  ConstructedCode out;
  out.k = k;
  const Word pad(k + 1, marker);
  for (const auto& w : x) {
    Word y = pad + w;
    if (std::find(out.words.begin(), out.words.end(), y) == out.words.end()) out.words.push_back(y);
  }
  out.strong = is_strongly_self_synchronizing(CodeSet(out.words));
  return out;
}

}  // namespace csync

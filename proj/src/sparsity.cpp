#include "csync/sparsity.hpp"

#include "csync/errors.hpp"
#include "skeleton.hpp"

namespace csync {

PolycyclicResult is_polycyclic(const Pdfa& input) {
  Pdfa b = trim(input);
  std::vector<std::size_t> comp = strongly_connected_components(b);
  for (State q = 0; q < b.num_states(); ++q) {
    int inside = 0;
    for (std::size_t x = 0; x < b.alphabet().size(); ++x) {
      State t = b.next(q, x);
      if (t != kNoState && comp[t] == comp[q]) ++inside;
    }
    if (inside > 1) {
      PolycyclicResult r{false, {}};
      for (State p = 0; p < b.num_states(); ++p)
        if (comp[p] == comp[q]) r.violating_scc.push_back(b.name(p));
      return r;
    }
  }
  return {};
}

bool is_sparse(const Pdfa& b) { return is_polycyclic(b).polycyclic; }

ContainmentResult verify_letter_bounded(const Pdfa& b, std::string_view seq) {
  for (char c : seq) b.alphabet().require(c);
  return contained_in(b, letter_chain_pdfa(b.alphabet(), seq));
}

std::string Bounding::letters() const {
  std::string s;
  for (const auto& w : words) s += w;
  return s;
}

namespace {

bool single_letter_power(const Word& w) {
  return !w.empty() && w.find_first_not_of(w[0]) == Word::npos;
}

}  // namespace

std::optional<Bounding> infer_bounding(const Pdfa& input, std::size_t cap) {
  if (!is_sparse(input)) return std::nullopt;
  Pdfa b = trim(input);
  auto skeletons = detail::enumerate_skeletons(b, cap);
  if (!skeletons)
    throw ResourceError("inference incomplete: more than " + std::to_string(cap) +
                        " accepting paths; supply a bounding sequence instead");
  Bounding out;
  out.letter_bounded = true;
  for (const auto& sk : *skeletons)
    for (const auto& piece : sk)
      if (piece.pumped && !single_letter_power(piece.text)) out.letter_bounded = false;

  std::vector<std::vector<Word>> patterns;
  for (const auto& sk : *skeletons) {
    std::vector<Word> pat;
    for (const auto& piece : sk) {
      if (out.letter_bounded) {
        if (piece.pumped)
          pat.push_back(Word(1, piece.text[0]));
        else
          for (char c : piece.text) pat.push_back(Word(1, c));
      } else {
        pat.push_back(piece.text);
      }
    }
    bool seen = false;
    for (const auto& p : patterns) seen = seen || p == pat;
    if (!seen) patterns.push_back(std::move(pat));
  }
  for (const auto& pat : patterns)
    for (const auto& w : pat)
      if (out.words.empty() || out.words.back() != w) out.words.push_back(w);
  if (out.words.empty()) out.words.push_back(Word(1, b.alphabet().symbol(0)));
  return out;
}

}  // namespace csync

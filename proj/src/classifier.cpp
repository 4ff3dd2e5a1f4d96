#include "csync/classifier.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "csync/codes.hpp"
#include "csync/errors.hpp"

namespace csync {

std::string verdict_label(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::in_p:
      return "P";
    case VerdictKind::np_complete:
      return "NP-complete";
    case VerdictKind::np_member_undecided:
      return "NP-member-undecided";
    case VerdictKind::not_sparse:
      return "not-sparse";
  }
  return {};
}

Nfa triple_language(const Alphabet& sigma, char x, char y, char z, std::size_t n) {
  Nfa m(sigma);
  auto loop = [&](State q) {
    for (std::size_t s = 0; s < sigma.size(); ++s) m.add_edge(q, static_cast<int>(s), q);
  };
  State q = m.add_state();
  m.starts.push_back(q);
  loop(q);
  State r = m.add_state();
  m.add_edge(q, static_cast<int>(sigma.require(x)), r);
  loop(r);
  State cur = r;
  for (std::size_t i = 0; i < n; ++i) {
    State nx = m.add_state();
    m.add_edge(cur, static_cast<int>(sigma.require(y)), nx);
    cur = nx;
  }
  loop(cur);
  State fin = m.add_state(true);
  m.add_edge(cur, static_cast<int>(sigma.require(z)), fin);
  loop(fin);
  return m;
}

namespace {

using LetterTriple = std::tuple<char, char, char>;

}  // namespace

Verdict classify_letter_bounded(const Pdfa& input, std::string_view seq, Exec exec) {
  ContainmentResult chk = verify_letter_bounded(input, seq);
  if (!chk.contained)
    throw InputError("language is not bounded by the sequence " + std::string(seq) +
                     "; counterexample '" + *chk.counterexample + "'");
  Pdfa b = trim(input);
  const std::size_t p_size = b.num_states();
  const std::size_t k = seq.size();

  // Distinct letter triples in lexicographic position order of first use.
  std::map<LetterTriple, std::size_t> slot;
  std::vector<LetterTriple> letters;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l) {
        if (seq[j] == seq[i] || seq[j] == seq[l]) continue;
        LetterTriple t{seq[i], seq[j], seq[l]};
        if (slot.emplace(t, letters.size()).second) letters.push_back(t);
      }

  std::vector<std::optional<Word>> hit(letters.size());
  auto check = [&](std::size_t s) {
    auto [x, y, z] = letters[s];
    hit[s] = intersect_nonempty(b, triple_language(b.alphabet(), x, y, z, p_size), Exec::serial);
  };
  if (exec == Exec::parallel) {
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(letters.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t s = 0; s < m; ++s) check(static_cast<std::size_t>(s));
  } else {
    for (std::size_t s = 0; s < letters.size(); ++s) {
      check(s);
      if (hit[s]) break;  // the first letter triple is also the first position triple
    }
  }

  Verdict v;
  v.route = "letter-bounded";
  for (char c : seq) v.bounding.push_back(Word(1, c));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::size_t l = j + 1; l < k; ++l) {
        if (seq[j] == seq[i] || seq[j] == seq[l]) continue;
        const auto& w = hit[slot.at({seq[i], seq[j], seq[l]})];
        if (!w) continue;
        v.kind = VerdictKind::np_complete;
        v.triple = std::array<std::size_t, 3>{i + 1, j + 1, l + 1};
        v.witness = *w;
        return v;
      }
  v.kind = VerdictKind::in_p;
  return v;
}

namespace {

constexpr std::string_view kFreshLetters = "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

Pdfa word_chain_pdfa(const Alphabet& sigma, const std::vector<Word>& words) {
  if (words.size() > kFreshLetters.size()) throw InputError("too many bounding words");
  Alphabet fresh(kFreshLetters.substr(0, words.size()));
  // Deterministic chain over distinct letters: from block i, letter j >= i moves to block j.
  const std::size_t k = words.size();
  std::vector<State> table((k + 1) * k, kNoState);
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (j + 1 >= i) table[i * k + j] = static_cast<State>(j + 1);
  Pdfa chain(fresh, k + 1, std::move(table), 0, std::vector<bool>(k + 1, true));
  return image_under_hom(chain, Hom(fresh, sigma, words));
}

}  // namespace

Verdict classify_word_bounded(const Pdfa& input, const std::vector<Word>& words, Exec exec) {
  if (words.empty()) throw InputError("bounding word list must not be empty");
  for (const auto& w : words) {
    if (w.empty()) throw InputError("bounding words must be non-empty");
    input.alphabet().require_word(w);
  }
  ContainmentResult chk = contained_in(input, word_chain_pdfa(input.alphabet(), words));
  if (!chk.contained)
    throw InputError("language is not bounded by the given words; counterexample '" + *chk.counterexample + "'");

  Verdict v;
  v.bounding = words;
  if (words.size() <= 2) {
    v.kind = VerdictKind::in_p;
    v.route = "two-word";
    return v;
  }
  std::vector<Word> distinct;
  for (const auto& w : words)
    if (std::find(distinct.begin(), distinct.end(), w) == distinct.end()) distinct.push_back(w);
  CodeCheck strong = is_strongly_self_synchronizing(CodeSet(distinct));
  if (strong.ok && distinct.size() <= kFreshLetters.size()) {
    Alphabet fresh(kFreshLetters.substr(0, distinct.size()));
    Hom phi(fresh, input.alphabet(), distinct);
    Pdfa u = preimage_under_hom(input, phi);
    std::string mapped;
    for (const auto& w : words)
      mapped.push_back(fresh.symbol(static_cast<std::size_t>(
          std::find(distinct.begin(), distinct.end(), w) - distinct.begin())));
    Verdict inner = classify_letter_bounded(u, mapped, exec);
    inner.route = "code-lift";
    inner.bounding = words;
    if (inner.witness) {
      inner.witness_preimage = inner.witness;
      inner.witness = phi.apply(*inner.witness);
    }
    return inner;
  }
  v.kind = is_sparse(input) ? VerdictKind::np_member_undecided : VerdictKind::not_sparse;
  v.route = "sparse-only";
  v.note = "in NP; hardness outside decidable fragment";
  if (!strong.ok && strong.counterexample) {
    const auto& c = *strong.counterexample;
    v.note += " (bounding words are not a strongly self-synchronizing code: (" + c.u + ")(" + c.v +
              ") contains " + c.match + ")";
  }
  return v;
}

Verdict classify_auto(const Pdfa& b, Exec exec) {
  std::optional<Bounding> bound = infer_bounding(b);
  if (!bound) {
    Verdict v;
    v.kind = VerdictKind::not_sparse;
    v.route = "non-sparse";
    v.note = "constraint language is not sparse; no decision procedure applies";
    return v;
  }
  Verdict v = bound->letter_bounded ? classify_letter_bounded(b, bound->letters(), exec)
                                    : classify_word_bounded(b, bound->words, exec);
  v.note = v.note.empty() ? "bounding inferred" : v.note + "; bounding inferred";
  return v;
}

bool np_membership(const Pdfa& b) { return is_sparse(b); }

}  // namespace csync

#include "csync/decomposition.hpp"

#include <algorithm>
#include <numeric>

#include "csync/errors.hpp"
#include "skeleton.hpp"

namespace csync {

namespace {

struct Run {
  char letter;
  std::size_t mandatory = 0;
  std::vector<std::size_t> cycles;
};

std::vector<Run> runs_of(const detail::Skeleton& sk) {
  std::vector<Run> runs;
  auto at = [&](char c) -> Run& {
    if (runs.empty() || runs.back().letter != c) runs.push_back({c, 0, {}});
    return runs.back();
  };
  for (const auto& piece : sk) {
    if (piece.pumped) {
      if (piece.text.find_first_not_of(piece.text[0]) != Word::npos)
        throw InputError("cycle label '" + piece.text + "' is not a power of one letter");
      at(piece.text[0]).cycles.push_back(piece.text.size());
    } else {
      for (char c : piece.text) ++at(c).mandatory;
    }
  }
  return runs;
}

// Alternatives whose union is a^r (a^{p_1})* ... (a^{p_m})*.
std::vector<UnaryFactor> run_factors(const Run& run) {
  if (run.cycles.empty()) return {UnaryFactor::singleton(run.letter, run.mandatory)};
  std::vector<std::size_t> gens = run.cycles;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.size() == 1) return {UnaryFactor::progression(run.letter, run.mandatory, gens[0])};
  // Every multiple of the gcd from pmax^2 on is a sum of generators.
  const std::size_t pmax = gens.back();
  const std::size_t bound = pmax * pmax;
  std::size_t g = 0;
  for (auto p : gens) g = std::gcd(g, p);
  std::vector<bool> reach(bound, false);
  reach[0] = true;
  for (std::size_t s = 0; s < bound; ++s)
    if (reach[s])
      for (auto p : gens)
        if (s + p < bound) reach[s + p] = true;
  std::vector<UnaryFactor> out;
  for (std::size_t s = 0; s < bound; ++s)
    if (reach[s]) out.push_back(UnaryFactor::singleton(run.letter, run.mandatory + s));
  out.push_back(UnaryFactor::progression(run.letter, run.mandatory + bound, g));
  return out;
}

}  // namespace

BoundedUnion decompose(const Pdfa& input, std::string_view seq, std::size_t cap) {
  ContainmentResult chk = verify_letter_bounded(input, seq);
  if (!chk.contained)
    throw InputError("language is not bounded by the sequence " + std::string(seq) +
                     "; counterexample '" + *chk.counterexample + "'");
  Pdfa b = trim(input);
  auto skeletons = detail::enumerate_skeletons(b, cap);
  if (!skeletons)
    throw ResourceError("decomposition incomplete: more than " + std::to_string(cap) + " skeletons");

  BoundedUnion out;
  out.sequence = std::string(seq);
  const std::size_t k = seq.size();
  for (const auto& sk : *skeletons) {
    std::vector<Run> runs = runs_of(sk);
    std::vector<std::vector<UnaryFactor>> slots(k);
    for (std::size_t j = 0; j < k; ++j) slots[j] = {UnaryFactor::singleton(seq[j], 0)};
    std::size_t j = 0;
    for (const auto& run : runs) {
      while (j < k && seq[j] != run.letter) ++j;
      if (j == k) throw InputError("skeleton does not align with the bounding sequence");
      slots[j] = run_factors(run);
      ++j;
    }
    // Cartesian product over the slot alternatives.
    std::vector<std::size_t> pick(k, 0);
    while (true) {
      BoundedTerm t;
      for (std::size_t i = 0; i < k; ++i) t.factors.push_back(slots[i][pick[i]]);
      if (std::find(out.terms.begin(), out.terms.end(), t) == out.terms.end()) {
        if (out.terms.size() >= cap)
          throw ResourceError("decomposition incomplete: more than " + std::to_string(cap) + " terms");
        out.terms.push_back(std::move(t));
      }
      bool done = true;
      for (std::size_t i = k; i-- > 0;) {
        if (++pick[i] < slots[i].size()) {
          done = false;
          break;
        }
        pick[i] = 0;
      }
      if (done) break;
    }
  }
  return out;
}

bool term_member(const BoundedTerm& t, std::string_view w) {
  const std::size_t n = w.size();
  std::vector<bool> reach(n + 1, false);
  reach[0] = true;
  for (const auto& f : t.factors) {
    std::vector<bool> nxt(n + 1, false);
    for (std::size_t i = 0; i <= n; ++i) {
      if (!reach[i]) continue;
      for (std::size_t m = 0; i + m <= n; ++m) {
        if (f.contains(m)) nxt[i + m] = true;
        if (i + m == n || w[i + m] != f.letter) break;
      }
    }
    reach = std::move(nxt);
  }
  return reach[n];
}

bool union_member(const BoundedUnion& u, std::string_view w) {
  for (const auto& t : u.terms)
    if (term_member(t, w)) return true;
  return false;
}

bool satisfies_p_condition(const BoundedTerm& t) {
  const auto& f = t.factors;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (!f[j].infinite()) continue;
    bool before = false, after = false;
    for (std::size_t i = 0; i < j; ++i) before = before || (!f[i].is_epsilon() && f[i].letter != f[j].letter);
    for (std::size_t i = j + 1; i < f.size(); ++i)
      after = after || (!f[i].is_epsilon() && f[i].letter != f[j].letter);
    if (before && after) return false;
  }
  return true;
}

std::string to_string(const UnaryFactor& f) {
  const std::string a(1, f.letter);
  if (f.kind == UnaryFactor::Kind::singleton) return a + "^" + std::to_string(f.r);
  std::string loop = "(" + a + "^" + std::to_string(f.p) + ")*";
  return f.r == 0 ? loop : a + "^" + std::to_string(f.r) + " " + loop;
}

std::string to_string(const BoundedTerm& t) {
  std::string s;
  for (const auto& f : t.factors) {
    if (f.is_epsilon()) continue;
    if (!s.empty()) s += ' ';
    s += to_string(f);
  }
  return s.empty() ? "eps" : s;
}

std::string to_string(const BoundedUnion& u) {
  if (u.terms.empty()) return "empty";
  std::string s;
  for (std::size_t i = 0; i < u.terms.size(); ++i) {
    if (i) s += " ; ";
    s += to_string(u.terms[i]);
  }
  return s;
}

}  // namespace csync

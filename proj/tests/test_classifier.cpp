#include <gtest/gtest.h>

#include "csync/classifier.hpp"
#include "csync/decomposition.hpp"
#include "csync/errors.hpp"
#include "csync/solver.hpp"
#include "csync/syntax.hpp"
#include "oracles.hpp"

namespace csync {
namespace {

VerdictKind letters(const std::string& re, const std::string& seq) {
  return classify_letter_bounded(compile_regex(re), seq).kind;
}

TEST(ClassifyLetterBounded, AbStarA) {
  Verdict v = classify_letter_bounded(compile_regex("ab*a"), "aba");
  EXPECT_EQ(v.kind, VerdictKind::np_complete);
  EXPECT_EQ(v.route, "letter-bounded");
  ASSERT_TRUE(v.triple);
  EXPECT_EQ(*v.triple, (std::array<std::size_t, 3>{1, 2, 3}));
  EXPECT_EQ(v.witness, "abbba");
}

TEST(ClassifyLetterBounded, ExampleVerdicts) {
  EXPECT_EQ(letters("a^5bd|cd^4", "abcd"), VerdictKind::in_p);
  EXPECT_EQ(letters("a^5bd|cd*", "abcd"), VerdictKind::in_p);
  EXPECT_EQ(letters("aa^*bbbbcd^*|bbbdd^*d", "abcd"), VerdictKind::in_p);
  EXPECT_EQ(letters("aa(aaa)*bbb*d|a*b|d*", "abd"), VerdictKind::np_complete);
  Verdict v = classify_letter_bounded(compile_regex("bbcc*d*|a"), "abcd");
  ASSERT_EQ(v.kind, VerdictKind::np_complete);
  ASSERT_TRUE(v.triple);
  EXPECT_EQ(*v.triple, (std::array<std::size_t, 3>{2, 3, 4}));
}

TEST(ClassifyLetterBounded, WitnessLiesInBothLanguages) {
  for (auto [re, seq] : std::vector<std::pair<std::string, std::string>>{
           {"ab*a", "aba"}, {"bbcc*d*|a", "abcd"}, {"aa(aaa)*bbb*d|a*b|d*", "abd"}}) {
    Pdfa b = compile_regex(re);
    Verdict v = classify_letter_bounded(b, seq);
    ASSERT_TRUE(v.witness) << re;
    EXPECT_TRUE(b.accepts(*v.witness)) << re;
    auto [i, j, l] = *v.triple;
    Nfa n = triple_language(b.alphabet(), seq[i - 1], seq[j - 1], seq[l - 1], trim(b).num_states());
    EXPECT_TRUE(n.accepts(*v.witness)) << re;
  }
}

TEST(ClassifyLetterBounded, RejectsBadSequence) {
  EXPECT_THROW(classify_letter_bounded(compile_regex("ab*a"), "ab"), InputError);
}

TEST(ClassifyWordBounded, CodeLift) {
  Verdict np = classify_word_bounded(compile_regex("(aacc)(bbc)*(bac)"), {"aacc", "bbc", "bac"});
  EXPECT_EQ(np.kind, VerdictKind::np_complete);
  EXPECT_EQ(np.route, "code-lift");
  ASSERT_TRUE(np.witness && np.witness_preimage);
  EXPECT_TRUE(compile_regex("(aacc)(bbc)*(bac)").accepts(*np.witness));

  Verdict p = classify_word_bounded(compile_regex("(bbc)(aacc)(bac)*|(bbc)*"), {"bbc", "aacc", "bac"});
  EXPECT_EQ(p.kind, VerdictKind::in_p);
  EXPECT_EQ(p.route, "code-lift");
}

TEST(ClassifyWordBounded, NotACode) {
  Verdict v = classify_word_bounded(compile_regex("ab(ba)*ab"), {"ab", "ba", "ab"});
  EXPECT_EQ(v.kind, VerdictKind::np_member_undecided);
  EXPECT_EQ(v.route, "sparse-only");
  EXPECT_NE(v.note.find("outside decidable fragment"), std::string::npos);
}

TEST(ClassifyWordBounded, TwoWords) {
  Verdict v = classify_word_bounded(compile_regex("(ab)^3(ba)*|ba"), {"ab", "ba"});
  EXPECT_EQ(v.kind, VerdictKind::in_p);
  EXPECT_EQ(v.route, "two-word");
  EXPECT_THROW(classify_word_bounded(compile_regex("ba(ab)"), {"ab", "ba"}), InputError);
}

TEST(ClassifyAuto, Routes) {
  EXPECT_EQ(classify_auto(compile_regex("ab*a")).kind, VerdictKind::np_complete);
  EXPECT_EQ(classify_auto(compile_regex("a^5bd|cd^4")).kind, VerdictKind::in_p);
  Verdict u = classify_auto(compile_regex("ab(ba)*ab"));
  EXPECT_EQ(u.kind, VerdictKind::np_member_undecided);
  Verdict d = classify_auto(compile_regex("(a|b)*"));
  EXPECT_EQ(d.kind, VerdictKind::not_sparse);
}

TEST(NpMembership, Examples) {
  EXPECT_TRUE(np_membership(compile_regex("ab*a")));
  EXPECT_FALSE(np_membership(compile_regex("(a|b)*")));
  EXPECT_TRUE(np_membership(compile_regex("ab(ba)*ab")));
}

// Adds unreachable junk states; the language is unchanged.
Pdfa pad(const Pdfa& b, std::size_t extra) {
  const std::size_t n = b.num_states(), k = b.alphabet().size();
  std::vector<State> table((n + extra) * k, kNoState);
  std::vector<bool> fin(n + extra, true);
  for (State q = 0; q < n; ++q) {
    fin[q] = b.is_final(q);
    for (std::size_t x = 0; x < k; ++x) table[q * k + x] = b.next(q, x);
  }
  for (State q = static_cast<State>(n); q < n + extra; ++q)
    for (std::size_t x = 0; x < k; ++x) table[q * k + x] = q;
  return Pdfa(b.alphabet(), n + extra, std::move(table), b.start(), std::move(fin));
}

TEST(ClassifierProperty, RecognizerIndependence) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    Pdfa b = testing::random_letter_bounded(rng, 8);
    auto bound = infer_bounding(b);
    ASSERT_TRUE(bound);
    if (!bound->letter_bounded) continue;
    const std::string seq = bound->letters();
    VerdictKind want = classify_letter_bounded(b, seq).kind;
    EXPECT_EQ(classify_letter_bounded(pad(b, 3), seq).kind, want);
    EXPECT_EQ(classify_letter_bounded(minimize(b), seq).kind, want);
    EXPECT_EQ(classify_letter_bounded(determinize(to_nfa(b)), seq).kind, want);
  }
}

TEST(ClassifierProperty, MatchesDecomposition) {
  testing::Rng rng(17);
  int np = 0, p = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Pdfa b = testing::random_letter_bounded(rng, 8);
    auto bound = infer_bounding(b);
    ASSERT_TRUE(bound);
    if (!bound->letter_bounded) continue;
    const std::string seq = bound->letters();
    Verdict v = classify_letter_bounded(b, seq);
    BoundedUnion u = decompose(b, seq);
    bool all_ok = std::all_of(u.terms.begin(), u.terms.end(), satisfies_p_condition);
    EXPECT_EQ(v.kind == VerdictKind::in_p, all_ok) << to_string(u);
    (v.kind == VerdictKind::in_p ? p : np)++;
  }
  EXPECT_GT(np, 10);
  EXPECT_GT(p, 10);
}

TEST(ClassifierProperty, InPMeansPolySolverWorks) {
  testing::Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    Pdfa b = testing::random_letter_bounded(rng, 6);
    auto bound = infer_bounding(b);
    if (!bound->letter_bounded) continue;
    if (classify_letter_bounded(b, bound->letters()).kind != VerdictKind::in_p) continue;
    BoundedUnion u = decompose(b, bound->letters());
    Dcsa a = testing::random_dcsa(rng, b.alphabet(), 4);
    auto poly = solve_poly(a, u, trim(b).num_states());
    auto brute = solve_brute(a, b);
    EXPECT_EQ(poly.has_value(), brute.has_value());
  }
}

}  // namespace
}  // namespace csync

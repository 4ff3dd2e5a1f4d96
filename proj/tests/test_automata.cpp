#include <gtest/gtest.h>

#include "csync/automata.hpp"
#include "csync/classifier.hpp"
#include "csync/errors.hpp"
#include "csync/syntax.hpp"
#include "oracles.hpp"

namespace csync {
namespace {

using testing::all_words;

Pdfa b1() { return compile_regex("ab*a"); }

TEST(StepSet, AppliesTransitionToEveryState) {
  Dcsa a = testing::t1();
  EXPECT_EQ(step_set(a, a.all_states(), "a"), StateSet(2, {0}));
}

TEST(StepSet, EmptyWordIsIdentity) {
  Dcsa a = testing::cerny(4);
  StateSet s(4, {1, 3});
  EXPECT_EQ(step_set(a, s, ""), s);
}

TEST(StepSet, PartialRunDropsThread) {
  Pdfa b = b1();
  EXPECT_TRUE(step_set(b, StateSet(b.num_states(), {b.start()}), "b").empty());
}

TEST(StepSet, ForeignSymbolIsInputError) {
  Dcsa a = testing::t1();
  EXPECT_THROW(step_set(a, a.all_states(), "c"), InputError);
}

TEST(StepSet, UnknownStateIsInputError) {
  Dcsa a = testing::t1();
  EXPECT_THROW(step_set(a, StateSet(5, {4}), "a"), InputError);
}

TEST(SyncWord, Examples) {
  Dcsa a = testing::t1();
  EXPECT_TRUE(is_synchronizing_word(a, "a"));
  EXPECT_FALSE(is_synchronizing_word(a, "b"));
  Dcsa one(Alphabet("a"), 1, {0});
  EXPECT_TRUE(is_synchronizing_word(one, ""));
}

TEST(Intersect, TripleLanguageWitness) {
  Pdfa b = b1();
  ASSERT_EQ(b.num_states(), 3u);
  auto w = intersect_nonempty(b, triple_language(b.alphabet(), 'a', 'b', 'a', 3));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, "abbba");
}

TEST(Intersect, EmptyIntersection) {
  Pdfa b = b1();
  Nfa starts_b = to_nfa(compile_regex("b(a|b)*"));
  EXPECT_FALSE(intersect_nonempty(b, starts_b));
}

TEST(Intersect, ShortestWordOfConstraint) {
  Pdfa b = b1();
  auto w = intersect_nonempty(b, to_nfa(universal_pdfa(b.alphabet())));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, "aa");
}

TEST(Intersect, AlphabetMismatchIsInputError) {
  EXPECT_THROW(intersect_nonempty(b1(), to_nfa(universal_pdfa(Alphabet("abc")))), InputError);
}

TEST(Containment, Examples) {
  Pdfa b = b1();
  EXPECT_TRUE(contained_in(b, letter_chain_pdfa(b.alphabet(), "aba")).contained);
  ContainmentResult r = contained_in(b, letter_chain_pdfa(b.alphabet(), "ab"));
  EXPECT_FALSE(r.contained);
  ASSERT_TRUE(r.counterexample);
  // "aa" lies in a*b*; the shortest word of ab*a that does not is "aba".
  EXPECT_EQ(*r.counterexample, "aba");
  EXPECT_TRUE(contained_in(b, universal_pdfa(b.alphabet())).contained);
}

TEST(Determinize, FiniteUnion) {
  Alphabet ab("a");
  Nfa n(ab);
  State s = n.add_state(), x = n.add_state(true), y = n.add_state(), z = n.add_state(true);
  n.starts.push_back(s);
  n.add_edge(s, 0, x);
  n.add_edge(s, 0, y);
  n.add_edge(y, 0, z);
  Pdfa d = determinize(n);
  for (const auto& w : all_words(ab, 3)) EXPECT_EQ(d.accepts(w), w == "a" || w == "aa") << w;
}

TEST(Determinize, NoFinalStateGivesEmptyLanguage) {
  Nfa n(Alphabet("ab"));
  State s = n.add_state();
  n.starts.push_back(s);
  n.add_edge(s, 0, s);
  Pdfa d = determinize(n);
  EXPECT_EQ(d.num_states(), 1u);
  for (const auto& w : all_words(d.alphabet(), 3)) EXPECT_FALSE(d.accepts(w));
}

TEST(Determinize, DeterministicInputKeepsLanguage) {
  Pdfa b = b1();
  EXPECT_TRUE(language_equal(determinize(to_nfa(b)), b));
}

TEST(Preimage, Examples) {
  Alphabet ab("ab"), x("x"), xy("xy");
  Pdfa abab = compile_regex("abab");
  Pdfa p1 = preimage_under_hom(abab, Hom(x, ab, {"ab"}));
  for (const auto& w : all_words(x, 4)) EXPECT_EQ(p1.accepts(w), w == "xx") << w;

  Pdfa with_eps = compile_regex("(ab)*");
  Pdfa p2 = preimage_under_hom(with_eps, Hom(x, ab, {""}));
  for (const auto& w : all_words(x, 4)) EXPECT_TRUE(p2.accepts(w)) << w;

  Pdfa p3 = preimage_under_hom(b1(), Hom(xy, ab, {"a", "b"}));
  EXPECT_TRUE(language_equal(p3, compile_regex("xy*x")));
}

TEST(Image, AbStarAMapsToAbBaStarAb) {
  Alphabet ab("ab");
  Pdfa img = image_under_hom(b1(), Hom(ab, ab, {"ab", "ba"}));
  EXPECT_TRUE(language_equal(img, compile_regex("ab(ba)*ab")));
}

TEST(Image, IdentityAndErasing) {
  Alphabet ab("ab");
  Pdfa b = b1();
  EXPECT_TRUE(language_equal(image_under_hom(b, Hom(ab, ab, {"a", "b"})), b));
  Pdfa erased = image_under_hom(b, Hom(ab, ab, {"", ""}));
  for (const auto& w : all_words(ab, 3)) EXPECT_EQ(erased.accepts(w), w.empty()) << w;
  Pdfa single = compile_regex("a", Alphabet("ab"));
  Pdfa none = trim(Pdfa(ab, 1, {kNoState, kNoState}, 0, {false}));
  EXPECT_FALSE(image_under_hom(none, Hom(ab, ab, {"", ""})).accepts(""));
  EXPECT_TRUE(image_under_hom(single, Hom(ab, ab, {"", ""})).accepts(""));
}

TEST(Trim, EmptyLanguageKeepsStartOnly) {
  Alphabet ab("ab");
  Pdfa b(ab, 2, {0, 1, 1, 0}, 0, {false, false});
  Pdfa t = trim(b);
  EXPECT_EQ(t.num_states(), 1u);
  EXPECT_EQ(t.next(0, 0), kNoState);
}

TEST(Scc, CountsComponents) {
  std::size_t count = 0;
  strongly_connected_components(b1(), &count);
  EXPECT_EQ(count, 3u);
  strongly_connected_components(compile_regex("(ab)*"), &count);
  EXPECT_EQ(count, 1u);
}

// ---------------------------------------------------------------------------
// properties

TEST(AutomataProperty, MonoidAction) {
  testing::Rng rng(11);
  Alphabet sigma("abc");
  for (int trial = 0; trial < 300; ++trial) {
    Dcsa a = testing::random_dcsa(rng, sigma, 1 + trial % 7);
    Pdfa b = testing::random_pdfa(rng, sigma, 1 + trial % 5, 0.7);
    Word u = testing::random_word(rng, sigma, 6), v = testing::random_word(rng, sigma, 6);
    StateSet s = a.all_states();
    EXPECT_EQ(step_set(a, s, u + v), step_set(a, step_set(a, s, u), v));
    StateSet p = StateSet::full(b.num_states());
    EXPECT_EQ(step_set(b, p, u + v), step_set(b, step_set(b, p, u), v));
  }
}

TEST(AutomataProperty, SynchronizingWordsFormAnIdeal) {
  testing::Rng rng(12);
  Alphabet sigma("ab");
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Dcsa a = testing::random_dcsa(rng, sigma, 2 + trial % 5);
    Word w = testing::random_word(rng, sigma, 10);
    if (!is_synchronizing_word(a, w)) continue;
    ++checked;
    Word u = testing::random_word(rng, sigma, 5), v = testing::random_word(rng, sigma, 5);
    EXPECT_TRUE(is_synchronizing_word(a, u + w + v));
  }
  EXPECT_GT(checked, 20);
}

TEST(AutomataProperty, ConstructionsAgreeWithEnumeration) {
  testing::Rng rng(13);
  Alphabet ab("ab"), xyz("xyz");
  std::uniform_int_distribution<int> len(0, 2), letter(0, 1);
  auto random_image = [&] {
    Word w;
    for (int i = len(rng); i > 0; --i) w.push_back(ab.symbol(static_cast<std::size_t>(letter(rng))));
    return w;
  };
  for (int trial = 0; trial < 150; ++trial) {
    // determinize vs NFA simulation
    Nfa n(ab);
    std::size_t ns = 1 + trial % 4;
    for (std::size_t i = 0; i < ns; ++i) n.add_state(rng() % 3 == 0);
    for (std::size_t e = 0; e < 2 * ns; ++e)
      n.add_edge(static_cast<State>(rng() % ns), static_cast<int>(rng() % 3) - 1, static_cast<State>(rng() % ns));
    n.starts.push_back(0);
    Pdfa d = determinize(n);
    for (const auto& w : all_words(ab, 6)) ASSERT_EQ(d.accepts(w), n.accepts(w)) << w;
    Pdfa m = minimize(d);
    for (const auto& w : all_words(ab, 6)) ASSERT_EQ(m.accepts(w), d.accepts(w)) << w;

    // preimage / image vs phi
    Pdfa b = testing::random_pdfa(rng, ab, 1 + trial % 4, 0.8);
    Hom phi(xyz, ab, {random_image(), random_image(), random_image()});
    Pdfa pre = preimage_under_hom(b, phi);
    for (const auto& w : all_words(xyz, 4)) ASSERT_EQ(pre.accepts(w), b.accepts(phi.apply(w))) << w;

    Pdfa src = testing::random_pdfa(rng, xyz, 1 + trial % 3, 0.6);
    Pdfa img = image_under_hom(src, phi);
    std::set<Word> expected;
    // Words of length <= 6 in phi(L(src)); preimages up to length 6 suffice
    // only for non-erasing letters, so collect from longer source words.
    for (const auto& w : all_words(xyz, 7))
      if (src.accepts(w)) {
        Word x = phi.apply(w);
        if (x.size() <= 4) expected.insert(x);
      }
    bool erasing = phi.of(0).empty() || phi.of(1).empty() || phi.of(2).empty();
    for (const auto& w : all_words(ab, 4)) {
      if (expected.count(w)) {
        ASSERT_TRUE(img.accepts(w)) << w;
      } else if (!erasing) {
        ASSERT_FALSE(img.accepts(w)) << w;
      }
    }
  }
}

TEST(AutomataProperty, IntersectionMatchesExhaustiveSearch) {
  testing::Rng rng(14);
  Alphabet ab("ab");
  for (int trial = 0; trial < 200; ++trial) {
    Pdfa b = testing::random_pdfa(rng, ab, 1 + trial % 3, 0.8);
    Pdfa d = testing::random_pdfa(rng, ab, 1 + trial % 2, 0.8);
    Nfa n = to_nfa(d);
    auto got = intersect_nonempty(b, n);
    // Product has at most 3 * 4 states, so a witness has length <= 11.
    auto want = testing::first_word(ab, 11, [&](const Word& w) { return b.accepts(w) && n.accepts(w); });
    ASSERT_EQ(got.has_value(), want.has_value());
    if (got) EXPECT_EQ(*got, *want);
  }
}

}  // namespace
}  // namespace csync

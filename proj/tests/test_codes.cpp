#include <gtest/gtest.h>

#include "csync/codes.hpp"
#include "csync/errors.hpp"
#include "oracles.hpp"

namespace csync {
namespace {

CodeSet code(std::vector<Word> w) { return CodeSet(std::move(w)); }

TEST(Codes, SelfSynchronizing) {
  EXPECT_TRUE(is_self_synchronizing(code({"aacc", "bbc", "bac"})).ok);
  EXPECT_TRUE(is_self_synchronizing(code({"aab", "bccc", "abc"})).ok);
  CodeCheck c = is_self_synchronizing(code({"ab", "ba"}));
  EXPECT_FALSE(c.ok);
  ASSERT_TRUE(c.counterexample);
  EXPECT_EQ(c.counterexample->u + c.counterexample->v, "abab");
  EXPECT_EQ(c.counterexample->offset, 1u);
  EXPECT_EQ(c.counterexample->match, "ba");
}

TEST(Codes, StronglySelfSynchronizing) {
  EXPECT_TRUE(is_strongly_self_synchronizing(code({"aacc", "bbc", "bac"})).ok);
  EXPECT_TRUE(is_strongly_self_synchronizing(code({"cab", "cba", "caa"})).ok);
  CodeCheck c = is_strongly_self_synchronizing(code({"aab", "bccc", "abc"}));
  EXPECT_FALSE(c.ok);
  ASSERT_TRUE(c.counterexample);
  EXPECT_EQ(c.counterexample->u, "a");
  EXPECT_EQ(c.counterexample->v, "abc");
  EXPECT_EQ(c.counterexample->match, "aab");
  EXPECT_EQ(c.counterexample->offset, 0u);
}

TEST(Codes, Positional) {
  EXPECT_TRUE(positional_check(code({"aacc", "bbc", "bac"})));
  EXPECT_FALSE(positional_check(code({"aab", "bccc", "abc"})));
  EXPECT_EQ(positional_check(code({"ab"})), is_strongly_self_synchronizing(code({"ab"})).ok);
  EXPECT_EQ(positional_check(code({"aba"})), is_strongly_self_synchronizing(code({"aba"})).ok);
}

TEST(Codes, PrefixAndInfix) {
  EXPECT_TRUE(is_prefix_code(code({"aacc", "bbc", "bac"})));
  EXPECT_TRUE(is_infix_code(code({"aacc", "bbc", "bac"})));
  EXPECT_FALSE(is_prefix_code(code({"a", "ab"})));
  EXPECT_FALSE(is_infix_code(code({"ab", "b"})));
  EXPECT_TRUE(is_prefix_code(code({"ab", "b"})));
}

TEST(Codes, ProperPrefixes) {
  EXPECT_EQ(code({"aacc", "bbc", "bac"}).proper_prefixes(),
            (std::vector<Word>{"", "a", "aa", "aac", "b", "ba", "bb"}));
}

TEST(Codes, Validation) {
  EXPECT_THROW(code({}), InputError);
  EXPECT_THROW(code({"a", ""}), InputError);
}

TEST(ConstructCode, Examples) {
  ConstructedCode a = construct_code({"ab", "ba", "aa"}, 'c');
  EXPECT_EQ(a.words, (std::vector<Word>{"cab", "cba", "caa"}));
  EXPECT_EQ(a.k, 0u);
  EXPECT_TRUE(a.strong.ok);

  ConstructedCode b = construct_code({"ab", "aa"}, 'b');
  EXPECT_EQ(b.words, (std::vector<Word>{"bbab", "bbaa"}));
  EXPECT_EQ(b.k, 1u);
  // ab ends with the marker: (bba)(bbaa) contains bbab.
  EXPECT_FALSE(b.strong.ok);

  ConstructedCode c = construct_code({"aa"}, 'b');
  EXPECT_EQ(c.words, std::vector<Word>{"baa"});
  EXPECT_EQ(c.k, 0u);
  EXPECT_TRUE(c.strong.ok);
}

TEST(ConstructCode, Errors) {
  EXPECT_THROW(construct_code({"ab", "a"}, 'c'), InputError);
  EXPECT_THROW(construct_code({"ca"}, 'c'), InputError);
  EXPECT_THROW(construct_code({}, 'c'), InputError);
}

std::vector<Word> random_code(testing::Rng& rng, const Alphabet& sigma) {
  std::vector<Word> w;
  const std::size_t n = 1 + rng() % 5;
  while (w.size() < n) {
    Word x = testing::random_word(rng, sigma, 5);
    if (!x.empty()) w.push_back(x);
  }
  return w;
}

TEST(CodesProperty, CharacterizationAndHierarchy) {
  testing::Rng rng(2024);
  int strong = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const Alphabet sigma(std::string("abc").substr(0, 1 + rng() % 3));
    CodeSet c(random_code(rng, sigma));
    bool s = is_strongly_self_synchronizing(c).ok;
    ASSERT_EQ(s, positional_check(c)) << ::testing::PrintToString(c.words());
    bool ss = is_self_synchronizing(c).ok;
    if (s) EXPECT_TRUE(ss);
    if (ss) EXPECT_TRUE(is_infix_code(c));
    if (is_infix_code(c)) EXPECT_TRUE(is_prefix_code(c));
    strong += s;
  }
  EXPECT_GT(strong, 50);
}

TEST(CodesProperty, CounterexampleIsGenuine) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    CodeSet c(random_code(rng, Alphabet("ab")));
    CodeCheck r = is_strongly_self_synchronizing(c);
    if (r.ok) continue;
    const auto& x = *r.counterexample;
    Word uv = x.u + x.v;
    EXPECT_TRUE(c.contains(x.match));
    EXPECT_EQ(uv.compare(x.offset, x.match.size(), x.match), 0);
    EXPECT_LT(x.offset + x.match.size(), uv.size());
  }
}

TEST(CodesProperty, ConstructionStrongUnlessMarkerEndsAWord) {
  testing::Rng rng(77);
  const Alphabet sigma("abc");
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<Word> x;
    for (std::size_t i = 0; i < 1 + rng() % 4; ++i) {
      Word w;
      while (w.size() < n) w += sigma.symbol(rng() % 3);
      if (w[0] != 'c') x.push_back(w);
    }
    if (x.empty()) continue;
    ConstructedCode y = construct_code(x, 'c');
    bool ends = std::any_of(x.begin(), x.end(), [](const Word& w) { return w.back() == 'c'; });
    EXPECT_EQ(y.strong.ok, !ends) << ::testing::PrintToString(x);
  }
}

}  // namespace
}  // namespace csync

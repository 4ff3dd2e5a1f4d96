#include <gtest/gtest.h>

#include "csync/errors.hpp"
#include "csync/syntax.hpp"
#include "oracles.hpp"

namespace csync {
namespace {

TEST(ParseRegex, Grammar) {
  EXPECT_EQ(to_string(*parse_regex("ab*a")), "Concat[a,Star(b),a]");
  EXPECT_EQ(to_string(*parse_regex("a^5bd|cd^4")), "Union[Concat[Power(a,5),b,d],Concat[c,Power(d,4)]]");
  EXPECT_EQ(to_string(*parse_regex("a^0")), "Power(a,0)");
}

TEST(ParseRegex, WhitespaceAndCaretStar) {
  EXPECT_EQ(to_string(*parse_regex(" a b *  a ")), "Concat[a,Star(b),a]");
  EXPECT_EQ(to_string(*parse_regex("aa^*b")), "Concat[a,Star(a),b]");
}

TEST(ParseRegex, ErrorsCarryOffsets) {
  auto offset_of = [](const char* text) -> std::size_t {
    try {
      parse_regex(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return static_cast<std::size_t>(-1);
  };
  EXPECT_EQ(offset_of("ab)"), 2u);
  EXPECT_EQ(offset_of("(ab"), 0u);
  EXPECT_EQ(offset_of("a|"), 2u);
  EXPECT_EQ(offset_of("a^"), 1u);
  EXPECT_EQ(offset_of("aB"), 1u);
  EXPECT_THROW(parse_regex(""), ParseError);
  EXPECT_THROW(parse_regex("*a"), ParseError);
}

TEST(CompileRegex, Examples) {
  Pdfa b1 = compile_regex("ab*a");
  EXPECT_EQ(b1.num_states(), 3u);
  EXPECT_EQ(compile_regex("a|b").num_states(), 2u);
  Pdfa eps = compile_regex("a^0");
  EXPECT_EQ(eps.num_states(), 1u);
  EXPECT_TRUE(eps.accepts(""));
  EXPECT_FALSE(eps.accepts("a"));
}

TEST(CompileRegex, ExplicitAlphabetMustCoverLetters) {
  EXPECT_EQ(compile_regex("ab*a", Alphabet("abc")).alphabet().symbols(), "abc");
  EXPECT_THROW(compile_regex("ab*a", Alphabet("a")), InputError);
}

TEST(CompileRegex, AgreesWithRecursiveEvaluator) {
  const char* cases[] = {"ab*a",       "a^5bd|cd^4",         "aa(aaa)*bbb*d|a*b|d*", "bbcc*d*|a",
                         "(ab)(ba)*(ab)", "(a|b)*abb",      "(a^2|b)^3",            "a^0|b",
                         "((a*)*b)*",  "aa^*bbbbcd^*|bbbdd^*d", "(aacc)(bbc)*(bac)"};
  for (const char* text : cases) {
    RegexPtr ast = parse_regex(text);
    Pdfa b = compile_regex(*ast);
    for (const auto& w : testing::all_words(b.alphabet(), 6))
      ASSERT_EQ(b.accepts(w), testing::regex_matches(*ast, w)) << text << " on " << w;
  }
}

TEST(CompileRegex, RandomExpressionsAgreeWithEvaluator) {
  testing::Rng rng(21);
  std::function<std::string(int)> gen = [&](int depth) -> std::string {
    int pick = depth <= 0 ? 0 : static_cast<int>(rng() % 6);
    switch (pick) {
      case 0:
      case 1:
        return std::string(1, "abc"[rng() % 3]);
      case 2:
        return gen(depth - 1) + gen(depth - 1);
      case 3:
        return "(" + gen(depth - 1) + "|" + gen(depth - 1) + ")";
      case 4:
        return "(" + gen(depth - 1) + ")*";
      default:
        return "(" + gen(depth - 1) + ")^" + std::to_string(rng() % 3);
    }
  };
  for (int i = 0; i < 150; ++i) {
    std::string text = gen(4);
    RegexPtr ast = parse_regex(text);
    Pdfa b = compile_regex(*ast, Alphabet("abc"));
    for (const auto& w : testing::all_words(b.alphabet(), 5))
      ASSERT_EQ(b.accepts(w), testing::regex_matches(*ast, w)) << text << " on " << w;
  }
}

constexpr const char* kT1 =
    "# T1\n"
    "alphabet a b\n"
    "states q0 q1\n"
    "trans q0 a q0\n"
    "trans q0 b q0\n"
    "trans q1 a q0\n"
    "trans q1 b q1\n";

TEST(AutomatonFormat, RoundTrip) {
  Automaton m = parse_automaton(kT1);
  ASSERT_TRUE(std::holds_alternative<Dcsa>(m));
  const Dcsa& a = std::get<Dcsa>(m);
  EXPECT_EQ(a, testing::t1());
  std::string canon = serialize_automaton(a);
  EXPECT_EQ(serialize_automaton(parse_automaton(canon)), canon);
  EXPECT_EQ(canon, std::string(kT1).substr(5));
}

TEST(AutomatonFormat, PdfaRoundTrip) {
  Pdfa b = compile_regex("ab*a");
  std::string text = serialize_automaton(b, {"constraint ab*a"});
  Automaton m = parse_automaton(text);
  ASSERT_TRUE(std::holds_alternative<Pdfa>(m));
  EXPECT_EQ(std::get<Pdfa>(m), b);
  EXPECT_EQ(serialize_automaton(m), serialize_automaton(b));
}

TEST(AutomatonFormat, IncompleteDcsa) {
  std::string text = "alphabet a b\nstates q0 q1\ntrans q0 a q0\ntrans q0 b q0\ntrans q1 a q0\n";
  try {
    parse_automaton(text);
    FAIL() << "expected an error";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("incomplete"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("q1"), std::string::npos);
  }
}

TEST(AutomatonFormat, ValidationErrorsNameTheLine) {
  auto message = [](const std::string& text) -> std::string {
    try {
      parse_automaton(text);
    } catch (const InputError& e) {
      return e.what();
    }
    return {};
  };
  EXPECT_NE(message("alphabet a\nstates p0\nstart p0\nfinal p9\n").find("line 4"), std::string::npos);
  EXPECT_NE(message("alphabet a\nstates p0\nstart p0\nfinal\ntrans p0 a p0\ntrans p0 a p0\n").find("line 6"),
            std::string::npos);
  EXPECT_NE(message("alphabet a\nstates p0\ntrans p0 z p0\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("alphabet a\nstates p0\nbogus\n").find("line 3"), std::string::npos);
  EXPECT_FALSE(message("states p0\n").empty());
}

}  // namespace
}  // namespace csync

#include <gtest/gtest.h>

#include "castella/text.hpp"
#include "castella/word.hpp"

using namespace castella;

namespace {
Element E(const char* s) { return parse_element(s); }
}  // namespace

TEST(Normalize, SwapsOutOfOrderPair) { EXPECT_EQ(normalize({3, 2}), E("p2 p4")); }

TEST(Normalize, EmptyWordIsIdentity) { EXPECT_TRUE(normalize({}).is_identity()); }

TEST(Normalize, MixedWord) { EXPECT_EQ(normalize({2, 3, 2, 5}), E("p2^2 p4 p5")); }

TEST(Normalize, RunsAreCanonical) {
  auto u = normalize({2, 3, 2, 5});
  std::vector<castella::Run> want = {{2, 2}, {4, 1}, {5, 1}};
  EXPECT_EQ(u.runs(), want);
  EXPECT_EQ(normalize(u.word()), u);
}

TEST(Element, FromRunsRejectsBadRuns) {
  EXPECT_THROW(Element::from_runs({{2, 1}, {2, 1}}), DomainError);
  EXPECT_THROW(Element::from_runs({{3, 1}, {1, 1}}), DomainError);
  EXPECT_THROW(Element::from_runs({{0, 0}}), DomainError);
}

TEST(Element, IndexOverflowIsAnError) {
  Element top = prime(std::numeric_limits<Index>::max());
  EXPECT_THROW(multiply(top, prime(0)), DomainError);
}

TEST(Ind, Values) {
  EXPECT_EQ(ind(E("p2^2 p4 p5")), 4u);
  EXPECT_EQ(ind(Element{}), 0u);
  EXPECT_EQ(ind(E("p0^2 p1 p4")), 4u);
  EXPECT_EQ(ind(Word{1, 2, 3}), 3u);
}

TEST(Multiply, Examples) {
  EXPECT_EQ(multiply(E("p0"), E("p2")), E("p0 p2"));
  EXPECT_EQ(multiply(E("p1"), E("p0")), E("p0 p2"));
}

TEST(Power, Examples) {
  // (p0 p1)^3 = p0^3 (p3)(p2)(p1).
  EXPECT_EQ(power(E("p0 p1"), 3), E("p0^3 p1 p3 p5"));
  EXPECT_EQ(power(E("p0 p1"), 3), E("p0^3 p3 p2 p1"));
  EXPECT_TRUE(power(E("p4 p7"), 0).is_identity());
}

TEST(Order, CanonicalIsIndThenLexicographic) {
  EXPECT_LT(E("p5"), E("p0 p0"));
  EXPECT_LT(E("p0^2"), E("p0 p1"));
  EXPECT_LT(E("p0 p3"), E("p1 p2"));
  EXPECT_EQ(E("p0^2 p1") <=> E("p0^2 p1"), std::strong_ordering::equal);
}

TEST(EnumerateWords, SixWordsOfP2P4P6) {
  std::vector<Word> want = {{2, 4, 6}, {2, 5, 4}, {3, 2, 6}, {3, 5, 2}, {4, 2, 4}, {4, 3, 2}};
  EXPECT_EQ(enumerate_words(E("p2 p4 p6")), want);
}

TEST(EnumerateWords, SingleLetter) { EXPECT_EQ(enumerate_words(E("p3")), std::vector<Word>{{3}}); }

TEST(EnumerateWords, FourWordsOfU) {
  std::vector<Word> want = {{0, 0, 1, 4}, {0, 0, 3, 1}, {0, 2, 0, 1}, {1, 0, 0, 1}};
  EXPECT_EQ(enumerate_words(E("p0^2 p1 p4")), want);
}

TEST(EnumerateWords, CapIsEnforced) {
  EXPECT_THROW(enumerate_words(E("p2 p4 p6"), Limits{3}), ResourceLimitError);
}

TEST(MinMaxWord, Examples) {
  EXPECT_EQ(min_word(E("p2 p4 p6")), (Word{4, 3, 2}));
  EXPECT_EQ(max_word(E("p2 p4 p6")), (Word{2, 4, 6}));
  EXPECT_EQ(min_word(E("p0 p4 p3")), (Word{3, 2, 0}));
  EXPECT_TRUE(min_word(Element{}).empty());
}

TEST(WordPrecedes, Examples) {
  EXPECT_TRUE(word_precedes({4, 3, 2}, {2, 4, 6}));
  EXPECT_FALSE(word_precedes({3, 5, 2}, {4, 2, 4}));
  EXPECT_FALSE(word_precedes({4, 2, 4}, {3, 5, 2}));
  EXPECT_TRUE(word_precedes({2, 4, 6}, {2, 4, 6}));
  EXPECT_FALSE(word_precedes({2, 4, 6}, {4, 3, 2}));
}

TEST(WordPrecedes, DifferentElementsIsAnError) {
  EXPECT_THROW(word_precedes({0, 1}, {1, 0}), DomainError);
}

TEST(Iota, Examples) {
  EXPECT_EQ(iota(E("p1 p3")), E("p2 p4"));
  EXPECT_EQ(iota(E("p0^2")), E("p0^2"));
  EXPECT_EQ(iota_inverse(E("p0 p2")), E("p0 p1"));
}

TEST(Iota, InverseNeedsNoP1) { EXPECT_THROW(iota_inverse(E("p0 p1")), DomainError); }

TEST(Iota, IsConjugationByP0) {
  for (const char* s : {"p1 p3", "p0^2 p1 p5", "p2^3", "p0 p1 p2 p3"}) {
    Element u = E(s);
    EXPECT_EQ(multiply(prime(0), iota(u)), multiply(u, prime(0))) << s;
    EXPECT_EQ(iota_inverse(iota(u)), u) << s;
  }
}

#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"

using namespace qsym;

namespace {
Composition C(std::vector<int> v) { return Composition(std::move(v)); }
}  // namespace

TEST(Complement, Examples) {
  EXPECT_EQ(complement({3, 2}), Composition({1, 1, 2, 1}));
  EXPECT_EQ(complement({}), Composition());
  EXPECT_EQ(complement({1, 1, 1, 1}), Composition({4}));
}

TEST(Reverse, Examples) {
  EXPECT_EQ(reverse({3, 2}), Composition({2, 3}));
  EXPECT_EQ(reverse({5}), Composition({5}));
  EXPECT_EQ(reverse({1, 2, 3, 1}), Composition({1, 3, 2, 1}));
}

TEST(Transpose, Examples) {
  EXPECT_EQ(transpose({3, 2}), Composition({1, 2, 1, 1}));
  EXPECT_EQ(transpose({}), Composition());
  EXPECT_EQ(transpose({2, 3}), Composition({1, 1, 2, 1}));
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(Partition{3, 2}).composition(), Composition({2, 2, 1}));
  EXPECT_EQ(conjugate(Partition{1, 1, 1}).composition(), Composition({3}));
  EXPECT_EQ(conjugate(Partition{4, 2, 1}).composition(), Composition({3, 2, 1, 1}));
}

TEST(Conjugate, DiffersFromTranspose) {
  EXPECT_NE(conjugate(Partition{3, 2}).composition(), transpose({3, 2}));
}

TEST(Conjugate, RejectsNonPartition) { EXPECT_THROW(conjugate(Composition{1, 2}), qsym::domain_error); }

TEST(Concat, Examples) {
  EXPECT_EQ(concat({1, 2, 3, 1}, {3, 2}), Composition({1, 2, 3, 1, 3, 2}));
  EXPECT_EQ(near_concat({1, 2, 3, 1}, {3, 2}), Composition({1, 2, 3, 4, 2}));
  EXPECT_EQ(concat({}, {3}), Composition({3}));
}

TEST(Concat, NearConcatNeedsNonEmptyArguments) {
  EXPECT_THROW(near_concat({}, {1}), qsym::domain_error);
  EXPECT_THROW(near_concat({1}, {}), qsym::domain_error);
}

TEST(Order, Examples) {
  EXPECT_TRUE(refines({1, 2, 1}, {1, 3}));
  EXPECT_TRUE(refines({1, 1, 1, 1}, {1, 2, 1}));
  EXPECT_TRUE(refines({1, 3}, {4}));
  EXPECT_FALSE(refines({1, 3}, {1, 2, 1}));
  EXPECT_TRUE(dominated({1, 1, 1}, {2, 1, 1, 1}));
  EXPECT_TRUE(dominated({2, 1, 1, 1}, {2, 3, 1, 2}));
  EXPECT_FALSE(dominated({2, 2}, {1, 3}));
  EXPECT_EQ(sort_to_partition({1, 2, 3, 1}).composition(), Composition({3, 2, 1, 1}));
}

TEST(Order, RefinesNeedsEqualSizes) { EXPECT_THROW(refines({1}, {2}), qsym::domain_error); }

TEST(Order, CanonicalOrder) {
  EXPECT_LT(Composition({1, 2}), Composition({2, 1}));
  EXPECT_LT(Composition({3}), Composition({1, 1, 1, 1}));  // size first
  EXPECT_LT(Composition(), Composition({1}));
}

TEST(DescentSets, Examples) {
  EXPECT_EQ(set_of({2, 3, 1}), DescentSet(6, {2, 5}));
  EXPECT_EQ(comp_of(DescentSet(4, {})), Composition({4}));
  EXPECT_EQ(comp_of(DescentSet(0, {})), Composition());
  EXPECT_THROW(DescentSet(3, {3}), qsym::domain_error);
  EXPECT_THROW(DescentSet(5, {2, 2}), qsym::domain_error);
}

TEST(WeakCompositions, TrailingZerosAreDropped) {
  EXPECT_EQ(WeakComposition({2, 0, 1, 0, 0}), WeakComposition({2, 0, 1}));
  EXPECT_EQ(flatten(WeakComposition({0, 2, 0, 1})), Composition({2, 1}));
  EXPECT_THROW(WeakComposition({1, -1}), qsym::domain_error);
}

TEST(Values, ConstructorsValidate) {
  EXPECT_THROW(Composition({1, 0}), qsym::domain_error);
  EXPECT_THROW(Partition({1, 2}), qsym::domain_error);
}

TEST(Enumeration, Examples) {
  EXPECT_EQ(enumerate_compositions(0), std::vector<Composition>{Composition()});
  EXPECT_EQ(enumerate_compositions(3).size(), 4u);
  EXPECT_EQ(enumerate_compositions(6).size(), 32u);
  EXPECT_EQ(enumerate_partitions(5).size(), 7u);
}

TEST(Enumeration, MatchesSubsetOracle) {
  for (int n = 1; n <= 12; ++n) {
    const auto got = enumerate_compositions(n);
    ASSERT_EQ(got.size(), std::size_t{1} << (n - 1));
    for (std::size_t i = 1; i < got.size(); ++i) ASSERT_LT(got[i - 1], got[i]);
    std::set<std::vector<int>> a, b;
    for (const auto& c : got) a.insert(c.vec());
    for (const auto& c : oracle::compositions(n)) b.insert(c);
    ASSERT_EQ(a, b) << n;
  }
}

TEST(Properties, InvolutionsAndSetBijection) {
  for (int n = 0; n <= 9; ++n)
    for (const auto& a : enumerate_compositions(n)) {
      ASSERT_EQ(complement(complement(a)), a);
      ASSERT_EQ(reverse(reverse(a)), a);
      ASSERT_EQ(transpose(transpose(a)), a);
      ASSERT_EQ(transpose(a), reverse(complement(a)));
      ASSERT_EQ(complement(a).vec(), oracle::complement(a.vec())) << to_string(a);
      ASSERT_EQ(comp_of(set_of(a)), a);
      ASSERT_EQ(sort_to_partition(a).size(), a.size());
    }
  for (int n = 1; n <= 9; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      ASSERT_EQ(conjugate(conjugate(p)), p);
      ASSERT_EQ(conjugate(p).composition().vec(), oracle::conjugate(p.composition().vec()));
    }
}

TEST(Properties, RefinementIsAPartialOrder) {
  for (int n = 1; n <= 7; ++n) {
    const auto cs = enumerate_compositions(n);
    for (const auto& a : cs) {
      ASSERT_TRUE(refines(a, a));
      for (const auto& b : cs) {
        const bool r = refines(a, b);
        ASSERT_EQ(r, oracle::refines(a.vec(), b.vec()));
        if (r) ASSERT_GE(a.length(), b.length());
        if (r && refines(b, a)) ASSERT_EQ(a, b);
        if (!r) continue;
        for (const auto& c : cs)
          if (refines(b, c)) ASSERT_TRUE(refines(a, c));
      }
    }
  }
}

TEST(Text, RoundTrip) {
  EXPECT_EQ(to_string(Composition({2, 3, 1})), "[2,3,1]");
  EXPECT_EQ(to_string(Composition()), "[]");
  EXPECT_EQ(parse_composition("[2,3,1]"), C({2, 3, 1}));
  EXPECT_EQ(parse_composition("(2, 3, 1)"), C({2, 3, 1}));
  EXPECT_EQ(parse_composition("1,3,4"), C({1, 3, 4}));
  EXPECT_EQ(parse_composition("[]"), Composition());
  EXPECT_EQ(parse_weak_composition("[1,0,2,0]"), WeakComposition({1, 0, 2}));
}

TEST(Text, MalformedInput) {
  for (const char* bad : {"[1,,2]", "[1,2", "[a]", "[0,1]", "[-1]", "1 2"})
    EXPECT_THROW(parse_composition(bad), qsym::domain_error) << bad;
}

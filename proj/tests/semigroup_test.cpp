#include <gtest/gtest.h>

#include <set>

#include "atomix/error.hpp"
#include "atomix/generators.hpp"
#include "atomix/semigroup.hpp"
#include "test_support.hpp"

namespace atomix {
namespace {

using testing::p3;
using testing::w3;

// Distinct actions of nonempty words, growing the length bound until a round
// adds nothing (at which point the set is closed under right multiplication
// by letters and hence equals T(M)).
std::set<std::vector<State>> word_enumeration_semigroup(const Dfa& d) {
  std::set<std::vector<State>> seen;
  std::vector<Word> layer;
  for (char c : d.alphabet()) layer.emplace_back(1, c);
  while (true) {
    bool grew = false;
    std::vector<Word> next;
    for (const auto& w : layer) {
      std::vector<State> img(d.size());
      for (State q = 0; q < d.size(); ++q) img[q] = d.run(q, w);
      if (seen.insert(img).second) {
        grew = true;
        for (char c : d.alphabet()) next.push_back(w + c);
      }
    }
    if (!grew) return seen;
    layer = std::move(next);
  }
}

TEST(LetterActions, W3Columns) {
  const auto acts = letter_actions(w3());
  ASSERT_EQ(acts.size(), 3U);
  EXPECT_EQ(acts[0].first, 'a');
  EXPECT_EQ(acts[0].second.to_string(), "[1,2,0]");
  EXPECT_EQ(acts[1].second.to_string(), "[1,0,2]");
  EXPECT_EQ(acts[2].second.to_string(), "[1,1,2]");
  for (const auto& [c, t] : acts) EXPECT_EQ(t, word_action(w3(), std::string(1, c)));
}

TEST(LetterActions, SingleState) {
  const Dfa d(1, "ab", {0, 0}, 0, StateSet(1));
  for (const auto& [c, t] : letter_actions(d)) EXPECT_EQ(t.to_string(), "[0]");
}

TEST(Rank, Basics) {
  EXPECT_EQ(rank(Transformation::identity(5)), 5U);
  EXPECT_EQ(rank(Transformation::constant(5, 2)), 1U);
  EXPECT_EQ(rank(Transformation({1, 1, 2})), 2U);
}

TEST(SemigroupClosure, W3IsFullT3) {
  const auto s = semigroup_closure(w3(), 100'000);
  EXPECT_FALSE(s.truncated());
  EXPECT_EQ(word_enumeration_semigroup(w3()).size(), 27U);
  EXPECT_EQ(s.size(), 27U);
}

TEST(SemigroupClosure, P3IsSymmetricGroup) {
  EXPECT_EQ(word_enumeration_semigroup(p3()).size(), 6U);
  EXPECT_EQ(semigroup_closure(p3(), 100'000).size(), 6U);
}

TEST(SemigroupClosure, ConstantLetter) {
  EXPECT_EQ(semigroup_closure(testing::constant_letter_dfa(4)).size(), 1U);
}

TEST(SemigroupClosure, IdentityOnlyWhenInducedByNonemptyWord) {
  const Dfa d(3, "a", {1, 1, 2}, 0, StateSet(3, {0}));
  const auto s = semigroup_closure(d);
  EXPECT_FALSE(s.contains(Transformation::identity(3)));
  EXPECT_TRUE(semigroup_closure(p3()).contains(Transformation::identity(3)));
}

TEST(SemigroupClosure, TruncationIsFlagged) {
  const auto s = semigroup_closure(w3(), 10);
  EXPECT_TRUE(s.truncated());
  EXPECT_EQ(s.size(), 10U);
  EXPECT_THROW(has_rank_n_minus_1(s, 3), Error);
  EXPECT_THROW(contains_all_singular(s, 3), Error);
}

TEST(SemigroupClosure, WitnessesAreShortestAndSound) {
  for (const Dfa& d : testing::property_corpus(40, 5, 3)) {
    const auto s = semigroup_closure(d);
    std::size_t prev = 0;
    for (const auto& e : s.elements()) {
      ASSERT_EQ(word_action(d, e.witness), e.map) << e.witness;
      ASSERT_GE(e.witness.size(), prev);
      prev = e.witness.size();
    }
  }
  // No shorter word induces any element: compare with first occurrence in
  // length-lexicographic word order.
  const Dfa d = w3();
  const auto s = semigroup_closure(d);
  std::set<std::vector<State>> seen;
  for (const auto& w : testing::all_words(d.alphabet(), 6)) {
    if (w.empty()) continue;
    const auto t = word_action(d, w);
    if (seen.insert(std::vector<State>(t.images().begin(), t.images().end())).second)
      EXPECT_EQ(s.witness(t), w);
  }
}

TEST(SemigroupClosure, RankIsSubmultiplicative) {
  for (const Dfa& d : testing::property_corpus(10, 4, 3)) {
    const auto s = semigroup_closure(d);
    for (const auto& f : s.elements())
      for (const auto& g : s.elements())
        ASSERT_LE(f.map.then(g.map).rank(), std::min(f.map.rank(), g.map.rank()));
  }
}

TEST(SemigroupClosure, JsonExport) {
  const auto j = to_json(semigroup_closure(p3()));
  ASSERT_EQ(j.size(), 6U);
  EXPECT_EQ(j[0]["map"], nlohmann::json::array({1, 2, 0}));
  EXPECT_EQ(j[0]["witness"], "a");
  EXPECT_EQ(j[0]["rank"], 3);
}

TEST(HasRankNMinus1, Cases) {
  EXPECT_TRUE(has_rank_n_minus_1(semigroup_closure(w3()), 3));
  EXPECT_EQ(find_rank_n_minus_1(semigroup_closure(w3()), 3)->witness, "c");
  EXPECT_FALSE(has_rank_n_minus_1(semigroup_closure(p3()), 3));
  EXPECT_FALSE(has_rank_n_minus_1(semigroup_closure(testing::constant_letter_dfa(3)), 3));
}

TEST(PermutationGroup, W3GeneratedByCycleAndTransposition) {
  const auto g = permutation_group(w3());
  EXPECT_EQ(g.order(), 6U);
  ASSERT_EQ(g.generators().size(), 2U);
  EXPECT_EQ(g.generators()[0].first, 'a');
  EXPECT_EQ(g.generators()[1].first, 'b');
}

TEST(PermutationGroup, NoPermutationLetters) {
  const auto g = permutation_group(testing::constant_letter_dfa(3));
  EXPECT_EQ(g.order(), 1U);
  EXPECT_TRUE(g.contains(Transformation::identity(3)));
  EXPECT_FALSE(is_set_transitive(g));
}

Dfa four_cycle() {
  // a is the 4-cycle; b is singular.
  return Dfa(4, "ab", {1, 0, 2, 0, 3, 0, 0, 0}, 0, StateSet(4, {0}));
}

TEST(PermutationGroup, CyclicOfOrderFour) {
  const auto g = permutation_group(four_cycle());
  EXPECT_EQ(g.order(), 4U);
  EXPECT_TRUE(is_k_set_transitive(g, 1));
  EXPECT_FALSE(is_k_set_transitive(g, 2));
  EXPECT_TRUE(is_k_set_transitive(g, 4));
  EXPECT_FALSE(is_set_transitive(g));
}

TEST(PermutationGroup, SymmetricGroupsAreSetTransitive) {
  const auto s3 = permutation_group(w3());
  for (std::size_t k = 1; k <= 3; ++k) EXPECT_TRUE(is_k_set_transitive(s3, k));
  EXPECT_TRUE(is_set_transitive(s3));
  EXPECT_TRUE(is_set_transitive(permutation_group(gen_perm_only(5, StateSet(5, {0})))));
}

TEST(PermutationGroup, ElementsMatchRankNClosureElements) {
  for (const Dfa& d : testing::property_corpus(40, 5, 3)) {
    const auto g = permutation_group(d);
    const auto s = semigroup_closure(d);
    for (const auto& p : g.elements())
      ASSERT_TRUE(p == Transformation::identity(d.size()) || s.contains(p));
    for (const auto& e : s.elements())
      if (e.map.is_permutation()) ASSERT_TRUE(g.contains(e.map));
  }
}

// Brute force over all subsets and group elements, then the k <-> n-k duality.
TEST(SetTransitivity, ComplementDualityAndBruteForce) {
  for (const Dfa& d : testing::property_corpus(60, 6, 3)) {
    const auto g = permutation_group(d);
    const std::size_t n = d.size();
    for (std::size_t k = 1; k + 1 <= n; ++k) {
      ASSERT_EQ(is_k_set_transitive(g, k), is_k_set_transitive(g, n - k));
      // Orbit of {0..k-1} via explicit group elements.
      const StateSet first = StateSet::from_mask(n, (std::uint64_t{1} << k) - 1);
      std::set<StateSet> orbit;
      for (const auto& p : g.elements()) orbit.insert(p.apply(first));
      std::size_t total = 0;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) total += std::popcount(m) == static_cast<int>(k);
      ASSERT_EQ(is_k_set_transitive(g, k), orbit.size() == total);
    }
  }
}

TEST(ContainsAllSingular, Cases) {
  EXPECT_TRUE(contains_all_singular(semigroup_closure(w3()), 3));
  EXPECT_FALSE(contains_all_singular(semigroup_closure(p3()), 3));
  const auto full4 = semigroup_closure(gen_full_tn(4, StateSet(4, {0})));
  EXPECT_EQ(full4.size(), 256U);
  std::size_t singular = 0;
  for (const auto& e : full4.elements()) singular += e.map.rank() < 4;
  EXPECT_EQ(singular, 256U - 24U);
  EXPECT_TRUE(contains_all_singular(full4, 4));
}

TEST(ContainsAllSingular, LimitEnforced) {
  const auto s = semigroup_closure(gen_perm_only(7, StateSet(7, {0})));
  try {
    contains_all_singular(s, 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LimitExceeded);
  }
}

}  // namespace
}  // namespace atomix

#include <gtest/gtest.h>

#include "atomix/atoms.hpp"
#include "atomix/error.hpp"
#include "atomix/generators.hpp"
#include "atomix/oracle.hpp"
#include "test_support.hpp"

namespace atomix {
namespace {

using testing::p3;
using testing::w3;

MinimalDfa minimal(const Dfa& d) { return MinimalDfa::from(d); }

TEST(EnumerateAtoms, W3HasAllEightSubsets) {
  const auto atoms = enumerate_atoms(minimal(w3()));
  EXPECT_EQ(atoms, all_subsets(3));
}

TEST(EnumerateAtoms, P3Singletons) {
  const auto atoms = enumerate_atoms(minimal(p3()));
  EXPECT_EQ(atoms, (std::vector<StateSet>{StateSet(3, {0}), StateSet(3, {1}), StateSet(3, {2})}));
}

TEST(EnumerateAtoms, UniversalLanguage) {
  const Dfa d(1, "ab", {0, 0}, 0, StateSet::full(1));
  EXPECT_EQ(enumerate_atoms(minimal(d)), std::vector<StateSet>{StateSet::full(1)});
}

TEST(EnumerateAtoms, FinalSetAlwaysPresent) {
  for (const Dfa& d : testing::property_corpus(60, 6, 3)) {
    const MinimalDfa md = minimal(d);
    const auto atoms = enumerate_atoms(md);
    ASSERT_TRUE(std::binary_search(atoms.begin(), atoms.end(), md.dfa().finals()));
  }
}

TEST(EnumerateAtoms, MatchesWordObservation) {
  for (const Dfa& d : testing::property_corpus(80, 4, 2)) {
    const MinimalDfa md = minimal(d);
    std::set<std::vector<bool>> enumerated;
    for (const auto& s : enumerate_atoms(md)) enumerated.insert(testing::to_bits(s));
    // 16 atoms at most, so words up to length 16 reach all of them; 2 letters
    // keep that affordable.
    ASSERT_EQ(testing::observed_atoms(md.dfa(), 15), enumerated) << serialize_dfa(d);
  }
}

TEST(AtomComplexity, W3) {
  const MinimalDfa md = minimal(w3());
  std::vector<bool> s0{true, false, false};
  EXPECT_EQ(testing::monoid_atom_complexity(w3(), s0), 10U);
  EXPECT_EQ(atom_complexity(md, StateSet(3, {0})), 10U);
  EXPECT_EQ(testing::monoid_atom_complexity(w3(), {true, true, true}), 7U);
  EXPECT_EQ(atom_complexity(md, StateSet::full(3)), 7U);
  EXPECT_EQ(atom_complexity(md, StateSet(3, {0, 1})), 10U);
}

TEST(AtomComplexity, NotAnAtom) {
  try {
    atom_complexity(minimal(p3()), StateSet(3, {0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAnAtom);
  }
}

TEST(AtomComplexity, AgreesWithMonoidOracleAndBound) {
  for (const Dfa& d : testing::property_corpus(120, 5, 3)) {
    const MinimalDfa md = minimal(d);
    const std::size_t n = md.size();
    for (const auto& s : enumerate_atoms(md)) {
      const std::size_t c = atom_complexity(md, s);
      ASSERT_EQ(c, testing::monoid_atom_complexity(md.dfa(), testing::to_bits(s))) << serialize_dfa(md.dfa()) << s.to_string();
      ASSERT_LE(BigInt(c), psi(static_cast<long long>(n), static_cast<long long>(s.size())));
    }
  }
}

TEST(IsMaximalAtom, Cases) {
  EXPECT_TRUE(is_maximal_atom(minimal(w3()), StateSet(3, {0})));
  EXPECT_LT(atom_complexity(minimal(p3()), StateSet(3, {0})), 10U);
  EXPECT_FALSE(is_maximal_atom(minimal(p3()), StateSet(3, {0})));
  const Dfa universal(1, "a", {0}, 0, StateSet::full(1));
  EXPECT_EQ(atom_complexity(minimal(universal), StateSet::full(1)), 1U);
  EXPECT_TRUE(is_maximal_atom(minimal(universal), StateSet::full(1)));
}

TEST(IsMaximallyAtomic, Cases) {
  EXPECT_TRUE(is_maximally_atomic(minimal(w3())));
  EXPECT_FALSE(is_maximally_atomic(minimal(p3())));
  EXPECT_TRUE(is_maximally_atomic(minimal(gen_full_tn(4, StateSet(4, {0})))));
  EXPECT_THROW(is_maximally_atomic(minimal(Dfa(1, "a", {0}, 0, StateSet(1)))), Error);
}

TEST(IsMaximallyAtomic, TwoStates) {
  // a swaps, b collapses both states onto 1: all of T_2.
  const Dfa d(2, "ab", {1, 1, 0, 1}, 0, StateSet(2, {0}));
  EXPECT_TRUE(is_maximally_atomic(minimal(d)));
}

TEST(AtomReports, W3Table) {
  const auto table = atom_reports(minimal(w3()));
  ASSERT_EQ(table.size(), 8U);
  std::vector<std::size_t> complexities;
  std::vector<std::size_t> sizes;
  for (const auto& r : table) {
    ASSERT_TRUE(r.is_atom);
    ASSERT_TRUE(r.maximal);
    complexities.push_back(*r.complexity);
    sizes.push_back(r.subset.size());
  }
  EXPECT_EQ(complexities, (std::vector<std::size_t>{7, 10, 10, 10, 10, 10, 10, 7}));
  EXPECT_EQ(sizes, (std::vector<std::size_t>{0, 1, 1, 1, 2, 2, 2, 3}));
}

TEST(AtomReports, ParallelMatchesSequential) {
  for (const Dfa& d : testing::property_corpus(20, 5, 3)) {
    const MinimalDfa md = minimal(d);
    const auto a = atom_reports(md, {kDefaultDpsMaxN, false});
    const auto b = atom_reports(md, {kDefaultDpsMaxN, true});
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      ASSERT_EQ(a[i].subset, b[i].subset);
      ASSERT_EQ(a[i].complexity, b[i].complexity);
      ASSERT_EQ(a[i].maximal, b[i].maximal);
    }
  }
}

TEST(AtomReports, MaximalImpliesAtomAtBound) {
  for (const Dfa& d : testing::property_corpus(40, 5, 3))
    for (const auto& r : atom_reports(minimal(d)))
      if (r.maximal) {
        ASSERT_TRUE(r.is_atom);
        ASSERT_EQ(BigInt(*r.complexity), r.bound);
      }
}

TEST(AtomProperties, NonemptinessAgreesWithSupportAutomaton) {
  for (const Dfa& d : testing::property_corpus(60, 5, 3)) {
    const MinimalDfa md = minimal(d);
    const auto atoms = enumerate_atoms(md);
    for (const auto& s : all_subsets(md.size())) {
      const bool atom = std::binary_search(atoms.begin(), atoms.end(), s);
      ASSERT_EQ(atom, build_support_automaton(md.dfa(), s).has_final()) << s.to_string();
    }
  }
}

TEST(AtomProperties, ReversalIdentity) {
  for (const Dfa& d : testing::property_corpus(100, 6, 3)) {
    const MinimalDfa md = minimal(d);
    ASSERT_EQ(enumerate_atoms(md).size(), reversal_state_count(md.dfa()));
  }
}

}  // namespace
}  // namespace atomix

#include <gtest/gtest.h>

#include "eliq/io.hpp"
#include "eliq/testkit.hpp"

using namespace eliq;

TEST(BruteForce, RoleHierarchyFrontierIsComplete) {
  auto o = parse_ontology("A sub some r\nsome r sub A\nr rsub s\n");
  auto q = parse_cq("q(x0) :- A(x0), B(x0)");
  auto f = frontier_r(o, q);
  auto check = bruteforce_frontier_check(o, q, f.members, 4);
  EXPECT_TRUE(check.ok);
  EXPECT_GT(check.generalizations, 100u);
  // without p1 the generalisation B(x0) is no longer covered
  auto partial = bruteforce_frontier_check(o, q, {f.members[1]}, 2);
  ASSERT_FALSE(partial.ok);
  EXPECT_EQ(partial.reason, "uncovered");
  EXPECT_EQ(*partial.counterexample, parse_cq("q(x0) :- B(x0)"));
}

TEST(BruteForce, QueryItselfIsNotAFrontier) {
  auto o = parse_ontology("A sub B\n");
  auto q = parse_cq("q(x0) :- A(x0), B(x0)");
  auto check = bruteforce_frontier_check(o, q, {q}, 1);
  ASSERT_FALSE(check.ok);
  EXPECT_EQ(check.reason, "not_strict");
}

TEST(MinFrontier, ConjunctiveFamilyDoubles) {
  for (int n : {1, 2, 3}) {
    auto f = fixture("thm3_conjunctive", n);
    std::set<std::string> sig;
    for (const auto& a : f.query.concept_atoms()) sig.insert(a.concept_name);
    std::set<std::string> q = sig;
    EXPECT_EQ(bruteforce_min_frontier_aq(f.conjunctive, q, sig), std::size_t{1} << n) << n;
  }
  EXPECT_EQ(bruteforce_min_frontier_aq({}, {"A"}, {"A"}), 1u);
}

TEST(Fixtures, FunctionalZigzagFamily) {
  for (int i = 1; i <= 3; ++i) {
    auto f = fixture("thm4_dllitef", i);
    EXPECT_EQ(dialect_of(f.ontology), Dialect::F);
    Reasoner r(f.ontology);
    auto a = parse_cq("q(x1) :- A(x1)");
    EXPECT_TRUE(r.contained(a, f.query)) << i;
    EXPECT_FALSE(r.contained(f.query, a)) << i;
  }
  EXPECT_EQ(fixture("thm4_dllitef", 2).query,
            parse_cq("q(x1) :- r(x1,x2), s(x2,y), s(x2p,y), r(x1p,x2p), A(x1p)"));
}

TEST(Fixtures, DisjointnessOntology) {
  auto f = fixture("thm9_disjointness", 1);
  ASSERT_EQ(f.ontology.concept_disjointness.size(), 1u);
  EXPECT_EQ(f.ontology.concept_disjointness[0].first.name, "A1");
  EXPECT_EQ(f.ontology.concept_disjointness[0].second.name, "A1p");
}

TEST(Fixtures, PrimeCycleHypotheses) {
  for (int n : {2, 3, 5, 7}) {
    auto f = fixture("thm10_hypotheses", n);
    Reasoner r(f.ontology);
    ASSERT_EQ(f.related.size(), 1u);
    EXPECT_TRUE(r.contained(f.related[0], f.query)) << n;
  }
  EXPECT_THROW(fixture("thm10_hypotheses", 4), Error);
  EXPECT_THROW(fixture("nope", 1), Error);
}

#include <gtest/gtest.h>

#include "eliq/frontier.hpp"
#include "eliq/io.hpp"
#include "eliq/random.hpp"
#include "eliq/testkit.hpp"

using namespace eliq;

namespace {

const char* kHierarchy = "A sub some r\nsome r sub A\nr rsub s\n";

bool matches(const Reasoner& r, const std::vector<CQ>& members, const CQ& expected) {
  for (const auto& m : members)
    if (r.equivalent(m, expected)) return true;
  return false;
}

}  // namespace

TEST(FrontierR, DropConceptAtoms) {
  auto o = parse_ontology(kHierarchy);
  auto q = parse_cq("q(x0) :- A(x0), B(x0)");
  auto f0 = generalize_r(o, q, "x0");
  ASSERT_EQ(f0.size(), 2u);
  EXPECT_EQ(f0[0].query, parse_cq("q(x0) :- B(x0)"));
  EXPECT_EQ(f0[1].query, parse_cq("q(x0) :- A(x0)"));
  EXPECT_EQ(f0[0].down.at("x0"), "x0");
}

TEST(FrontierR, ConjunctionUnderRoleHierarchy) {
  auto o = parse_ontology(kHierarchy);
  auto f = frontier_r(o, parse_cq("q(x0) :- A(x0), B(x0)"));
  ASSERT_EQ(f.members.size(), 2u);
  Reasoner r(o);
  auto p1 = parse_cq("q(x0) :- B(x0), s(x0,z), r(x1,z), A(x1), B(x1)");
  auto p2 = parse_cq("q(x0) :- A(x0), r(x0,z1), r(x1,z1), A(x1), B(x1), s(x0,z2), r(x2,z2), A(x2), B(x2)");
  EXPECT_TRUE(r.equivalent(f.members[0], p1)) << to_string(f.members[0]);
  EXPECT_TRUE(r.equivalent(f.members[1], p2)) << to_string(f.members[1]);
}

TEST(FrontierR, ExistentialUnderRoleInclusion) {
  auto o = parse_ontology("r rsub s\n");
  auto q = parse_cq("q(x0) :- r(x0,y), A(y)");
  auto fy = generalize_r(o, q, "y");
  ASSERT_EQ(fy.size(), 1u);
  EXPECT_TRUE(fy[0].query.concept_atoms().empty());
  auto f = frontier_r(o, q);
  Reasoner r(o);
  auto core = minimal_core(r, f.members);
  ASSERT_EQ(core.size(), 1u);
  auto p = parse_cq(
      "q(x0) :- s(x0,y2), A(y2), r(x0,y1), r(x1,y2), r(x1,u1), A(u1), r(x2,y1), r(x2,u2), A(u2)");
  EXPECT_TRUE(r.equivalent(core[0], p)) << to_string(core[0]);
}

TEST(FrontierR, EmptyOntology) {
  auto f = frontier_r(Ontology{}, parse_cq("q(x0) :- A(x0)"));
  ASSERT_EQ(f.members.size(), 1u);
  EXPECT_EQ(f.members[0], parse_cq("q(x0) :- top(x0)"));
}

TEST(FrontierR, LeafBlockedByIncomingRole) {
  auto o = parse_ontology("some r- sub A\n");
  auto q = parse_cq("q(x0) :- r(x0,y), A(y)");
  EXPECT_TRUE(generalize_r(o, q, "y").empty());
}

TEST(FrontierF, SharedFunctionalSuccessor) {
  auto o = parse_ontology("func s\n");
  auto q = parse_cq("q(x0) :- r(x0,y), s(x0,z), A(z)");
  auto f = frontier_f(o, q);
  Reasoner r(o);
  auto p = parse_cq(
      "q(x0) :- r(x0,y), s(x0,z), s(x0p,z), r(x0p,y1), r(x1,y1), s(x1,z1), A(z1), "
      "r(x2,y), s(x2,z2), A(z2), r(x2,y2)");
  EXPECT_TRUE(matches(r, f.members, p));
  for (const auto& m : f.members) {
    EXPECT_FALSE(r.contained(m, q));
    EXPECT_TRUE(r.satisfiable(m));
  }
}

// Dropping A(x0) looks allowed locally, but A is forced back onto x0 by the
// requirement at x1 through the functional role r.
TEST(FrontierF, FunctionalRequirementBlocksDrop) {
  auto o = parse_ontology("some s- sub A\nA sub some r . A\ndisj B some r-\nrdisj r- r\nfunc r\nfunc s-\n");
  auto q = parse_cq("q(x0) :- r(x1,x0), A(x1), B(x1), s(x0,x2), A(x2)");
  auto f = frontier_f(o, q);
  Reasoner r(o);
  for (const auto& m : f.members) EXPECT_FALSE(r.contained(m, q)) << to_string(m);
  EXPECT_TRUE(bruteforce_frontier_check(o, q, f.members, 3).ok);
}

TEST(FrontierF, RejectsUnrestrictedOntology) {
  auto o = parse_ontology("A sub some r\nsome r- sub some r\nsome r sub some s\nfunc r-\n");
  try {
    frontier_f(o, parse_cq("q(x) :- A(x)"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "not_f_restricted");
    EXPECT_NE(std::string(e.what()).find("some r- sub some r"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("func r-"), std::string::npos);
  }
}

TEST(FrontierF, FunctionalChoiceIsEnumerated) {
  auto o = parse_ontology("func r\n");
  auto q = parse_cq("q(x0) :- r(x0,y), A(y), B(y)");
  auto f0 = generalize_f(o, q, "x0");
  EXPECT_EQ(f0.size(), 2u);
  auto leaf = parse_cq("q(x0) :- r(x0,y)");
  auto removed = generalize_f(o, leaf, "x0");
  ASSERT_EQ(removed.size(), 1u);
  EXPECT_EQ(removed[0].query, parse_cq("q(x0) :- top(x0)"));
}

TEST(Frontier, NonNormalOntologyIsTranslatedBack) {
  auto o = parse_ontology("A sub some r . (B & some s)\n");
  auto q = parse_cq("q(x0) :- A(x0)");
  auto f = compute_frontier(o, q);
  for (const auto& m : f.members)
    for (const auto& c : m.signature().concepts) EXPECT_NE(c.rfind("_X", 0), 0u) << to_string(m);
  Reasoner r(o);
  // the generalisation forced by the ontology is covered by a member
  auto g = parse_cq("q(x0) :- r(x0,y), B(y), s(y,z)");
  EXPECT_TRUE(r.contained(q, g) && !r.contained(g, q));
  bool covered = false;
  for (const auto& m : f.members) covered |= r.contained(m, g);
  EXPECT_TRUE(covered);
}

namespace {

void random_batch(Dialect dialect, int count, unsigned seed, int bound) {
  Rng rng(seed);
  int done = 0;
  while (done < count) {
    RandomOntologyOptions opts;
    opts.dialect = dialect;
    opts.normal_form = done % 2 == 0;
    opts.concept_disjointness = 0.15;
    auto o = random_ontology(rng, opts);
    auto q = random_eliq(rng, small_signature(2, 2), 3);
    Reasoner r(o);
    if (!r.satisfiable(q)) continue;
    ++done;
    auto f = compute_frontier(o, q);
    ASSERT_LE(static_cast<double>(f.total_vars()), frontier_size_bound(o, q));
    for (const auto& m : f.members) {
      ASSERT_TRUE(m.is_eliq()) << to_string(m);
      ASSERT_TRUE(r.satisfiable(m)) << to_string(m);
    }
    auto check = bruteforce_frontier_check(o, q, f.members, bound);
    ASSERT_TRUE(check.ok) << to_string(o) << to_string(q) << "\nuncovered: " << to_string(*check.counterexample);
    // the inclusion-minimal part does not depend on the tie order
    FrontierOptions rev;
    rev.reverse_order = true;
    auto g = compute_frontier(o, q, rev);
    auto c1 = minimal_core(r, f.members), c2 = minimal_core(r, g.members);
    ASSERT_EQ(c1.size(), c2.size());
    for (const auto& a : c1) {
      bool found = false;
      for (const auto& b : c2) found = found || r.equivalent(a, b);
      ASSERT_TRUE(found) << to_string(a);
    }
  }
}

}  // namespace

TEST(FrontierProperties, RandomRoleInclusionOntologies) { random_batch(Dialect::R, 60, 101, 4); }
TEST(FrontierProperties, RandomFunctionalOntologies) { random_batch(Dialect::FRestricted, 60, 202, 4); }

#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eliq/frontier.hpp"
#include "eliq/reasoner.hpp"

namespace eliq {

struct FrontierCheck {
  bool ok = true;
  // "uncovered": a generalisation no member covers; "not_generalizing" or
  // "not_strict": a member failing the first or second condition
  std::string reason;
  std::optional<CQ> counterexample;
  std::size_t candidates = 0;        // enumerated queries
  std::size_t generalizations = 0;   // of which strictly more general than q
};

// Checks the members against the frontier conditions, the covering one
// against every ELIQ over sig(o) and sig(q) with at most `bound` variables.
FrontierCheck bruteforce_frontier_check(const Ontology& o, const CQ& q, const std::vector<CQ>& members,
                                        int bound);

// Rules A1 & ... & An sub A over concept names.
using ConjunctiveRule = std::pair<std::set<std::string>, std::string>;

std::set<std::string> conjunctive_closure(const std::vector<ConjunctiveRule>& rules, std::set<std::string> names);

// Least number of conjunctions of concept names over `sig` that form a
// frontier of the conjunction `q` among such queries.
std::size_t bruteforce_min_frontier_aq(const std::vector<ConjunctiveRule>& rules, const std::set<std::string>& q,
                                       const std::set<std::string>& sig);

struct Fixture {
  Ontology ontology;
  std::vector<ConjunctiveRule> conjunctive;  // thm3_conjunctive only
  CQ query;
  std::vector<CQ> related;  // thm10_hypotheses: the query every member contains
};

// Families: thm3_conjunctive, thm4_dllitef, thm9_disjointness,
// thm10_hypotheses (n prime).
Fixture fixture(const std::string& name, int n);

}  // namespace eliq

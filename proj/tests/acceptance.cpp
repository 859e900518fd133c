// One line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "eliq/characterize.hpp"
#include "eliq/frontier.hpp"
#include "eliq/io.hpp"
#include "eliq/learner.hpp"
#include "eliq/random.hpp"
#include "eliq/testkit.hpp"
#include "oracles.hpp"

using namespace eliq;
using Clock = std::chrono::steady_clock;

namespace {

// Wall-clock limits in seconds, per criterion.
constexpr double kGoldenLimit = 1.0;
constexpr double kFrontierBatchLimit = 600.0;
constexpr double kRejectionLimit = 5.0;
constexpr double kMinFrontierLimit = 60.0;
constexpr double kLearnMedianLimit = 2.0;
constexpr double kNormalFormLimit = 120.0;
constexpr double kUniqueLimit = 600.0;
constexpr double kKernelLimit = 60.0;

struct Verdict {
  bool pass = true;
  std::string detail;
};

Verdict fail(const std::string& why) { return {false, why}; }

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

CQ q(const std::string& s) { return parse_cq(s); }

const char* kHierarchy = "A sub some r\nsome r sub A\nr rsub s\n";

Verdict golden_conjunction() {
  auto o = parse_ontology(kHierarchy);
  auto f = frontier_r(o, q("q(x0) :- A(x0), B(x0)"));
  if (f.members.size() != 2) return fail(std::to_string(f.members.size()) + " members");
  Reasoner r(o);
  std::vector<CQ> expected{q("q(x0) :- B(x0), s(x0,z), r(x1,z), A(x1), B(x1)"),
                           q("q(x0) :- A(x0), r(x0,z1), r(x1,z1), A(x1), B(x1), s(x0,z2), r(x2,z2), A(x2), B(x2)")};
  bool direct = r.equivalent(f.members[0], expected[0]) && r.equivalent(f.members[1], expected[1]);
  bool swapped = r.equivalent(f.members[0], expected[1]) && r.equivalent(f.members[1], expected[0]);
  if (!direct && !swapped) return fail("members do not match the expected pair");
  return {true, "2 members, matched by mutual containment"};
}

Verdict golden_existential() {
  auto o = parse_ontology("r rsub s\n");
  auto f = frontier_r(o, q("q(x0) :- r(x0,y), A(y)"));
  Reasoner r(o);
  auto core = minimal_core(r, f.members);
  if (core.size() != 1) return fail("minimal core has " + std::to_string(core.size()) + " members");
  auto p = q("q(x0) :- s(x0,y2), A(y2), r(x0,y1), r(x1,y2), r(x1,u1), A(u1), r(x2,y1), r(x2,u2), A(u2)");
  if (!r.equivalent(core[0], p)) return fail("core member " + to_string(core[0]));
  return {true, std::to_string(f.members.size()) + " members, core of 1 equivalent to the expected query"};
}

Verdict golden_functional() {
  auto o = parse_ontology("func s\n");
  auto query = q("q(x0) :- r(x0,y), s(x0,z), A(z)");
  auto f = frontier_f(o, query);
  Reasoner r(o);
  auto p = q("q(x0) :- r(x0,y), s(x0,z), s(x0p,z), r(x0p,y1), r(x1,y1), s(x1,z1), A(z1), "
             "r(x2,y), s(x2,z2), A(z2), r(x2,y2)");
  bool found = false;
  for (const auto& m : f.members) {
    if (r.contained(m, query)) return fail("member contained in the query: " + to_string(m));
    found = found || r.equivalent(m, p);
  }
  if (!found) return fail("no member equivalent to the expected query");
  return {true, std::to_string(f.members.size()) + " members, one equivalent to the expected query"};
}

Verdict frontier_batch() {
  const int per_dialect = 200;
  std::size_t members = 0;
  for (auto [dialect, seed] : {std::pair{Dialect::R, 4001u}, std::pair{Dialect::FRestricted, 4002u}}) {
    Rng rng(seed);
    for (int done = 0; done < per_dialect;) {
      RandomOntologyOptions opts;
      opts.dialect = dialect;
      opts.normal_form = done % 2 == 0;
      opts.concept_disjointness = 0.15;
      opts.role_disjointness = 0.15;
      auto o = random_ontology(rng, opts);
      auto query = random_eliq(rng, small_signature(2, 2), 3);
      Reasoner r(o);
      if (!r.satisfiable(query)) continue;
      ++done;
      auto f = compute_frontier(o, query);
      members += f.members.size();
      auto check = bruteforce_frontier_check(o, query, f.members, 4);
      if (!check.ok)
        return fail(check.reason + " for " + to_string(query) + " under\n" + to_string(o) +
                    (check.counterexample ? "counterexample " + to_string(*check.counterexample) : ""));
    }
  }
  return {true, "400 instances, " + std::to_string(members) + " members, all checks ok at bound 4"};
}

Verdict rejection() {
  auto o = parse_ontology("A sub some r\nsome r- sub some r\nsome r sub some s\nfunc r-\n");
  auto a = q("q(x0) :- A(x0)");
  auto code = [&](const std::function<void()>& f) -> std::string {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return "accepted";
  };
  SimulatedOracle oracle(o, a);
  auto c1 = code([&] { frontier_f(o, a); });
  auto c2 = code([&] { learn(o, oracle, a, 10); });
  if (c1 != "not_f_restricted" || c2 != "not_f_restricted") return fail("frontier_f: " + c1 + ", learn: " + c2);
  for (int i = 1; i <= 3; ++i) {
    auto fx = fixture("thm4_dllitef", i);
    Reasoner r(fx.ontology);
    auto ax = q("q(x1) :- A(x1)");
    if (!r.contained(ax, fx.query) || r.contained(fx.query, ax))
      return fail("containment pattern broken at i = " + std::to_string(i));
  }
  return {true, "both rejected with not_f_restricted; q_1..q_3 strictly above A(x)"};
}

Verdict min_frontier() {
  std::ostringstream out;
  for (auto [n, expected] : {std::pair{2, 4u}, std::pair{3, 8u}}) {
    auto fx = fixture("thm3_conjunctive", n);
    std::set<std::string> sig;
    for (const auto& a : fx.query.concept_atoms()) sig.insert(a.concept_name);
    auto size = bruteforce_min_frontier_aq(fx.conjunctive, sig, sig);
    out << "n=" << n << ": " << size << " ";
    if (size != expected) return fail(out.str());
  }
  return {true, out.str()};
}

Verdict learning() {
  std::vector<double> times;
  std::size_t max_queries = 0;
  for (auto [dialect, seed] : {std::pair{Dialect::R, 7001u}, std::pair{Dialect::FRestricted, 7002u}}) {
    Rng rng(seed);
    for (int done = 0; done < 100;) {
      RandomOntologyOptions opts;
      opts.dialect = dialect;
      opts.role_disjointness = 0.2;
      auto o = random_ontology(rng, opts);
      auto target = random_eliq(rng, small_signature(2, 2), 5);
      Reasoner r(o);
      if (!r.satisfiable(target)) continue;
      ++done;
      auto start = Clock::now();
      SimulatedOracle oracle(o, target);
      auto budget = default_budget(o, target);
      auto trace = learn(o, oracle, seed_query(o, target.signature()), budget);
      times.push_back(seconds_since(start));
      auto h = trace.result();
      if (!h) return fail("budget exceeded for " + to_string(target) + " under\n" + to_string(o));
      if (!r.equivalent(*h, target)) return fail("learned " + to_string(*h) + " for " + to_string(target));
      if (trace.membership_queries > budget || trace.membership_queries != oracle.query_count())
        return fail("query count out of budget");
      max_queries = std::max(max_queries, trace.membership_queries);
    }
  }
  std::sort(times.begin(), times.end());
  double median = times[times.size() / 2];
  if (median > kLearnMedianLimit) return fail("median run " + std::to_string(median) + " s");
  std::ostringstream out;
  out << "200 targets learned, at most " << max_queries << " membership queries, median " << median << " s";
  return {true, out.str()};
}

Verdict normal_form_reduction() {
  int checked_abox = 0;
  for (auto [dialect, seed] : {std::pair{Dialect::R, 8001u}, std::pair{Dialect::FRestricted, 8002u}}) {
    Rng rng(seed);
    for (int done = 0; done < 25;) {
      RandomOntologyOptions opts;
      opts.dialect = dialect;
      opts.normal_form = false;
      auto o = random_ontology(rng, opts);
      if (is_normal_form(o)) continue;
      auto target = random_eliq(rng, small_signature(2, 2), 4);
      Reasoner r(o);
      if (!r.satisfiable(target)) continue;
      ++done;
      auto seed_q = seed_query(o, target.signature());
      auto nf = normalize(o, seed_q.signature());
      SimulatedOracle inner(o, target);
      std::string problem;
      CallbackOracle oracle([&](const ABox& a, const std::string& ind) {
        ++checked_abox;
        for (const auto& c : a.concept_assertions())
          if (nf.fresh.count(c.concept_name)) problem = "fresh name in " + to_string(a);
        if (!respects_functionality(o, a)) problem = "functionality violated in " + to_string(a);
        return inner.answer(a, ind);
      });
      auto budget = default_budget(o, target);
      auto reduced = learn_with_normal_form(o, oracle, seed_q, budget);
      if (!problem.empty()) return fail(problem);
      SimulatedOracle direct_oracle(nf.ontology, target);
      auto direct = learn(nf.ontology, direct_oracle, seed_q, budget);
      if (!reduced.result() || !direct.result()) return fail("budget exceeded for " + to_string(target));
      Reasoner normal(nf.ontology);
      if (!normal.equivalent(*reduced.result(), *direct.result()) || !r.equivalent(*reduced.result(), target))
        return fail("hypotheses differ for " + to_string(target) + " under\n" + to_string(o));
    }
  }
  return {true, "50 ontologies, " + std::to_string(checked_abox) + " forwarded ABoxes checked"};
}

Verdict uniqueness() {
  std::size_t candidates = 0;
  for (auto [dialect, seed] : {std::pair{Dialect::R, 9001u}, std::pair{Dialect::FRestricted, 9002u}}) {
    Rng rng(seed);
    for (int done = 0; done < 50;) {
      RandomOntologyOptions opts;
      opts.dialect = dialect;
      opts.normal_form = done % 2 == 0;
      opts.concept_disjointness = 0.15;
      auto o = random_ontology(rng, opts);
      auto query = random_eliq(rng, small_signature(2, 2), 3);
      Reasoner r(o);
      if (!r.satisfiable(query)) continue;
      ++done;
      auto e = characterize(o, query);
      auto v = verify_unique(o, query, e, static_cast<int>(query.vars().size()) + 1);
      candidates += v.candidates;
      if (!v.ok) return fail(to_string(*v.counterexample) + " also fits " + to_string(query));
    }
  }
  return {true, "100 instances, " + std::to_string(candidates) + " candidates enumerated"};
}

CQ basic_query(const BasicConcept& b) {
  CQ out("x0");
  if (b.kind == BasicConcept::Kind::Atomic) out.add_concept(b.name, "x0");
  if (b.kind == BasicConcept::Kind::Exists) out.add_role(b.role, "x0", "y");
  return out;
}

Verdict kernel() {
  Rng rng(10001);
  auto sig = small_signature(2, 2);
  std::vector<BasicConcept> basics{BasicConcept::top()};
  for (const auto& a : sig.concepts) basics.push_back(BasicConcept::atomic(a));
  for (const auto& s : sig.roles)
    for (bool inv : {false, true}) basics.push_back(BasicConcept::exists(Role(s, inv)));
  std::uniform_int_distribution<std::size_t> pick(0, basics.size() - 1);
  for (int done = 0; done < 500;) {
    RandomOntologyOptions opts;
    opts.dialect = done % 2 ? Dialect::R : Dialect::FRestricted;
    opts.normal_form = done % 3 == 0;
    auto o = random_ontology(rng, opts);
    auto b1 = basics[pick(rng)], b2 = basics[pick(rng)];
    Reasoner r(o);
    if (!r.satisfiable(b1)) continue;
    ++done;
    if (r.entails(b1, b2) != r.contained(basic_query(b1), basic_query(b2)))
      return fail(b1.str() + " vs " + b2.str() + " under\n" + to_string(o));
  }
  Reasoner empty{Ontology{}};
  std::uniform_int_distribution<int> coin(0, 3);
  for (int i = 0; i < 500; ++i) {
    // random ABox over three individuals, possibly cyclic
    ABox a;
    std::vector<std::string> inds{"a", "b", "c"};
    for (const auto& x : inds) {
      a.add_individual(x);
      for (const auto& c : sig.concepts)
        if (coin(rng) == 0) a.add_concept(c, x);
      for (const auto& y : inds)
        for (const auto& s : sig.roles)
          if (coin(rng) == 0 && coin(rng) < 2) a.add_role(Role(s), x, y);
    }
    auto query = random_eliq(rng, sig, 3);
    for (const auto& x : inds)
      if (empty.certain_answer(a, query, x) != oracle::brute_force_answer(a, query, x))
        return fail(to_string(query) + " at " + x + " over\n" + to_string(a));
  }
  return {true, "500 basic pairs and 500 answer checks agree"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Verdict()> run;
  };
  std::vector<Criterion> criteria{
      {1, "frontier of a conjunction under a role hierarchy", kGoldenLimit, golden_conjunction},
      {2, "frontier of an existential under a role inclusion", kGoldenLimit, golden_existential},
      {3, "frontier with a functional role", kGoldenLimit, golden_functional},
      {4, "random frontiers against brute force", kFrontierBatchLimit, frontier_batch},
      {5, "rejection of unrestricted functionality", kRejectionLimit, rejection},
      {6, "minimum frontier size of the conjunctive family", kMinFrontierLimit, min_frontier},
      {7, "learning end to end", 1e9, learning},
      {8, "normal-form reduction of the learner", kNormalFormLimit, normal_form_reduction},
      {9, "unique characterisation", kUniqueLimit, uniqueness},
      {10, "kernel cross-checks", kKernelLimit, kernel},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    double t = seconds_since(start);
    if (v.pass && t > c.limit) v = fail("took " + std::to_string(t) + " s, limit " + std::to_string(c.limit) + " s");
    failures += !v.pass;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << t;
    std::cout << "criterion " << c.id << " " << (v.pass ? "PASS" : "FAIL") << " [" << time.str() << " s] " << c.name
              << ": " << v.detail << std::endl;
  }
  return failures ? 1 : 0;
}

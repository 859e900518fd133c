#include "eliq/testkit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "eliq/io.hpp"

namespace eliq {

namespace {

const std::vector<CQ>& enumeration(const Signature& sig, int bound) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, std::vector<CQ>> cache;
  std::string key;
  for (const auto& c : sig.concepts) key += c + ",";
  key += "|";
  for (const auto& r : sig.roles) key += r + ",";
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = cache.try_emplace({key, bound});
  if (fresh) it->second = enumerate_eliqs(sig, bound);
  return it->second;
}

}  // namespace

FrontierCheck bruteforce_frontier_check(const Ontology& o, const CQ& q, const std::vector<CQ>& members,
                                        int bound) {
  Reasoner r(o);
  Signature sig = o.signature();
  sig.merge(q.signature());
  auto uq = r.model(q.to_abox());
  std::vector<UniversalModel> uf;
  FrontierCheck out;
  auto fail = [&](const char* reason, const CQ& witness) {
    out.ok = false;
    out.reason = reason;
    out.counterexample = witness;
    return out;
  };
  for (const auto& m : members) {
    if (!r.satisfiable(m) || !uq.entails(m, q.answer_var())) return fail("not_generalizing", m);
    uf.push_back(r.model(m.to_abox()));
    if (uf.back().entails(q, m.answer_var())) return fail("not_strict", m);
  }
  for (const auto& cand : enumeration(sig, bound)) {
    ++out.candidates;
    if (!uq.entails(cand, q.answer_var())) continue;
    if (r.certain_answer(cand.to_abox(), q, cand.answer_var())) continue;
    ++out.generalizations;
    bool covered = false;
    for (std::size_t i = 0; i < members.size() && !covered; ++i)
      covered = uf[i].entails(cand, members[i].answer_var());
    if (!covered) return fail("uncovered", cand);
  }
  return out;
}

std::set<std::string> conjunctive_closure(const std::vector<ConjunctiveRule>& rules, std::set<std::string> names) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [lhs, rhs] : rules)
      if (!names.count(rhs) && std::includes(names.begin(), names.end(), lhs.begin(), lhs.end())) {
        names.insert(rhs);
        changed = true;
      }
  }
  return names;
}

std::size_t bruteforce_min_frontier_aq(const std::vector<ConjunctiveRule>& rules, const std::set<std::string>& q,
                                       const std::set<std::string>& sig) {
  std::vector<std::string> names(sig.begin(), sig.end());
  if (names.size() > 20) throw Error("too_large", "signature too large for exhaustive search");
  const auto full = conjunctive_closure(rules, q);
  auto subset = [&](std::size_t mask) {
    std::set<std::string> s;
    for (std::size_t i = 0; i < names.size(); ++i)
      if (mask >> i & 1) s.insert(names[i]);
    return s;
  };
  auto below = [](const std::set<std::string>& a, const std::set<std::string>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  // p is contained in p' iff p' is a subset of the closure of p
  std::vector<std::set<std::string>> generalizations, closures;
  for (std::size_t mask = 0; mask < (std::size_t{1} << names.size()); ++mask) {
    auto s = subset(mask);
    auto c = conjunctive_closure(rules, s);
    if (!below(s, full) || below(full, c)) continue;  // needs q in p, p not in q
    generalizations.push_back(s);
    closures.push_back(c);
  }
  const std::size_t n = generalizations.size();
  std::vector<std::vector<std::size_t>> covers(n);  // target -> candidates covering it
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t c = 0; c < n; ++c)
      if (below(generalizations[t], closures[c])) covers[t].push_back(c);

  std::size_t best = n;
  std::vector<int> hit(n, 0);
  std::function<void(std::size_t)> search = [&](std::size_t used) {
    if (used >= best) return;
    std::size_t pick = n;
    for (std::size_t t = 0; t < n; ++t)
      if (!hit[t] && (pick == n || covers[t].size() < covers[pick].size())) pick = t;
    if (pick == n) {
      best = used;
      return;
    }
    for (std::size_t c : covers[pick]) {
      std::vector<std::size_t> newly;
      for (std::size_t t = 0; t < n; ++t)
        if (!hit[t] && below(generalizations[t], closures[c])) newly.push_back(t);
      for (auto t : newly) hit[t] = 1;
      search(used + 1);
      for (auto t : newly) hit[t] = 0;
    }
  };
  search(0);
  return best;
}

namespace {

bool prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Ontology thm4_ontology() { return parse_ontology("A sub some r\nsome r- sub some r\nsome r sub some s\nfunc r-\n"); }

// r-chain x1..xn ending in s(xn,y), met by s(x'n,y) of a second chain whose
// start carries A
void zigzag(CQ& q, int n) {
  auto x = [](int i) { return "x" + std::to_string(i); };
  auto xp = [](int i) { return "x" + std::to_string(i) + "p"; };
  for (int i = 1; i < n; ++i) {
    q.add_role(Role("r"), x(i), x(i + 1));
    q.add_role(Role("r"), xp(i), xp(i + 1));
  }
  q.add_role(Role("s"), x(n), "y");
  q.add_role(Role("s"), xp(n), "y");
  q.add_concept("A", xp(1));
}

}  // namespace

Fixture fixture(const std::string& name, int n) {
  if (n < 1) throw Error("invalid_argument", "fixture size must be positive");
  Fixture f;
  auto a = [](int i) { return "A" + std::to_string(i); };
  auto ap = [](int i) { return "A" + std::to_string(i) + "p"; };
  if (name == "thm3_conjunctive") {
    f.query = CQ("x");
    std::set<std::string> all;
    for (int i = 1; i <= n; ++i) {
      all.insert(a(i));
      all.insert(ap(i));
      f.query.add_concept(a(i), "x");
      f.query.add_concept(ap(i), "x");
    }
    for (int i = 1; i <= n; ++i)
      for (const auto& c : all) f.conjunctive.push_back({{a(i), ap(i)}, c});
  } else if (name == "thm4_dllitef") {
    f.ontology = thm4_ontology();
    f.query = CQ("x1");
    zigzag(f.query, n);
  } else if (name == "thm9_disjointness") {
    f.query = CQ("x");
    for (int i = 1; i <= n; ++i) {
      f.ontology.concept_disjointness.push_back({BasicConcept::atomic(a(i)), BasicConcept::atomic(ap(i))});
      f.query.add_concept(a(i), "x");
    }
  } else if (name == "thm10_hypotheses") {
    if (!prime(n)) throw Error("invalid_argument", "thm10_hypotheses is indexed by primes");
    f.ontology = thm4_ontology();
    f.query = CQ("x1");
    zigzag(f.query, n);
    f.query.add_concept("A", "x0");
    f.query.add_role(Role("r"), "x0", "x1");
    f.related.push_back(parse_cq("q(x1) :- A(x0), r(x0,x1), A(x1)"));
  } else {
    throw Error("unknown_fixture", "unknown fixture '" + name + "'");
  }
  return f;
}

}  // namespace eliq

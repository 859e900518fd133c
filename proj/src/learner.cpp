#include "eliq/learner.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "eliq/frontier.hpp"
#include "eliq/io.hpp"

namespace eliq {

std::string to_string(LearnOutcome o) { return o == LearnOutcome::Success ? "success" : "budget_exceeded"; }

std::optional<CQ> LearnTrace::result() const {
  if (outcome != LearnOutcome::Success || hypotheses.empty()) return std::nullopt;
  return hypotheses.back();
}

SimulatedOracle::SimulatedOracle(const Ontology& o, CQ target) : reasoner_(o), target_(std::move(target)) {}

bool SimulatedOracle::decide(const ABox& a, const std::string& individual) {
  return reasoner_.certain_answer(a, target_, individual);
}

namespace {

struct BudgetHit {};

// Stops the run once `budget` questions have been asked.
class Budgeted : public MembershipOracle {
 public:
  Budgeted(MembershipOracle& inner, std::size_t budget) : inner_(inner), budget_(budget) {}

 protected:
  bool decide(const ABox& a, const std::string& individual) override {
    if (query_count() > budget_) throw BudgetHit{};
    return inner_.answer(a, individual);
  }

 private:
  MembershipOracle& inner_;
  std::size_t budget_;
};

class Rewriting : public MembershipOracle {
 public:
  Rewriting(const NormalForm& nf, const Ontology& o, MembershipOracle& inner) : nf_(nf), o_(o), inner_(inner) {}

 protected:
  bool decide(const ABox& a, const std::string& individual) override {
    return inner_.answer(translate_abox(nf_, o_, a), individual);
  }

 private:
  const NormalForm& nf_;
  const Ontology& o_;
  MembershipOracle& inner_;
};

bool probe(MembershipOracle& oracle, const CQ& q) { return oracle.answer(q.to_abox(), q.answer_var()); }

CQ minimize_with(const Reasoner& r, MembershipOracle& oracle, const CQ& q0) {
  CQ q = r.saturate(q0);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& atom : q.role_atoms()) {
      CQ rest = q;
      rest.remove_role(atom);
      rest = rest.restrict_to(rest.component_of_answer());
      if (probe(oracle, rest)) {
        q = std::move(rest);
        changed = true;
        break;
      }
    }
  }
  return rename_variables(q);
}

// Role atom on a shortest cycle, ties broken by atom order; nullopt if the
// query is acyclic. Self-loops and parallel edges count as cycles.
std::optional<RoleAtom> cycle_atom(const CQ& q) {
  std::vector<RoleAtom> atoms(q.role_atoms().begin(), q.role_atoms().end());
  std::optional<RoleAtom> best;
  std::size_t best_len = 0;
  for (std::size_t e = 0; e < atoms.size(); ++e) {
    const auto& a = atoms[e];
    std::size_t len = 0;
    if (a.from == a.to) {
      len = 1;
    } else {
      std::map<std::string, std::size_t> dist{{a.to, 0}};
      std::deque<std::string> todo{a.to};
      while (!todo.empty() && !dist.count(a.from)) {
        auto v = todo.front();
        todo.pop_front();
        for (std::size_t f = 0; f < atoms.size(); ++f) {
          if (f == e) continue;
          const auto& b = atoms[f];
          std::string w;
          if (b.from == v) w = b.to;
          else if (b.to == v) w = b.from;
          else continue;
          if (dist.count(w)) continue;
          dist[w] = dist[v] + 1;
          todo.push_back(w);
        }
      }
      if (!dist.count(a.from)) continue;
      len = dist[a.from] + 1;
    }
    if (!best || len < best_len) {
      best = a;
      best_len = len;
    }
  }
  return best;
}

CQ double_cycle(const CQ& q, const RoleAtom& cut) {
  CQ p = q;
  p.remove_role(cut);
  auto copy = [](const std::string& v) { return v + "'"; };
  CQ out = p;
  for (const auto& v : p.vars()) out.add_var(copy(v));
  for (const auto& a : p.concept_atoms()) out.add_concept(a.concept_name, copy(a.var));
  for (const auto& a : p.role_atoms()) out.add_role(Role(a.role), copy(a.from), copy(a.to));
  out.add_role(Role(cut.role), cut.from, copy(cut.to));
  out.add_role(Role(cut.role), copy(cut.from), cut.to);
  return rename_variables(out);
}

CQ treeify_with(const Reasoner& r, MembershipOracle& oracle, const CQ& q) {
  CQ p = minimize_with(r, oracle, q);
  while (auto cut = cycle_atom(p)) p = minimize_with(r, oracle, double_cycle(p, *cut));
  return p;
}

void require_learnable(const Ontology& o) {
  frontier_dialect(o);
}

}  // namespace

CQ seed_query(const Ontology& o, const Signature& extra) {
  if (!o.concept_disjointness.empty())
    throw Error("seed_required", "the ontology has concept disjointness constraints; a seed query must be supplied");
  Reasoner r(o);
  Signature sig = o.signature();
  sig.merge(extra);
  std::vector<std::string> concepts, roles;
  for (const auto& a : sig.concepts)
    if (r.satisfiable(BasicConcept::atomic(a))) concepts.push_back(a);
  for (const auto& s : sig.roles)
    if (r.satisfiable(BasicConcept::exists(Role(s)))) roles.push_back(s);

  CQ q("x0");
  if (o.role_disjointness.empty()) {
    for (const auto& a : concepts) q.add_concept(a, "x0");
    for (const auto& s : roles) q.add_role(Role(s), "x0", "x0");
  } else {
    // Walecki: x0 is the hub, x1..x2m the ring; cycle i zigzags i, i+1,
    // i-1, i+2, ... around the ring, so the m cycles share no edge.
    const int m = static_cast<int>(roles.size());
    auto ring = [&](int v) { return "x" + std::to_string(1 + ((v % (2 * m)) + 2 * m) % (2 * m)); };
    for (int v = 0; v <= 2 * m; ++v) {
      q.add_var("x" + std::to_string(v));
      for (const auto& a : concepts) q.add_concept(a, "x" + std::to_string(v));
    }
    for (int i = 0; i < m; ++i) {
      std::vector<std::string> path{"x0", ring(i)};
      for (int k = 1; k < m; ++k) {
        path.push_back(ring(i + k));
        path.push_back(ring(i - k));
      }
      path.push_back(ring(i + m));
      for (std::size_t j = 0; j < path.size(); ++j)
        q.add_role(Role(roles[i]), path[j], path[(j + 1) % path.size()]);
    }
  }
  if (!r.satisfiable(q)) throw Error("internal", "seed query is unsatisfiable: " + to_string(q));
  return q;
}

CQ minimize_cq(const Ontology& o, MembershipOracle& oracle, const CQ& q) {
  return minimize_with(Reasoner(o), oracle, q);
}

CQ treeify(const Ontology& o, MembershipOracle& oracle, const CQ& q) {
  return treeify_with(Reasoner(o), oracle, q);
}

LearnTrace learn(const Ontology& o, MembershipOracle& oracle, const CQ& seed, std::size_t budget) {
  require_learnable(o);
  if (!is_normal_form(o)) throw Error("not_normal_form", "learn expects an ontology in normal form");
  if (budget == 0) throw Error("invalid_argument", "the budget must be positive");
  Reasoner r(o);
  if (!r.satisfiable(seed)) throw Error("unsatisfiable", "seed query is unsatisfiable: " + to_string(seed));

  LearnTrace trace;
  Budgeted counted(oracle, budget);
  try {
    CQ h = treeify_with(r, counted, seed);
    trace.hypotheses.push_back(h);
    for (;;) {
      auto members = compute_frontier(o, h).members;
      std::vector<std::pair<std::string, std::size_t>> order;
      for (std::size_t i = 0; i < members.size(); ++i) order.push_back({to_string(members[i]), i});
      std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a.first < b.first;
      });
      trace.frontier_sizes.push_back(members.size());
      std::optional<CQ> next;
      for (const auto& [text, i] : order)
        if (probe(counted, members[i])) {
          next = members[i];
          break;
        }
      if (!next) break;
      h = minimize_with(r, counted, *next);
      trace.hypotheses.push_back(h);
    }
  } catch (const BudgetHit&) {
    trace.outcome = LearnOutcome::BudgetExceeded;
  }
  trace.membership_queries = std::min(counted.query_count(), budget);
  return trace;
}

LearnTrace learn_with_normal_form(const Ontology& o, MembershipOracle& oracle, const CQ& seed,
                                  std::size_t budget) {
  require_learnable(o);
  NormalForm nf = normalize(o, seed.signature());
  Rewriting rewriting(nf, o, oracle);
  LearnTrace trace = learn(nf.ontology, rewriting, seed, budget);
  for (auto& h : trace.hypotheses) h = rename_variables(CQ::from_abox(translate_abox(nf, o, h.to_abox()), h.answer_var()));
  return trace;
}

ABox translate_abox(const NormalForm& nf, const Ontology& o, const ABox& a) {
  ABox out;
  for (const auto& b : a.individuals()) out.add_individual(b);
  for (const auto& c : a.concept_assertions())
    if (!nf.fresh.count(c.concept_name)) out.add_concept(c.concept_name, c.var);
  for (const auto& ra : a.role_assertions()) out.add_role(Role(ra.role), ra.from, ra.to);

  int k = 0;
  auto fresh_individual = [&] {
    std::string name;
    do name = "_t" + std::to_string(++k);
    while (out.individuals().count(name));
    out.add_individual(name);
    return name;
  };
  auto successor = [&](const std::string& b, const Role& r) -> std::optional<std::string> {
    for (const auto& ra : out.role_assertions()) {
      if (ra.role != r.name) continue;
      if (!r.inverted && ra.from == b) return ra.to;
      if (r.inverted && ra.to == b) return ra.from;
    }
    return std::nullopt;
  };
  std::function<void(const std::string&, const EliConcept&)> add = [&](const std::string& b, const EliConcept& c) {
    switch (c.kind) {
      case EliConcept::Kind::Top: return;
      case EliConcept::Kind::Atomic: out.add_concept(c.name, b); return;
      case EliConcept::Kind::And:
        for (const auto& part : c.args) add(b, part);
        return;
      case EliConcept::Kind::Exists: {
        std::optional<std::string> next;
        if (o.functional_role(c.role)) next = successor(b, c.role);
        if (!next) {
          next = fresh_individual();
          out.add_role(c.role, b, *next);
        }
        add(*next, c.filler());
        return;
      }
    }
  };
  for (const auto& c : a.concept_assertions())
    if (auto it = nf.fresh.find(c.concept_name); it != nf.fresh.end()) add(c.var, it->second);
  return out;
}

bool respects_functionality(const Ontology& o, const ABox& a) {
  for (const auto& r : o.functional) {
    std::map<std::string, std::string> succ;
    for (const auto& ra : a.role_assertions()) {
      if (ra.role != r.name) continue;
      const auto& from = r.inverted ? ra.to : ra.from;
      const auto& to = r.inverted ? ra.from : ra.to;
      auto [it, fresh] = succ.emplace(from, to);
      if (!fresh && it->second != to) return false;
    }
  }
  return true;
}

std::size_t default_budget(const Ontology& o, const CQ& target) {
  Signature sig = o.signature();
  sig.merge(target.signature());
  std::size_t n = target.vars().size() * (o.size() + sig.size());
  return 10 * n * n;
}

}  // namespace eliq

#include "eliq/frontier.hpp"

#include <cmath>
#include <functional>

#include "eliq/io.hpp"
#include "eliq/normal_form.hpp"
#include "frontier_impl.hpp"

namespace eliq {

using detail::FrontierBuilder;
using detail::FTree;

std::size_t Frontier::total_vars() const {
  std::size_t n = 0;
  for (const auto& m : members) n += m.vars().size();
  return n;
}

namespace {

void require_normal(const Ontology& o) {
  if (!is_normal_form(o)) throw Error("not_normal_form", "expected an ontology in normal form");
}

// Variable names with dots would clash with the names of copies.
CQ plain_names(const CQ& q) {
  bool dotted = false;
  for (const auto& v : q.vars()) dotted |= v.find('.') != std::string::npos;
  if (!dotted) return q;
  std::map<std::string, std::string> to;
  to[q.answer_var()] = "x0";
  int k = 0;
  for (const auto& v : q.vars())
    if (!to.count(v)) to[v] = "x" + std::to_string(++k);
  CQ out("x0");
  for (const auto& v : q.vars()) out.add_var(to[v]);
  for (const auto& a : q.concept_atoms()) out.add_concept(a.concept_name, to[a.var]);
  for (const auto& a : q.role_atoms()) out.add_role(Role(a.role), to[a.from], to[a.to]);
  return out;
}

// Replaces fresh names by the concepts they abbreviate. With functional
// roles, existential restrictions reuse an existing successor.
void expand_fresh(FTree& t, const NormalForm& nf, const Ontology& o, bool merge) {
  int k = 0;
  std::function<void(int, const EliConcept&)> add = [&](int n, const EliConcept& c) {
    switch (c.kind) {
      case EliConcept::Kind::Top: return;
      case EliConcept::Kind::Atomic: t.nodes[n].concepts.insert(c.name); return;
      case EliConcept::Kind::And:
        for (const auto& part : c.args) add(n, part);
        return;
      case EliConcept::Kind::Exists: {
        if (merge && o.functional_role(c.role)) {
          int target = -1;
          if (t.nodes[n].parent >= 0 && t.nodes[n].role.inverse() == c.role) target = t.nodes[n].parent;
          for (int ch : t.nodes[n].children)
            if (target < 0 && t.nodes[ch].role == c.role) target = ch;
          if (target >= 0) {
            add(target, c.filler());
            return;
          }
        }
        int ch = t.add(n, c.role, t.nodes[n].name + ".t" + std::to_string(++k), -1);
        add(ch, c.filler());
        return;
      }
    }
  };
  const int n0 = static_cast<int>(t.size());
  for (int n = 0; n < n0; ++n) {
    std::vector<std::string> fresh;
    for (const auto& c : t.nodes[n].concepts)
      if (nf.fresh.count(c)) fresh.push_back(c);
    for (const auto& x : fresh) {
      t.nodes[n].concepts.erase(x);
      add(n, nf.fresh.at(x));
    }
  }
}

Frontier build(const Ontology& o, const CQ& q0, bool f, const FrontierOptions& opts) {
  if (!q0.is_eliq()) throw Error("not_an_eliq", "frontiers are defined for ELIQs only: " + to_string(q0));
  Reasoner original(o);
  if (!original.satisfiable(q0)) throw Error("unsatisfiable", "query is unsatisfiable: " + to_string(q0));
  CQ q = plain_names(q0);
  NormalForm nf = normalize(o, q.signature());
  Reasoner normal(nf.ontology);
  CQ prepared = normal.minimize_eliq(q);
  FrontierBuilder builder(normal, prepared, f, opts.reverse_order);

  Frontier out;
  out.source = q0;
  out.ontology = o;
  auto candidates = builder.generalize(0);
  for (const auto& c : candidates) {
    FTree p = builder.compensate(c.tree);
    expand_fresh(p, nf, o, f);
    CQ member = rename_variables(builder.to_cq(p));
    if (opts.check) {
      if (!original.contained(q0, member))
        throw Error("internal", "frontier member does not generalise the query: " + to_string(member));
      if (original.contained(member, q0))
        throw Error("internal", "frontier member is not strictly more general: " + to_string(member));
    }
    if (opts.prune) {
      bool dup = false;
      for (const auto& m : out.members) dup = dup || original.equivalent(m, member);
      if (dup) continue;
    }
    out.members.push_back(std::move(member));
  }
  return out;
}

std::string func_list(const Ontology& o) {
  std::string s;
  for (const auto& r : o.functional) s += (s.empty() ? "func " : ", func ") + r.str();
  return s;
}

}  // namespace

std::vector<GenCandidate> generalize_r(const Ontology& o, const CQ& q, const std::string& var) {
  require_normal(o);
  Reasoner r(o);
  FrontierBuilder b(r, q, false, false);
  std::vector<GenCandidate> out;
  for (const auto& c : b.generalize(b.index_of(var))) out.push_back(b.to_candidate(c));
  return out;
}

std::vector<GenCandidate> generalize_f(const Ontology& o, const CQ& q, const std::string& var) {
  require_normal(o);
  Reasoner r(o);
  FrontierBuilder b(r, q, true, false);
  std::vector<GenCandidate> out;
  for (const auto& c : b.generalize(b.index_of(var))) out.push_back(b.to_candidate(c));
  return out;
}

CQ compensate_r(const Ontology& o, const CQ& q, const GenCandidate& c) {
  require_normal(o);
  Reasoner r(o);
  FrontierBuilder b(r, q, false, false);
  return b.to_cq(b.compensate_r(b.from_candidate(c)));
}

CQ compensate_f(const Ontology& o, const CQ& q, const GenCandidate& c) {
  require_normal(o);
  Reasoner r(o);
  FrontierBuilder b(r, q, true, false);
  return b.to_cq(b.compensate_f(b.from_candidate(c)));
}

Dialect frontier_dialect(const Ontology& o) {
  auto d = dialect_of(o);
  if (d == Dialect::F) {
    std::string msg = "no finite frontier is guaranteed: ";
    for (const auto& ci : f_restriction_violations(o)) msg += ci.str() + "; ";
    throw Error("not_f_restricted", msg + "with " + func_list(o));
  }
  if (d == Dialect::RF)
    throw Error("unsupported_dialect", "frontiers with both role inclusions and functionality are not supported");
  return d;
}

Frontier frontier_r(const Ontology& o, const CQ& q, const FrontierOptions& opts) {
  auto d = dialect_of(o);
  if (d != Dialect::Core && d != Dialect::R)
    throw Error("wrong_dialect", "frontier_r expects a core or r ontology, got " + to_string(d));
  return build(o, q, false, opts);
}

Frontier frontier_f(const Ontology& o, const CQ& q, const FrontierOptions& opts) {
  auto d = frontier_dialect(o);
  if (d != Dialect::Core && d != Dialect::FRestricted)
    throw Error("wrong_dialect", "frontier_f expects a core or f_restricted ontology, got " + to_string(d));
  return build(o, q, true, opts);
}

Frontier compute_frontier(const Ontology& o, const CQ& q, const FrontierOptions& opts) {
  return frontier_dialect(o) == Dialect::FRestricted ? frontier_f(o, q, opts) : frontier_r(o, q, opts);
}

std::vector<CQ> minimal_core(const Reasoner& r, const std::vector<CQ>& members) {
  std::vector<CQ> out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < members.size() && !redundant; ++j) {
      if (i == j || !r.contained(members[j], members[i])) continue;
      redundant = j < i || !r.contained(members[i], members[j]);
    }
    if (!redundant) out.push_back(members[i]);
  }
  return out;
}

double frontier_size_bound(const Ontology& o, const CQ& q) {
  double n = static_cast<double>(q.vars().size());
  double s = std::max<double>(1, q.signature().size());
  double os = std::max<double>(1, normalize(o, q.signature()).ontology.size());
  return s * os * n * n * n * (1 + (1 + n) * os * os * os) * (1 + n * os);
}

}  // namespace eliq

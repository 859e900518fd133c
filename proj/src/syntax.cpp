#include "eliq/syntax.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <queue>

namespace eliq {

ParseError::ParseError(const std::string& message, int line, int column)
    : Error("parse_error", std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::string BasicConcept::str() const {
  switch (kind) {
    case Kind::Top: return "top";
    case Kind::Atomic: return name;
    case Kind::Exists: return "some " + role.str();
  }
  return {};
}

EliConcept EliConcept::atomic(std::string n) {
  EliConcept c;
  c.kind = Kind::Atomic;
  c.name = std::move(n);
  return c;
}

EliConcept EliConcept::exists(Role r, EliConcept filler) {
  EliConcept c;
  c.kind = Kind::Exists;
  c.role = std::move(r);
  c.args.push_back(std::move(filler));
  return c;
}

EliConcept EliConcept::conj(std::vector<EliConcept> parts) {
  std::vector<EliConcept> flat;
  for (auto& p : parts) {
    if (p.kind == Kind::And) {
      for (auto& a : p.args) flat.push_back(std::move(a));
    } else if (p.kind != Kind::Top) {
      flat.push_back(std::move(p));
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return top();
  if (flat.size() == 1) return flat.front();
  EliConcept c;
  c.kind = Kind::And;
  c.args = std::move(flat);
  return c;
}

EliConcept EliConcept::from_basic(const BasicConcept& b) {
  switch (b.kind) {
    case BasicConcept::Kind::Top: return top();
    case BasicConcept::Kind::Atomic: return atomic(b.name);
    case BasicConcept::Kind::Exists: return exists(b.role);
  }
  return top();
}

std::strong_ordering EliConcept::operator<=>(const EliConcept& o) const {
  if (auto c = kind <=> o.kind; c != 0) return c;
  if (auto c = name <=> o.name; c != 0) return c;
  if (auto c = role <=> o.role; c != 0) return c;
  if (auto c = args.size() <=> o.args.size(); c != 0) return c;
  for (std::size_t i = 0; i < args.size(); ++i)
    if (auto c = args[i] <=> o.args[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t EliConcept::size() const {
  switch (kind) {
    case Kind::Top:
    case Kind::Atomic: return 1;
    case Kind::Exists: return 2 + filler().size();
    case Kind::And: {
      std::size_t n = args.size() - 1;
      for (const auto& a : args) n += a.size();
      return n;
    }
  }
  return 1;
}

std::string EliConcept::str() const {
  switch (kind) {
    case Kind::Top: return "top";
    case Kind::Atomic: return name;
    case Kind::Exists: {
      const auto& f = filler();
      if (f.kind == Kind::Top) return "some " + role.str();
      if (f.kind == Kind::And) return "some " + role.str() + " . (" + f.str() + ")";
      return "some " + role.str() + " . " + f.str();
    }
    case Kind::And: {
      std::string s;
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) s += " & ";
        s += args[i].str();
      }
      return s;
    }
  }
  return {};
}

std::string ConceptInclusion::str() const { return lhs.str() + " sub " + rhs.str(); }

void Signature::merge(const Signature& other) {
  concepts.insert(other.concepts.begin(), other.concepts.end());
  roles.insert(other.roles.begin(), other.roles.end());
}

std::string to_string(Dialect d) {
  switch (d) {
    case Dialect::Core: return "core";
    case Dialect::R: return "r";
    case Dialect::F: return "f";
    case Dialect::FRestricted: return "f_restricted";
    case Dialect::RF: return "rf";
  }
  return "?";
}

namespace {

void add_basic(Signature& s, const BasicConcept& b) {
  if (b.kind == BasicConcept::Kind::Atomic) s.concepts.insert(b.name);
  if (b.kind == BasicConcept::Kind::Exists) s.roles.insert(b.role.name);
}

void add_concept(Signature& s, const EliConcept& c) {
  if (c.kind == EliConcept::Kind::Atomic) s.concepts.insert(c.name);
  if (c.kind == EliConcept::Kind::Exists) s.roles.insert(c.role.name);
  for (const auto& a : c.args) add_concept(s, a);
}

std::size_t basic_size(const BasicConcept& b) { return b.kind == BasicConcept::Kind::Exists ? 2 : 1; }

}  // namespace

bool Ontology::empty() const {
  return cis.empty() && ris.empty() && concept_disjointness.empty() && role_disjointness.empty() &&
         functional.empty();
}

Signature Ontology::signature() const {
  Signature s;
  for (const auto& ci : cis) {
    add_basic(s, ci.lhs);
    add_concept(s, ci.rhs);
  }
  for (const auto& ri : ris) {
    s.roles.insert(ri.sub.name);
    s.roles.insert(ri.sup.name);
  }
  for (const auto& d : concept_disjointness) {
    add_basic(s, d.first);
    add_basic(s, d.second);
  }
  for (const auto& d : role_disjointness) {
    s.roles.insert(d.first.name);
    s.roles.insert(d.second.name);
  }
  for (const auto& r : functional) s.roles.insert(r.name);
  return s;
}

std::size_t Ontology::size() const {
  std::size_t n = 0;
  for (const auto& ci : cis) n += basic_size(ci.lhs) + 1 + ci.rhs.size();
  n += 3 * ris.size();
  for (const auto& d : concept_disjointness) n += 1 + basic_size(d.first) + basic_size(d.second);
  n += 3 * role_disjointness.size();
  n += 2 * functional.size();
  return n;
}

CQ::CQ(std::string answer_var) : answer_(std::move(answer_var)) { vars_.insert(answer_); }

void CQ::add_concept(const std::string& concept_name, const std::string& var) {
  vars_.insert(var);
  if (concept_name != "top") concepts_.insert({concept_name, var});
}

void CQ::add_role(const Role& r, const std::string& from, const std::string& to) {
  vars_.insert(from);
  vars_.insert(to);
  if (r.inverted)
    roles_.insert({r.name, to, from});
  else
    roles_.insert({r.name, from, to});
}

bool CQ::remove_concept(const std::string& concept_name, const std::string& var) {
  return concepts_.erase({concept_name, var}) > 0;
}

bool CQ::remove_role(const RoleAtom& atom) { return roles_.erase(atom) > 0; }

std::set<std::string> CQ::concepts_at(const std::string& var) const {
  std::set<std::string> out;
  for (const auto& a : concepts_)
    if (a.var == var) out.insert(a.concept_name);
  return out;
}

Signature CQ::signature() const {
  Signature s;
  for (const auto& a : concepts_) s.concepts.insert(a.concept_name);
  for (const auto& a : roles_) s.roles.insert(a.role);
  return s;
}

std::set<std::string> CQ::component_of_answer() const {
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& a : roles_) {
    adj[a.from].push_back(a.to);
    adj[a.to].push_back(a.from);
  }
  std::set<std::string> seen{answer_};
  std::vector<std::string> stack{answer_};
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (const auto& w : adj[v])
      if (seen.insert(w).second) stack.push_back(w);
  }
  return seen;
}

bool CQ::connected() const { return component_of_answer().size() == vars_.size(); }

bool CQ::is_eliq() const {
  if (!connected()) return false;
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& a : roles_) {
    if (a.from == a.to) return false;
    auto key = std::minmax(a.from, a.to);
    if (!pairs.insert(key).second) return false;
  }
  // connected with |E| = |V| - 1 and no multi-edges: a tree
  return roles_.size() + 1 == vars_.size();
}

CQ CQ::restrict_to(const std::set<std::string>& keep) const {
  CQ out(answer_);
  for (const auto& v : vars_)
    if (keep.count(v)) out.vars_.insert(v);
  for (const auto& a : concepts_)
    if (keep.count(a.var)) out.concepts_.insert(a);
  for (const auto& a : roles_)
    if (keep.count(a.from) && keep.count(a.to)) out.roles_.insert(a);
  return out;
}

ABox CQ::to_abox() const {
  ABox a;
  for (const auto& v : vars_) a.add_individual(v);
  for (const auto& c : concepts_) a.add_concept(c.concept_name, c.var);
  for (const auto& r : roles_) a.add_role(Role(r.role), r.from, r.to);
  return a;
}

CQ CQ::from_abox(const ABox& a, const std::string& individual) {
  CQ q(individual);
  for (const auto& i : a.individuals()) q.add_var(i);
  for (const auto& c : a.concept_assertions()) q.add_concept(c.concept_name, c.var);
  for (const auto& r : a.role_assertions()) q.add_role(Role(r.role), r.from, r.to);
  return q;
}

void ABox::add_concept(const std::string& concept_name, const std::string& a) {
  individuals_.insert(a);
  if (concept_name != "top") concepts_.insert({concept_name, a});
}

void ABox::add_role(const Role& r, const std::string& a, const std::string& b) {
  individuals_.insert(a);
  individuals_.insert(b);
  if (r.inverted)
    roles_.insert({r.name, b, a});
  else
    roles_.insert({r.name, a, b});
}

bool ABox::remove_concept(const std::string& concept_name, const std::string& a) {
  return concepts_.erase({concept_name, a}) > 0;
}

Signature ABox::signature() const {
  Signature s;
  for (const auto& a : concepts_) s.concepts.insert(a.concept_name);
  for (const auto& a : roles_) s.roles.insert(a.role);
  return s;
}

EliConcept eliq_to_concept(const CQ& q) {
  if (!q.is_eliq()) throw Error("not_an_eliq", "query is not an ELIQ");
  std::map<std::string, std::vector<std::pair<Role, std::string>>> adj;
  for (const auto& a : q.role_atoms()) {
    adj[a.from].push_back({Role(a.role), a.to});
    adj[a.to].push_back({Role(a.role, true), a.from});
  }
  std::function<EliConcept(const std::string&, const std::string&)> build =
      [&](const std::string& v, const std::string& parent) {
        std::vector<EliConcept> parts;
        for (const auto& c : q.concepts_at(v)) parts.push_back(EliConcept::atomic(c));
        for (const auto& [r, w] : adj[v])
          if (w != parent) parts.push_back(EliConcept::exists(r, build(w, v)));
        return EliConcept::conj(std::move(parts));
      };
  return build(q.answer_var(), "");
}

CQ rename_variables(const CQ& q) {
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& a : q.role_atoms()) {
    adj[a.from].push_back(a.to);
    adj[a.to].push_back(a.from);
  }
  std::map<std::string, std::string> to;
  std::deque<std::string> todo{q.answer_var()};
  to[q.answer_var()] = "x0";
  int k = 0;
  while (!todo.empty()) {
    auto v = todo.front();
    todo.pop_front();
    for (const auto& w : adj[v])
      if (!to.count(w)) {
        to[w] = "x" + std::to_string(++k);
        todo.push_back(w);
      }
  }
  for (const auto& v : q.vars())
    if (!to.count(v)) to[v] = "x" + std::to_string(++k);
  CQ out("x0");
  for (const auto& v : q.vars()) out.add_var(to[v]);
  for (const auto& a : q.concept_atoms()) out.add_concept(a.concept_name, to[a.var]);
  for (const auto& a : q.role_atoms()) out.add_role(Role(a.role), to[a.from], to[a.to]);
  return out;
}

CQ concept_to_eliq(const EliConcept& c, const std::string& answer_var) {
  CQ q(answer_var);
  int counter = 0;
  auto fresh = [&] {
    std::string n;
    do n = "x" + std::to_string(++counter);
    while (n == answer_var);
    return n;
  };
  std::function<void(const EliConcept&, const std::string&)> walk = [&](const EliConcept& d,
                                                                          const std::string& v) {
    switch (d.kind) {
      case EliConcept::Kind::Top: break;
      case EliConcept::Kind::Atomic: q.add_concept(d.name, v); break;
      case EliConcept::Kind::And:
        for (const auto& a : d.args) walk(a, v);
        break;
      case EliConcept::Kind::Exists: {
        auto w = fresh();
        q.add_role(d.role, v, w);
        walk(d.filler(), w);
        break;
      }
    }
  };
  walk(c, answer_var);
  return q;
}

}  // namespace eliq

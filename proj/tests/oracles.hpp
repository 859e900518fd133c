// Independent reference implementations used to check the library.
#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "eliq/syntax.hpp"

namespace oracle {

using namespace eliq;

// Restricted chase up to a depth bound, applied literally to the (not
// necessarily normal) ontology, with merging for functional roles.
class Chase {
 public:
  Chase(const Ontology& o, const ABox& a, int depth) : o_(o), limit_(depth) {
    for (const auto& i : a.individuals()) index_[i] = add(0, true);
    for (const auto& c : a.concept_assertions()) labels_[index_[c.var]].insert(c.concept_name);
    for (const auto& r : a.role_assertions()) edges_.insert({r.role, index_[r.from], index_[r.to]});
    run();
  }

  bool clash() const { return clash_; }
  int element(const std::string& ind) const { return index_.at(ind); }
  bool has(int d, const BasicConcept& b) const {
    switch (b.kind) {
      case BasicConcept::Kind::Top: return true;
      case BasicConcept::Kind::Atomic: return labels_[d].count(b.name) > 0;
      case BasicConcept::Kind::Exists: return !neighbors(d, b.role).empty();
    }
    return false;
  }

  // Brute-force homomorphism search, every variable ranging over all
  // elements.
  bool maps(const CQ& q, int at) const {
    std::vector<std::string> vars(q.vars().begin(), q.vars().end());
    std::map<std::string, int> h;
    h[q.answer_var()] = at;
    std::vector<std::string> order{q.answer_var()};
    for (const auto& v : vars)
      if (v != q.answer_var()) order.push_back(v);
    return search(q, order, 0, h);
  }

 private:
  int add(int depth, bool named) {
    labels_.emplace_back();
    depth_.push_back(depth);
    named_.push_back(named);
    alive_.push_back(true);
    return static_cast<int>(labels_.size()) - 1;
  }

  std::vector<int> neighbors(int d, const Role& r) const {
    std::vector<int> out;
    for (const auto& [name, x, y] : edges_) {
      if (name != r.name) continue;
      if (!r.inverted && x == d) out.push_back(y);
      if (r.inverted && y == d) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool eval(int d, const EliConcept& c) const {
    switch (c.kind) {
      case EliConcept::Kind::Top: return true;
      case EliConcept::Kind::Atomic: return labels_[d].count(c.name) > 0;
      case EliConcept::Kind::And:
        for (const auto& a : c.args)
          if (!eval(d, a)) return false;
        return true;
      case EliConcept::Kind::Exists:
        for (int e : neighbors(d, c.role))
          if (eval(e, c.filler())) return true;
        return false;
    }
    return false;
  }

  bool apply(int d, const EliConcept& c) {
    switch (c.kind) {
      case EliConcept::Kind::Top: return false;
      case EliConcept::Kind::Atomic: return labels_[d].insert(c.name).second;
      case EliConcept::Kind::And: {
        bool ch = false;
        for (const auto& a : c.args) ch |= apply(d, a);
        return ch;
      }
      case EliConcept::Kind::Exists: {
        if (eval(d, c) || depth_[d] >= limit_) return false;
        // a witness cut off by the depth bound is not re-created
        if (!fired_.insert({d, c.str()}).second) return false;
        int e = add(depth_[d] + 1, false);
        add_edge(c.role, d, e);
        apply(e, c.filler());
        return true;
      }
    }
    return false;
  }

  void add_edge(const Role& r, int d, int e) {
    if (r.inverted)
      edges_.insert({r.name, e, d});
    else
      edges_.insert({r.name, d, e});
  }

  void merge(int keep, int gone) {
    std::set<std::tuple<std::string, int, int>> moved;
    for (auto [n, x, y] : edges_) moved.insert({n, x == gone ? keep : x, y == gone ? keep : y});
    edges_ = std::move(moved);
    labels_[keep].insert(labels_[gone].begin(), labels_[gone].end());
    labels_[gone].clear();
    depth_[keep] = std::min(depth_[keep], depth_[gone]);
    alive_[gone] = false;
  }

  void run() {
    bool changed = true;
    while (changed && !clash_) {
      changed = false;
      for (std::size_t d = 0; d < labels_.size(); ++d) {
        if (!alive_[d]) continue;
        for (const auto& ci : o_.cis)
          if (has(d, ci.lhs)) changed |= apply(d, ci.rhs);
      }
      for (const auto& ri : o_.ris) {
        auto copy = edges_;
        for (const auto& [n, x, y] : copy) {
          if (n != ri.sub.name) continue;
          bool same = ri.sub.inverted == ri.sup.inverted;
          auto before = edges_.size();
          if (same)
            edges_.insert({ri.sup.name, x, y});
          else
            edges_.insert({ri.sup.name, y, x});
          changed |= edges_.size() != before;
        }
      }
      for (const auto& r : o_.functional) {
        for (std::size_t d = 0; d < labels_.size(); ++d) {
          if (!alive_[d]) continue;
          auto ns = neighbors(d, r);
          if (ns.size() < 2) continue;
          int a = ns[0], b = ns[1];
          if (named_[a] && named_[b]) {
            clash_ = true;
            return;
          }
          if (named_[b]) std::swap(a, b);
          merge(a, b);
          changed = true;
          break;
        }
      }
      for (std::size_t d = 0; d < labels_.size(); ++d) {
        if (!alive_[d]) continue;
        for (const auto& dj : o_.concept_disjointness)
          if (has(d, dj.first) && has(d, dj.second)) clash_ = true;
        for (const auto& dj : o_.role_disjointness) {
          auto a = neighbors(d, dj.first), b = neighbors(d, dj.second);
          for (int x : a)
            if (std::find(b.begin(), b.end(), x) != b.end()) clash_ = true;
        }
      }
    }
  }

  bool search(const CQ& q, const std::vector<std::string>& order, std::size_t i,
              std::map<std::string, int>& h) const {
    if (i == order.size()) return true;
    const auto& v = order[i];
    std::vector<int> candidates;
    if (h.count(v))
      candidates.push_back(h[v]);
    else
      for (std::size_t d = 0; d < labels_.size(); ++d)
        if (alive_[d]) candidates.push_back(static_cast<int>(d));
    for (int d : candidates) {
      h[v] = d;
      bool ok = true;
      for (const auto& a : q.concept_atoms())
        if (a.var == v && !labels_[d].count(a.concept_name)) ok = false;
      for (const auto& a : q.role_atoms()) {
        if (!ok) break;
        if (!h.count(a.from) || !h.count(a.to)) continue;
        if (a.from != v && a.to != v) continue;
        if (!edges_.count({a.role, h[a.from], h[a.to]})) ok = false;
      }
      if (ok && search(q, order, i + 1, h)) return true;
      if (i > 0) h.erase(v);
    }
    return false;
  }

  const Ontology& o_;
  int limit_;
  bool clash_ = false;
  std::map<std::string, int> index_;
  std::vector<std::set<std::string>> labels_;
  std::vector<int> depth_;
  std::vector<bool> named_;
  std::vector<bool> alive_;
  std::set<std::tuple<std::string, int, int>> edges_;
  std::set<std::pair<int, std::string>> fired_;
};

inline bool chase_entails(const Ontology& o, const BasicConcept& b1, const BasicConcept& b2, int depth = 6) {
  ABox a;
  a.add_individual("a");
  if (b1.kind == BasicConcept::Kind::Atomic) a.add_concept(b1.name, "a");
  Chase c(o, a, depth);
  if (b1.kind == BasicConcept::Kind::Exists) {
    ABox with_edge;
    with_edge.add_role(b1.role, "a", "b");
    Chase c2(o, with_edge, depth);
    return c2.clash() || c2.has(c2.element("a"), b2);
  }
  return c.clash() || c.has(c.element("a"), b2);
}

inline bool chase_certain(const Ontology& o, const ABox& a, const CQ& q, const std::string& ind, int depth) {
  Chase c(o, a, depth);
  return c.clash() || c.maps(q, c.element(ind));
}

// Certain answer over the empty ontology by enumerating all variable
// assignments into the ABox individuals.
inline bool brute_force_answer(const ABox& a, const CQ& q, const std::string& ind) {
  std::vector<std::string> inds(a.individuals().begin(), a.individuals().end());
  std::vector<std::string> vars;
  for (const auto& v : q.vars())
    if (v != q.answer_var()) vars.push_back(v);
  std::vector<std::size_t> pick(vars.size(), 0);
  for (;;) {
    std::map<std::string, std::string> h{{q.answer_var(), ind}};
    for (std::size_t i = 0; i < vars.size(); ++i) h[vars[i]] = inds[pick[i]];
    bool ok = true;
    for (const auto& c : q.concept_atoms())
      if (!a.concept_assertions().count({c.concept_name, h[c.var]})) ok = false;
    for (const auto& r : q.role_atoms())
      if (!a.role_assertions().count({r.role, h[r.from], h[r.to]})) ok = false;
    if (ok) return true;
    std::size_t i = 0;
    while (i < vars.size() && ++pick[i] == inds.size()) pick[i++] = 0;
    if (i == vars.size()) return false;
  }
}

}  // namespace oracle

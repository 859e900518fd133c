#include <algorithm>
#include <deque>
#include <functional>

#include "eliq/io.hpp"
#include "frontier_impl.hpp"

namespace eliq::detail {

int FTree::add(int parent, const Role& role, std::string name, int down) {
  FNode n;
  n.name = std::move(name);
  n.down = down;
  n.parent = parent;
  n.role = role;
  nodes.push_back(std::move(n));
  int id = static_cast<int>(nodes.size()) - 1;
  if (parent >= 0) nodes[parent].children.push_back(id);
  return id;
}

std::string serialize(const FTree& t) {
  std::string s;
  for (const auto& n : t.nodes) {
    s += n.name + "@" + std::to_string(n.down) + "<" + std::to_string(n.parent) + ":" + n.role.str() + "{";
    for (const auto& c : n.concepts) s += c + ",";
    s += "}";
  }
  return s;
}

FrontierBuilder::FrontierBuilder(const Reasoner& normal, const CQ& q, bool f_dialect, bool reverse_order)
    : r_(normal), f_(f_dialect), reverse_(reverse_order), source_(q) {
  if (!q.is_eliq()) throw Error("not_an_eliq", "frontiers are defined for ELIQs only");
  // root the query at its answer variable
  std::map<std::string, std::vector<std::pair<Role, std::string>>> adj;
  for (const auto& a : q.role_atoms()) {
    adj[a.from].push_back({Role(a.role), a.to});
    adj[a.to].push_back({Role(a.role, true), a.from});
  }
  std::map<std::string, int> id;
  std::deque<std::string> todo{q.answer_var()};
  id[q.answer_var()] = 0;
  q_.push_back({q.answer_var(), q.concepts_at(q.answer_var()), -1, {}, {}, {}});
  while (!todo.empty()) {
    auto v = todo.front();
    todo.pop_front();
    int vi = id[v];
    for (const auto& [role, w] : adj[v]) {
      if (id.count(w)) continue;
      int wi = static_cast<int>(q_.size());
      id[w] = wi;
      q_.push_back({w, q.concepts_at(w), vi, role, {}, {}});
      q_[vi].children.push_back(wi);
      todo.push_back(w);
    }
  }
  for (auto& n : q_)
    for (const auto& [role, w] : adj[n.name]) n.adj.push_back({role, id[w]});

  const auto sig = r_.ontology().signature();
  names_.assign(sig.concepts.begin(), sig.concepts.end());
  for (const auto& r : sig.roles) {
    roles_.push_back(Role(r));
    roles_.push_back(Role(r, true));
  }
  for (const auto& r : roles_) {
    for (const auto& s : roles_)
      if (r_.entails(r, s)) sup_[r].push_back(s);
    for (const auto& b : names_)
      if (r_.entails(BasicConcept::exists(r), BasicConcept::atomic(b))) implied_[r].insert(b);
  }

  // successor labels and entailed links, read off the universal model of q
  auto abox = q.to_abox();
  auto model = r_.model(abox);
  std::set<std::string> known(names_.begin(), names_.end());
  std::set<Role> known_roles(roles_.begin(), roles_.end());
  leads_.resize(q_.size());
  links_.resize(q_.size());
  for (std::size_t v = 0; v < q_.size(); ++v) {
    std::map<Role, std::vector<std::set<std::string>>> anon, named;
    for (const auto& nb : model.neighbors(model.node_of(q_[v].name))) {
      std::set<std::string> labels;
      for (const auto& c : nb.concepts)
        if (known.count(c)) labels.insert(c);
      if (!nb.individual.empty()) links_[v][id[nb.individual]].assign(nb.roles.begin(), nb.roles.end());
      for (const auto& role : nb.roles)
        if (known_roles.count(role)) (nb.individual.empty() ? anon : named)[role].push_back(labels);
    }
    for (const auto& [role, sets] : anon) {
      const auto& in_q = named[role];
      auto realised = [&](const std::set<std::string>& m) {
        return std::any_of(in_q.begin(), in_q.end(), [&](const auto& s) {
          return std::includes(s.begin(), s.end(), m.begin(), m.end());
        });
      };
      std::vector<std::set<std::string>> out;
      if (f_) {
        std::vector<std::set<std::string>> all = sets;
        all.insert(all.end(), in_q.begin(), in_q.end());
        for (const auto& m : all) {
          bool maximal = std::none_of(all.begin(), all.end(), [&](const auto& s) {
            return s.size() > m.size() && std::includes(s.begin(), s.end(), m.begin(), m.end());
          });
          if (maximal && !realised(m) && std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
        }
      } else {
        std::set<std::string> labels;
        for (const auto& s : sets) labels.insert(s.begin(), s.end());
        if (!realised({})) out.push_back({});
        for (const auto& a : labels)
          if (!realised({a})) out.push_back({a});
      }
      if (!out.empty()) leads_[v][role] = std::move(out);
    }
  }
  memo_.resize(q_.size());
}

int FrontierBuilder::index_of(const std::string& var) const {
  for (std::size_t i = 0; i < q_.size(); ++i)
    if (q_[i].name == var) return static_cast<int>(i);
  throw Error("unknown_variable", "variable '" + var + "' does not occur in the query");
}

FTree FrontierBuilder::subtree(int x, int skip) const {
  FTree t;
  t.add(-1, {}, q_[x].name, x);
  t.nodes[0].concepts = q_[x].concepts;
  std::function<void(int, int)> walk = [&](int qn, int tn) {
    for (int c : q_[qn].children) {
      if (c == skip) continue;
      int id = t.add(tn, q_[c].role, q_[c].name, c);
      t.nodes[id].concepts = q_[c].concepts;
      walk(c, id);
    }
  };
  walk(x, 0);
  return t;
}

void FrontierBuilder::copy_q(FTree& t, int anchor, const Role& role, int y, const std::string& suffix) const {
  std::function<void(int, int, const Role&)> walk = [&](int qn, int parent, const Role& r) {
    int id = t.add(parent, r, q_[qn].name + suffix, qn);
    t.nodes[id].concepts = q_[qn].concepts;
    for (int c : q_[qn].children) walk(c, id, q_[c].role);
  };
  walk(y, anchor, role);
}

void FrontierBuilder::graft(FTree& t, int anchor, int v, const std::string& suffix) const {
  t.nodes[anchor].concepts.insert(q_[v].concepts.begin(), q_[v].concepts.end());
  std::function<void(int, int, int)> walk = [&](int qn, int from, int tn) {
    for (const auto& [role, w] : q_[qn].adj) {
      if (w == from) continue;
      int id = t.add(tn, role, q_[w].name + suffix, w);
      t.nodes[id].concepts = q_[w].concepts;
      walk(w, qn, id);
    }
  };
  walk(v, -1, anchor);
}

bool FrontierBuilder::guard(const Role& s, const std::set<std::string>& concepts) const {
  auto it = implied_.find(s);
  if (it == implied_.end()) return true;
  return std::includes(concepts.begin(), concepts.end(), it->second.begin(), it->second.end());
}

bool FrontierBuilder::has_q_neighbor(int v, const Role& r) const {
  return std::any_of(q_[v].adj.begin(), q_[v].adj.end(), [&](const auto& e) { return e.first == r; });
}

namespace {

void attach(FTree& t, int anchor, const Role& role, const FTree& src, const std::string& suffix) {
  std::function<void(int, int)> walk = [&](int sn, int parent) {
    const auto& n = src.nodes[sn];
    int id = t.add(parent, sn == 0 ? role : n.role, n.name + suffix, n.down);
    t.nodes[id].concepts = n.concepts;
    for (int c : n.children) walk(c, id);
  };
  walk(0, anchor);
}

}  // namespace

const std::vector<Candidate>& FrontierBuilder::generalize(int x) {
  if (memo_[x]) return *memo_[x];
  std::vector<Candidate> out;
  std::set<std::string> seen;
  auto push = [&](FTree t, std::string provenance) {
    if (seen.insert(serialize(t)).second) out.push_back({std::move(t), std::move(provenance)});
  };
  const auto& qx = q_[x];
  auto entails = [&](const std::string& a, const std::string& b) {
    return r_.entails(BasicConcept::atomic(a), BasicConcept::atomic(b));
  };

  // (A) drop a concept atom together with its equivalents
  for (const auto& a : qx.concepts) {
    bool blocked = false;
    for (const auto& b : qx.concepts)
      if (b != a && entails(b, a) && !entails(a, b)) blocked = true;
    for (const auto& [role, w] : qx.adj)
      if (r_.entails(BasicConcept::exists(role), BasicConcept::atomic(a))) blocked = true;
    if (!blocked && f_) {
      // functional roles can force A back onto x from a neighbour
      CQ rest = source_;
      for (const auto& b : qx.concepts)
        if (entails(a, b) && entails(b, a)) rest.remove_concept(b, qx.name);
      blocked = r_.entailed_concepts(rest.to_abox(), qx.name, true).count(a) > 0;
    }
    if (blocked) continue;
    FTree t = subtree(x, -1);
    for (const auto& b : qx.concepts)
      if (entails(a, b) && entails(b, a)) t.nodes[0].concepts.erase(b);
    push(std::move(t), "drop " + a + "(" + qx.name + ")");
  }

  // (B) generalise the subquery below one child
  auto children = qx.children;
  if (reverse_) std::reverse(children.begin(), children.end());
  for (int y : children) {
    const Role& role = q_[y].role;
    FTree base = subtree(x, y);
    const auto sub = generalize(y);
    std::string provenance = "generalize " + role.str() + "(" + qx.name + "," + q_[y].name + ")";
    if (f_ && func(role)) {
      if (sub.empty()) push(base, provenance);
      for (std::size_t i = 0; i < sub.size(); ++i) {
        FTree t = base;
        attach(t, 0, role, sub[i].tree, ".g1");
        push(std::move(t), provenance + " keeping " + sub[i].provenance);
      }
      continue;
    }
    FTree t = base;
    int k = 0;
    for (const auto& c : sub) attach(t, 0, role, c.tree, ".g" + std::to_string(++k));
    for (const auto& s : roles_)
      if (r_.entails(role, s) && !r_.entails(s, role)) copy_q(t, 0, s, y, ".g" + std::to_string(++k));
    push(std::move(t), provenance);
  }
  memo_[x] = std::move(out);
  return *memo_[x];
}

CQ FrontierBuilder::to_cq(const FTree& t) const {
  std::vector<std::string> names;
  std::set<std::string> used;
  for (const auto& n : t.nodes) {
    std::string name = n.name;
    for (int k = 1; used.count(name); ++k) name = n.name + "_" + std::to_string(k);
    used.insert(name);
    names.push_back(name);
  }
  CQ q(names[0]);
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    q.add_var(names[i]);
    for (const auto& c : n.concepts) q.add_concept(c, names[i]);
    if (n.parent >= 0) q.add_role(n.role, names[n.parent], names[i]);
  }
  return q;
}

GenCandidate FrontierBuilder::to_candidate(const Candidate& c) const {
  GenCandidate g;
  g.query = to_cq(c.tree);
  g.provenance = c.provenance;
  // to_cq keeps names when they are unique, which they are by construction
  for (const auto& n : c.tree.nodes)
    if (n.down >= 0) g.down[n.name] = q_[n.down].name;
  return g;
}

FTree FrontierBuilder::from_candidate(const GenCandidate& c) const {
  const CQ& cq = c.query;
  std::map<std::string, std::vector<std::pair<Role, std::string>>> adj;
  for (const auto& a : cq.role_atoms()) {
    adj[a.from].push_back({Role(a.role), a.to});
    adj[a.to].push_back({Role(a.role, true), a.from});
  }
  auto down = [&](const std::string& v) {
    auto it = c.down.find(v);
    return it == c.down.end() ? -1 : index_of(it->second);
  };
  FTree t;
  t.add(-1, {}, cq.answer_var(), down(cq.answer_var()));
  t.nodes[0].concepts = cq.concepts_at(cq.answer_var());
  std::set<std::string> seen{cq.answer_var()};
  std::deque<int> todo{0};
  while (!todo.empty()) {
    int n = todo.front();
    todo.pop_front();
    std::string name = t.nodes[n].name;
    for (const auto& [role, w] : adj[name]) {
      if (!seen.insert(w).second) continue;
      int id = t.add(n, role, w, down(w));
      t.nodes[id].concepts = cq.concepts_at(w);
      todo.push_back(id);
    }
  }
  return t;
}

}  // namespace eliq::detail

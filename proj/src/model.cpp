#include "model.hpp"

#include <algorithm>
#include <queue>

namespace eliq::detail {

ModelImpl::ModelImpl(std::shared_ptr<const Kernel> k, const ABox& a, int max_depth)
    : k_(std::move(k)), nc_(k_->concepts()), kr_(k_->roles()), max_depth_(max_depth) {
  auto sig = a.signature();
  for (const auto& c : sig.concepts)
    if (k_->concept_id(c) < 0) {
      foreign_concepts_[c] = static_cast<int>(foreign_concept_names_.size());
      foreign_concept_names_.push_back(c);
    }
  for (const auto& r : sig.roles)
    if (k_->role_id(r) < 0) {
      foreign_roles_[r] = static_cast<int>(foreign_role_names_.size());
      foreign_role_names_.push_back(r);
    }
  for (const auto& i : a.individuals()) {
    individuals_[i] = static_cast<int>(nodes_.size());
    Node n;
    n.name = i;
    n.individual = true;
    n.type = k_->empty_type();
    n.extra = Bits(foreign_concept_names_.size());
    nodes_.push_back(std::move(n));
  }
  std::vector<Bits> seed(nodes_.size(), k_->empty_type());
  for (const auto& c : a.concept_assertions()) {
    int id = concept_local(c.concept_name);
    int n = individuals_.at(c.var);
    if (id < nc_)
      seed[n].set(id);
    else
      nodes_[n].extra.set(id - nc_);
  }
  for (const auto& r : a.role_assertions())
    add_edge(individuals_.at(r.from), individuals_.at(r.to), role_local(Role(r.role)));
  for (std::size_t n = 0; n < nodes_.size(); ++n)
    for (const auto& l : nodes_[n].links)
      l.roles.for_each([&](std::size_t r) {
        if (static_cast<int>(r) < kr_) seed[n].set(k_->exists(r));
      });

  // functional roles pass requirements between named individuals
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t n = 0; n < nodes_.size(); ++n) {
      const auto& c = k_->closure(seed[n]);
      if (c.unsat) {
        consistent_ = false;
        return;
      }
      for (const auto& l : nodes_[n].links)
        l.roles.for_each([&](std::size_t r) {
          if (static_cast<int>(r) >= kr_ || !k_->func(r)) return;
          Bits req = k_->empty_type();
          k_->requirements(c.type, r, req);
          if (!req.subset_of(seed[l.to])) {
            seed[l.to] |= req;
            changed = true;
          }
        });
    }
  }
  for (std::size_t n = 0; n < nodes_.size(); ++n) {
    nodes_[n].type = k_->closure(seed[n]).type;
    for (int r = 0; r < kr_; ++r) {
      if (!k_->func(r)) continue;
      int count = 0;
      for (const auto& l : nodes_[n].links)
        if (l.roles.test(r)) ++count;
      if (count > 1) consistent_ = false;
    }
    for (const auto& l : nodes_[n].links)
      for (auto [x, y] : k_->role_disjoint_pairs())
        if (l.roles.test(x) && l.roles.test(y)) consistent_ = false;
  }
}

int ModelImpl::node_of(const std::string& ind) const {
  auto it = individuals_.find(ind);
  return it == individuals_.end() ? -1 : it->second;
}

int ModelImpl::concept_local(const std::string& name) const {
  int id = k_->concept_id(name);
  if (id >= 0) return id;
  auto it = foreign_concepts_.find(name);
  return it == foreign_concepts_.end() ? -1 : nc_ + it->second;
}

int ModelImpl::role_local(const Role& r) const {
  int id = k_->role_index(r);
  if (id >= 0) return id;
  auto it = foreign_roles_.find(r.name);
  return it == foreign_roles_.end() ? -1 : kr_ + 2 * it->second + (r.inverted ? 1 : 0);
}

Role ModelImpl::role_of_local(int idx) const {
  if (idx < kr_) return k_->role(idx);
  int f = (idx - kr_) / 2;
  return Role(foreign_role_names_[f], (idx - kr_) & 1);
}

ModelImpl::Link& ModelImpl::link(int a, int b) {
  for (auto& l : nodes_[a].links)
    if (l.to == b) return l;
  nodes_[a].links.push_back({b, role_set()});
  return nodes_[a].links.back();
}

const ModelImpl::Link* ModelImpl::find_link(int a, int b) const {
  for (const auto& l : nodes_[a].links)
    if (l.to == b) return &l;
  return nullptr;
}

void ModelImpl::add_edge(int a, int b, int role) {
  if (role < kr_) {
    k_->up(role).for_each([&](std::size_t s) {
      link(a, b).roles.set(s);
      link(b, a).roles.set(Kernel::inv(s));
    });
  } else {
    link(a, b).roles.set(role);
    link(b, a).roles.set(role ^ 1);
  }
}

bool ModelImpl::has_neighbor_with(int n, int role) const {
  for (const auto& l : nodes_[n].links)
    if (l.roles.test(role)) return true;
  return false;
}

int ModelImpl::add_child(int n, int role, const Bits& type) {
  Node c;
  c.parent = n;
  c.depth = nodes_[n].depth + 1;
  c.name = nodes_[n].name + "/" + k_->role(role).str() + ":" + std::to_string(nodes_[n].links.size());
  c.type = type;
  int id = static_cast<int>(nodes_.size());
  nodes_.push_back(std::move(c));
  add_edge(n, id, role);
  return id;
}

void ModelImpl::expand(int n) {
  if (nodes_[n].expanded) return;
  if (max_depth_ >= 0 && nodes_[n].depth >= max_depth_) return;
  nodes_[n].expanded = true;
  const Bits t = nodes_[n].type;
  auto dominated = [&](int role, const Bits& type) {
    for (const auto& l : nodes_[n].links)
      if (l.roles.test(role) && type.subset_of(nodes_[l.to].type)) return true;
    return false;
  };
  for (int r = 0; r < kr_; ++r) {
    if (!t.test(k_->exists(r))) continue;
    auto seeds = k_->successor_seeds(t, r);
    if (k_->func(r)) {
      if (!has_neighbor_with(n, r)) add_child(n, r, k_->closure(seeds.front()).type);
      continue;
    }
    std::vector<const Bits*> types;
    for (std::size_t i = 1; i < seeds.size(); ++i) types.push_back(&k_->closure(seeds[i]).type);
    std::stable_sort(types.begin(), types.end(), [](const Bits* x, const Bits* y) {
      std::size_t cx = 0, cy = 0;
      x->for_each([&](std::size_t) { ++cx; });
      y->for_each([&](std::size_t) { ++cy; });
      return cx > cy;
    });
    for (const auto* type : types)
      if (!dominated(r, *type)) add_child(n, r, *type);
  }
  for (int r = 0; r < kr_; ++r) {
    if (!t.test(k_->exists(r)) || has_neighbor_with(n, r)) continue;
    add_child(n, r, k_->closure(k_->successor_seeds(t, r).front()).type);
  }
}

std::set<std::string> ModelImpl::concepts_of(int node) const {
  std::set<std::string> out;
  const auto& nd = nodes_[node];
  for (int c = 0; c < nc_; ++c)
    if (nd.type.test(c)) out.insert(k_->concept_name(c));
  if (nd.individual) nd.extra.for_each([&](std::size_t i) { out.insert(foreign_concept_names_[i]); });
  return out;
}

std::vector<ModelNeighbor> ModelImpl::neighbors(int node) {
  expand(node);
  std::vector<ModelNeighbor> out;
  for (std::size_t i = 0; i < nodes_[node].links.size(); ++i) {
    const auto& l = nodes_[node].links[i];
    ModelNeighbor nb;
    nb.node = l.to;
    l.roles.for_each([&](std::size_t r) { nb.roles.insert(role_of_local(r)); });
    nb.concepts = concepts_of(l.to);
    if (nodes_[l.to].individual) nb.individual = nodes_[l.to].name;
    out.push_back(std::move(nb));
  }
  return out;
}

ModelImpl::Compiled ModelImpl::compile(const CQ& q) const {
  Compiled c;
  std::map<std::string, int> id;
  for (const auto& v : q.vars()) {
    id[v] = static_cast<int>(c.names.size());
    c.names.push_back(v);
  }
  int n = static_cast<int>(c.names.size());
  c.concepts.resize(n);
  for (const auto& a : q.concept_atoms()) {
    int lc = concept_local(a.concept_name);
    if (lc < 0) c.impossible = true;
    c.concepts[id[a.var]].push_back(lc);
  }
  std::vector<std::map<int, Bits>> adj(n);
  bool self_loop = false;
  for (const auto& a : q.role_atoms()) {
    int lr = role_local(Role(a.role));
    if (lr < 0) {
      c.impossible = true;
      continue;
    }
    int x = id[a.from], y = id[a.to];
    if (x == y) self_loop = true;
    adj[x].try_emplace(y, role_set()).first->second.set(lr);
    adj[y].try_emplace(x, role_set()).first->second.set(lr ^ 1);
  }
  c.adj.resize(n);
  std::size_t pairs = 0;
  for (int v = 0; v < n; ++v)
    for (auto& [w, roles] : adj[v]) {
      c.adj[v].push_back({w, roles});
      if (w > v) ++pairs;
    }
  c.tree = !self_loop && pairs + 1 == static_cast<std::size_t>(n);
  return c;
}

bool ModelImpl::holds(int var, int node, const Compiled& cq) const {
  const auto& nd = nodes_[node];
  for (int c : cq.concepts[var]) {
    if (c < nc_) {
      if (!nd.type.test(c)) return false;
    } else if (!nd.individual || !nd.extra.test(c - nc_)) {
      return false;
    }
  }
  return true;
}

bool ModelImpl::tree_match(int v, int x, int pv, const Compiled& cq) {
  uint64_t key = (static_cast<uint64_t>(v) << 32) | static_cast<uint32_t>(x);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  bool ok = holds(v, x, cq);
  if (ok) {
    for (const auto& [w, roles] : cq.adj[v]) {
      if (w == pv) continue;
      expand(x);
      bool found = false;
      for (std::size_t i = 0; i < nodes_[x].links.size() && !found; ++i) {
        int y = nodes_[x].links[i].to;
        if (roles.subset_of(nodes_[x].links[i].roles) && tree_match(w, y, v, cq)) found = true;
      }
      if (!found) {
        ok = false;
        break;
      }
    }
  }
  memo_[key] = ok;
  return ok;
}

bool ModelImpl::backtrack(std::size_t i, const std::vector<int>& order, const std::vector<int>& parent,
                          std::vector<int>& assign, const Compiled& cq) {
  if (i == order.size()) return true;
  int v = order[i];
  int p = parent[v];
  int x = assign[p];
  expand(x);
  const Bits* req = nullptr;
  for (const auto& [w, roles] : cq.adj[p])
    if (w == v) req = &roles;
  for (std::size_t li = 0; li < nodes_[x].links.size(); ++li) {
    if (!req->subset_of(nodes_[x].links[li].roles)) continue;
    int y = nodes_[x].links[li].to;
    if (!holds(v, y, cq)) continue;
    expand(y);
    bool ok = true;
    for (const auto& [w, roles] : cq.adj[v]) {
      int target = w == v ? y : assign[w];
      if (target < 0) continue;
      const Link* l = find_link(y, target);
      if (!l || !roles.subset_of(l->roles)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    assign[v] = y;
    if (backtrack(i + 1, order, parent, assign, cq)) return true;
    assign[v] = -1;
  }
  return false;
}

bool ModelImpl::entails(const CQ& q, const std::string& ind) {
  if (!consistent_) return true;
  int x = node_of(ind);
  if (x < 0) throw Error("unknown_individual", "individual '" + ind + "' is not in the ABox");
  Compiled cq = compile(q);
  if (cq.impossible) return false;
  int root = 0;
  while (cq.names[root] != q.answer_var()) ++root;
  int n = static_cast<int>(cq.names.size());
  std::vector<int> order{root}, parent(n, -1);
  std::vector<bool> seen(n, false);
  seen[root] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (const auto& [w, roles] : cq.adj[order[i]])
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = order[i];
        order.push_back(w);
      }
  if (static_cast<int>(order.size()) != n)
    throw Error("not_connected", "query variables must be connected to the answer variable");
  if (cq.tree) {
    memo_.clear();
    bool r = tree_match(root, x, -1, cq);
    memo_.clear();
    return r;
  }
  if (!holds(root, x, cq)) return false;
  std::vector<int> assign(n, -1);
  assign[root] = x;
  for (const auto& [w, roles] : cq.adj[root])
    if (w == root) {
      const Link* l = find_link(x, x);
      if (!l || !roles.subset_of(l->roles)) return false;
    }
  return backtrack(1, order, parent, assign, cq);
}

ModelPrefix ModelImpl::prefix(int depth) {
  ModelPrefix p;
  p.consistent = consistent_;
  if (!consistent_) return p;
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].depth < depth) expand(static_cast<int>(i));
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& nd = nodes_[i];
    if (nd.depth > depth) continue;
    auto cs = concepts_of(static_cast<int>(i));
    p.nodes.push_back({static_cast<int>(i), nd.name, nd.depth, {cs.begin(), cs.end()}});
    for (const auto& l : nd.links) {
      if (nodes_[l.to].depth > depth) continue;
      l.roles.for_each([&](std::size_t r) {
        Role role = role_of_local(r);
        if (!role.inverted) p.edges.push_back({static_cast<int>(i), l.to, role.name});
      });
    }
  }
  std::sort(p.edges.begin(), p.edges.end(), [](const PrefixEdge& a, const PrefixEdge& b) {
    return std::tie(a.from, a.to, a.role) < std::tie(b.from, b.to, b.role);
  });
  return p;
}

}  // namespace eliq::detail

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eliq/frontier.hpp"
#include "eliq/reasoner.hpp"

namespace eliq::detail {

// Query under construction. Every edge is oriented away from the root and
// `role` is the role from the parent to the node.
struct FNode {
  std::string name;
  std::set<std::string> concepts;
  int down = -1;  // node of the source query, -1 if undefined
  int parent = -1;
  Role role;
  std::vector<int> children;
};

struct FTree {
  std::vector<FNode> nodes;  // nodes[0] is the root

  int add(int parent, const Role& role, std::string name, int down);
  std::size_t size() const { return nodes.size(); }
};

// Source query as a rooted tree.
struct QNode {
  std::string name;
  std::set<std::string> concepts;
  int parent = -1;
  Role role;
  std::vector<int> children;
  std::vector<std::pair<Role, int>> adj;  // (role from this node, neighbour)
};

struct Candidate {
  FTree tree;
  std::string provenance;
};

// Generalisation and compensation for one normal-form ontology and one
// saturated, minimal ELIQ.
class FrontierBuilder {
 public:
  FrontierBuilder(const Reasoner& normal, const CQ& q, bool f_dialect, bool reverse_order);

  const std::vector<QNode>& query() const { return q_; }
  int index_of(const std::string& var) const;

  const std::vector<Candidate>& generalize(int x);
  FTree compensate(FTree p) const { return f_ ? compensate_f(std::move(p)) : compensate_r(std::move(p)); }
  FTree compensate_r(FTree p) const;
  FTree compensate_f(FTree p) const;

  CQ to_cq(const FTree& t) const;
  GenCandidate to_candidate(const Candidate& c) const;
  FTree from_candidate(const GenCandidate& c) const;

 private:
  FTree subtree(int x, int skip) const;
  void copy_q(FTree& t, int anchor, const Role& role, int y, const std::string& suffix) const;
  void graft(FTree& t, int anchor, int v, const std::string& suffix) const;
  bool guard(const Role& s, const std::set<std::string>& concepts) const;
  bool has_q_neighbor(int v, const Role& r) const;
  bool func(const Role& r) const { return r_.ontology().functional_role(r); }

  const Reasoner& r_;
  bool f_;
  bool reverse_;
  CQ source_;
  std::vector<QNode> q_;
  std::vector<std::string> names_;  // concept names of the ontology
  std::vector<Role> roles_;         // roles of the ontology, both directions
  std::map<Role, std::vector<Role>> sup_;
  std::map<Role, std::set<std::string>> implied_;  // names entailed by some R
  // Successor labels not realised inside the query, per variable and role:
  // singletons or the empty set (top) for R, maximal sets for F.
  std::vector<std::map<Role, std::vector<std::set<std::string>>>> leads_;
  std::vector<std::map<int, std::vector<Role>>> links_;  // entailed roles between neighbours
  std::vector<std::optional<std::vector<Candidate>>> memo_;
};

std::string serialize(const FTree& t);

}  // namespace eliq::detail

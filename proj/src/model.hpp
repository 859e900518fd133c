#pragma once

#include <deque>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "bits.hpp"
#include "eliq/reasoner.hpp"
#include "kernel.hpp"

namespace eliq::detail {

class ModelImpl {
 public:
  struct Link {
    int to;
    Bits roles;  // local role indices
  };
  struct Node {
    int parent = -1;
    int depth = 0;
    std::string name;
    bool individual = false;
    Bits type;   // kernel basic concepts
    Bits extra;  // concept names outside the ontology (individuals only)
    std::vector<Link> links;
    bool expanded = false;
  };

  ModelImpl(std::shared_ptr<const Kernel> k, const ABox& a, int max_depth);

  bool consistent() const { return consistent_; }
  int node_of(const std::string& ind) const;
  bool entails(const CQ& q, const std::string& ind);
  std::set<std::string> concepts_of(int node) const;
  std::vector<ModelNeighbor> neighbors(int node);
  ModelPrefix prefix(int depth);

 private:
  struct Compiled {
    std::vector<std::string> names;
    std::vector<std::vector<int>> concepts;
    std::vector<std::vector<std::pair<int, Bits>>> adj;
    bool impossible = false;
    bool tree = false;
  };

  int concept_local(const std::string& name) const;
  int role_local(const Role& r) const;
  Role role_of_local(int idx) const;
  Bits role_set() const { return Bits(kr_ + 2 * foreign_roles_.size()); }
  void add_edge(int a, int b, int role);
  Link& link(int a, int b);
  const Link* find_link(int a, int b) const;
  bool has_neighbor_with(int n, int role) const;
  void expand(int n);
  int add_child(int n, int role, const Bits& type);
  bool holds(int var, int node, const Compiled& cq) const;
  Compiled compile(const CQ& q) const;
  bool tree_match(int v, int x, int pv, const Compiled& cq);
  bool backtrack(std::size_t i, const std::vector<int>& order, const std::vector<int>& parent,
                 std::vector<int>& assign, const Compiled& cq);

  std::shared_ptr<const Kernel> k_;
  int nc_;
  int kr_;
  int max_depth_;
  bool consistent_ = true;
  std::deque<Node> nodes_;
  std::map<std::string, int> individuals_;
  std::map<std::string, int> foreign_concepts_;
  std::map<std::string, int> foreign_roles_;
  std::vector<std::string> foreign_concept_names_;
  std::vector<std::string> foreign_role_names_;
  std::unordered_map<uint64_t, bool> memo_;
};

}  // namespace eliq::detail

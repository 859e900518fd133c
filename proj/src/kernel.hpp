#pragma once

#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "bits.hpp"
#include "eliq/syntax.hpp"

namespace eliq::detail {

// Type reasoner over a normal-form ontology. Basic concepts are indexed as
// concept names [0, nc) followed by "some R" for every role R, where a role
// index is 2 * name + inverted. Index -1 stands for top.
class Kernel {
 public:
  static constexpr int kTop = -1;

  struct Closure {
    Bits type;
    bool unsat = false;
  };

  explicit Kernel(const Ontology& normal);

  int concepts() const { return static_cast<int>(concept_names_.size()); }
  int roles() const { return 2 * static_cast<int>(role_names_.size()); }
  int basics() const { return concepts() + roles(); }
  int exists(int role) const { return concepts() + role; }
  static int inv(int role) { return role ^ 1; }

  int concept_id(const std::string& name) const;
  int role_id(const std::string& name) const;  // role name index, -1 if unknown
  int role_index(const Role& r) const;         // -1 if unknown
  int basic_index(const BasicConcept& b) const;  // -2 if unknown
  const std::string& concept_name(int id) const { return concept_names_[id]; }
  Role role(int idx) const { return Role(role_names_[idx / 2], idx & 1); }
  bool fresh(int c) const { return fresh_[c]; }
  void mark_fresh(const std::string& name);

  const Bits& up(int role) const { return up_[role]; }
  bool func(int role) const { return func_[role]; }
  const std::vector<std::pair<int, int>>& role_disjoint_pairs() const { return role_disj_; }

  Bits empty_type() const { return Bits(basics()); }
  // Least closure of `seed`, including consequences of the anonymous
  // successors it forces. Thread-safe; returned references stay valid.
  const Closure& closure(const Bits& seed) const;
  // Seeds of the anonymous successors forced along `role` by `type`.
  std::vector<Bits> successor_seeds(const Bits& type, int role) const;
  // Concept names required of every role-successor of an element of `type`.
  void requirements(const Bits& type, int role, Bits& into) const;

  bool entails(int b1, int b2) const;
  bool satisfiable(int b) const;

 private:
  struct ExistsCi {
    int lhs;  // concept name or kTop
    int role;
    int filler;  // concept name or kTop
  };
  struct Entry {
    Closure c;
    bool final = false;
  };

  void atomic_close(Bits& t) const;
  bool clash(const Bits& t) const;
  Entry& entry(const Bits& seed, std::vector<Bits>& pending) const;
  bool recompute(const Bits& key, std::vector<Bits>& pending) const;

  std::vector<std::string> concept_names_;
  std::vector<std::string> role_names_;
  std::map<std::string, int> concept_ids_;
  std::map<std::string, int> role_ids_;
  std::vector<bool> fresh_;
  std::vector<std::pair<int, int>> atomic_cis_;  // basic (or kTop) -> concept name
  std::vector<ExistsCi> exists_cis_;
  std::vector<Bits> up_;
  std::vector<bool> func_;
  std::vector<bool> role_unsat_;
  std::vector<std::pair<int, int>> concept_disj_;  // basic indices, kTop allowed
  std::vector<std::pair<int, int>> role_disj_;     // both orientations

  mutable std::mutex mu_;
  mutable std::unordered_map<Bits, Entry, BitsHash> table_;
};

}  // namespace eliq::detail

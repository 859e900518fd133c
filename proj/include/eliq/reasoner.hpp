#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "eliq/normal_form.hpp"
#include "eliq/syntax.hpp"

namespace eliq {

namespace detail {
class Kernel;
class ModelImpl;
}  // namespace detail

// Neighbour of an element in a universal model.
struct ModelNeighbor {
  int node;
  std::set<Role> roles;  // roles R with R(element, neighbour)
  std::set<std::string> concepts;
  std::string individual;  // empty for anonymous elements
};

struct PrefixNode {
  int id;
  std::string name;
  int depth;
  std::vector<std::string> concepts;
};

struct PrefixEdge {
  int from, to;
  std::string role;
};

struct ModelPrefix {
  bool consistent = true;
  std::vector<PrefixNode> nodes;
  std::vector<PrefixEdge> edges;
};

// Universal model of an ABox, materialised on demand. Not thread-safe.
class UniversalModel {
 public:
  UniversalModel(std::shared_ptr<const detail::Kernel> kernel, const ABox& a, int max_depth = -1);
  ~UniversalModel();
  UniversalModel(UniversalModel&&) noexcept;
  UniversalModel& operator=(UniversalModel&&) noexcept;

  bool consistent() const;
  int node_of(const std::string& individual) const;  // -1 if absent
  // True iff q has a homomorphism into the model mapping its answer
  // variable to `individual`; vacuously true for inconsistent ABoxes.
  bool entails(const CQ& q, const std::string& individual);
  std::set<std::string> concepts_of(int node) const;
  std::vector<ModelNeighbor> neighbors(int node);
  ModelPrefix prefix(int depth);

 private:
  std::unique_ptr<detail::ModelImpl> impl_;
};

class Reasoner {
 public:
  explicit Reasoner(const Ontology& o);

  const Ontology& ontology() const { return ontology_; }
  const NormalForm& normal_form() const { return nf_; }
  Dialect dialect() const { return dialect_; }
  const std::shared_ptr<const detail::Kernel>& kernel() const { return kernel_; }

  bool entails(const BasicConcept& b1, const BasicConcept& b2) const;
  bool entails(const Role& r1, const Role& r2) const;
  bool satisfiable(const BasicConcept& b) const;
  bool satisfiable(const ABox& a) const;
  bool satisfiable(const CQ& q) const { return satisfiable(q.to_abox()); }
  // Concept names of the ontology entailed for `individual`.
  std::set<std::string> entailed_concepts(const ABox& a, const std::string& individual,
                                          bool include_fresh = false) const;

  UniversalModel model(const ABox& a, int max_depth = -1) const;
  bool certain_answer(const ABox& a, const CQ& q, const std::string& individual) const;
  bool certain_answer(const ABox& a, const CQ& q, const std::string& individual, int max_depth) const;

  bool contained(const CQ& q1, const CQ& q2) const;
  bool equivalent(const CQ& q1, const CQ& q2) const;
  CQ saturate(const CQ& q, bool include_fresh = false) const;
  CQ minimize_eliq(const CQ& q) const;
  bool is_minimal(const CQ& q) const;

 private:
  void require_satisfiable(const CQ& q) const;

  Ontology ontology_;
  NormalForm nf_;
  Dialect dialect_;
  std::shared_ptr<const detail::Kernel> kernel_;
};

bool entails_basic(const Ontology& o, const BasicConcept& b1, const BasicConcept& b2);
bool entails_role(const Ontology& o, const Role& r1, const Role& r2);
bool satisfiable(const Ontology& o, const ABox& a);
bool certain_answer(const Ontology& o, const ABox& a, const CQ& q, const std::string& individual);
bool contained(const Ontology& o, const CQ& q1, const CQ& q2);
bool equivalent(const Ontology& o, const CQ& q1, const CQ& q2);
CQ saturate(const Ontology& o, const CQ& q);
CQ minimize_eliq(const Ontology& o, const CQ& q);
ModelPrefix universal_prefix(const Ontology& o, const ABox& a, int depth);

// All ELIQs over `sig` with at most `max_vars` variables, one per
// isomorphism class, with answer variable x0.
std::vector<CQ> enumerate_eliqs(const Signature& sig, int max_vars);

}  // namespace eliq

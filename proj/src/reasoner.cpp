#include "eliq/reasoner.hpp"

#include <map>

#include "eliq/io.hpp"
#include "kernel.hpp"
#include "model.hpp"

namespace eliq {

UniversalModel::UniversalModel(std::shared_ptr<const detail::Kernel> kernel, const ABox& a, int max_depth)
    : impl_(std::make_unique<detail::ModelImpl>(std::move(kernel), a, max_depth)) {}
UniversalModel::~UniversalModel() = default;
UniversalModel::UniversalModel(UniversalModel&&) noexcept = default;
UniversalModel& UniversalModel::operator=(UniversalModel&&) noexcept = default;

bool UniversalModel::consistent() const { return impl_->consistent(); }
int UniversalModel::node_of(const std::string& individual) const { return impl_->node_of(individual); }
bool UniversalModel::entails(const CQ& q, const std::string& individual) {
  return impl_->entails(q, individual);
}
std::set<std::string> UniversalModel::concepts_of(int node) const { return impl_->concepts_of(node); }
std::vector<ModelNeighbor> UniversalModel::neighbors(int node) { return impl_->neighbors(node); }
ModelPrefix UniversalModel::prefix(int depth) { return impl_->prefix(depth); }

Reasoner::Reasoner(const Ontology& o) : ontology_(o), nf_(normalize(o)), dialect_(dialect_of(o)) {
  auto k = std::make_shared<detail::Kernel>(nf_.ontology);
  for (const auto& [x, c] : nf_.fresh) k->mark_fresh(x);
  kernel_ = std::move(k);
}

bool Reasoner::entails(const BasicConcept& b1, const BasicConcept& b2) const {
  if (b1 == b2 || b2.kind == BasicConcept::Kind::Top) return true;
  int x = kernel_->basic_index(b1);
  if (x == -2) return false;
  int y = kernel_->basic_index(b2);
  if (y == -2) return !kernel_->satisfiable(x);
  return kernel_->entails(x, y);
}

bool Reasoner::entails(const Role& r1, const Role& r2) const {
  if (r1 == r2) return true;
  int x = kernel_->role_index(r1);
  if (x < 0) return false;
  if (!kernel_->satisfiable(kernel_->exists(x))) return true;
  int y = kernel_->role_index(r2);
  return y >= 0 && kernel_->up(x).test(y);
}

bool Reasoner::satisfiable(const BasicConcept& b) const {
  int x = kernel_->basic_index(b);
  return x == -2 || kernel_->satisfiable(x);
}

UniversalModel Reasoner::model(const ABox& a, int max_depth) const {
  if (dialect_ == Dialect::RF)
    throw Error("unsupported_dialect", "universal models are not supported with both role inclusions and functionality");
  return UniversalModel(kernel_, a, max_depth);
}

bool Reasoner::satisfiable(const ABox& a) const { return model(a, 0).consistent(); }

std::set<std::string> Reasoner::entailed_concepts(const ABox& a, const std::string& individual,
                                                  bool include_fresh) const {
  auto m = model(a, 0);
  int n = m.node_of(individual);
  if (n < 0) throw Error("unknown_individual", "individual '" + individual + "' is not in the ABox");
  std::set<std::string> out;
  for (const auto& c : m.concepts_of(n)) {
    int id = kernel_->concept_id(c);
    if (include_fresh || id < 0 || !kernel_->fresh(id)) out.insert(c);
  }
  return out;
}

bool Reasoner::certain_answer(const ABox& a, const CQ& q, const std::string& individual) const {
  return model(a).entails(q, individual);
}

bool Reasoner::certain_answer(const ABox& a, const CQ& q, const std::string& individual, int max_depth) const {
  return model(a, max_depth).entails(q, individual);
}

void Reasoner::require_satisfiable(const CQ& q) const {
  if (!satisfiable(q)) throw Error("unsatisfiable", "query is unsatisfiable: " + to_string(q));
}

bool Reasoner::contained(const CQ& q1, const CQ& q2) const {
  require_satisfiable(q1);
  require_satisfiable(q2);
  return model(q1.to_abox()).entails(q2, q1.answer_var());
}

bool Reasoner::equivalent(const CQ& q1, const CQ& q2) const { return contained(q1, q2) && contained(q2, q1); }

CQ Reasoner::saturate(const CQ& q, bool include_fresh) const {
  require_satisfiable(q);
  auto a = q.to_abox();
  auto m = model(a, 0);
  CQ out = q;
  for (const auto& v : q.vars())
    for (const auto& c : m.concepts_of(m.node_of(v))) {
      int id = kernel_->concept_id(c);
      if (include_fresh || id < 0 || !kernel_->fresh(id)) out.add_concept(c, v);
    }
  return out;
}

CQ Reasoner::minimize_eliq(const CQ& q) const {
  if (!q.is_eliq()) throw Error("not_an_eliq", "minimization expects an ELIQ");
  CQ cur = saturate(q);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::string, int> degree;
    for (const auto& a : cur.role_atoms()) {
      ++degree[a.from];
      ++degree[a.to];
    }
    for (const auto& v : cur.vars()) {
      if (v == cur.answer_var() || degree[v] != 1) continue;
      auto keep = cur.vars();
      keep.erase(v);
      CQ smaller = cur.restrict_to(keep);
      if (model(smaller.to_abox()).entails(cur, cur.answer_var())) {
        cur = std::move(smaller);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

bool Reasoner::is_minimal(const CQ& q) const {
  for (const auto& v : q.vars()) {
    if (v == q.answer_var()) continue;
    auto keep = q.vars();
    keep.erase(v);
    if (model(q.restrict_to(keep).to_abox()).entails(q, q.answer_var())) return false;
  }
  return true;
}

bool entails_basic(const Ontology& o, const BasicConcept& b1, const BasicConcept& b2) {
  return Reasoner(o).entails(b1, b2);
}
bool entails_role(const Ontology& o, const Role& r1, const Role& r2) { return Reasoner(o).entails(r1, r2); }
bool satisfiable(const Ontology& o, const ABox& a) { return Reasoner(o).satisfiable(a); }
bool certain_answer(const Ontology& o, const ABox& a, const CQ& q, const std::string& individual) {
  return Reasoner(o).certain_answer(a, q, individual);
}
bool contained(const Ontology& o, const CQ& q1, const CQ& q2) { return Reasoner(o).contained(q1, q2); }
bool equivalent(const Ontology& o, const CQ& q1, const CQ& q2) { return Reasoner(o).equivalent(q1, q2); }
CQ saturate(const Ontology& o, const CQ& q) { return Reasoner(o).saturate(q); }
CQ minimize_eliq(const Ontology& o, const CQ& q) { return Reasoner(o).minimize_eliq(q); }
ModelPrefix universal_prefix(const Ontology& o, const ABox& a, int depth) {
  return Reasoner(o).model(a, depth).prefix(depth);
}

}  // namespace eliq

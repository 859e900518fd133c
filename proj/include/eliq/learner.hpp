#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eliq/normal_form.hpp"
#include "eliq/reasoner.hpp"
#include "eliq/syntax.hpp"

namespace eliq {

// Answers "does `individual` answer the hidden target on this ABox?". Every
// call to answer() is counted.
class MembershipOracle {
 public:
  virtual ~MembershipOracle() = default;
  bool answer(const ABox& a, const std::string& individual) {
    ++count_;
    return decide(a, individual);
  }
  std::size_t query_count() const { return count_; }

 protected:
  virtual bool decide(const ABox& a, const std::string& individual) = 0;

 private:
  std::size_t count_ = 0;
};

// Certain answers of a known target under a known ontology.
class SimulatedOracle : public MembershipOracle {
 public:
  SimulatedOracle(const Ontology& o, CQ target);
  const CQ& target() const { return target_; }

 protected:
  bool decide(const ABox& a, const std::string& individual) override;

 private:
  Reasoner reasoner_;
  CQ target_;
};

class CallbackOracle : public MembershipOracle {
 public:
  explicit CallbackOracle(std::function<bool(const ABox&, const std::string&)> f) : f_(std::move(f)) {}

 protected:
  bool decide(const ABox& a, const std::string& individual) override { return f_(a, individual); }

 private:
  std::function<bool(const ABox&, const std::string&)> f_;
};

enum class LearnOutcome { Success, BudgetExceeded };
std::string to_string(LearnOutcome o);

struct LearnTrace {
  std::vector<CQ> hypotheses;  // treeify output, then one per accepted frontier member
  std::size_t membership_queries = 0;
  std::vector<std::size_t> frontier_sizes;
  LearnOutcome outcome = LearnOutcome::Success;
  std::optional<CQ> result() const;
};

// Single-variable loop query, or one Hamilton cycle per role of a complete
// graph when o has role disjointness. `extra` adds names the target may use
// beyond sig(o). Unsatisfiable names are left out.
CQ seed_query(const Ontology& o, const Signature& extra = {});

// The oracle is only asked about ABoxes of the form A_q with answer x0.
CQ minimize_cq(const Ontology& o, MembershipOracle& oracle, const CQ& q);
CQ treeify(const Ontology& o, MembershipOracle& oracle, const CQ& q);

LearnTrace learn(const Ontology& o, MembershipOracle& oracle, const CQ& seed, std::size_t budget);
// For ontologies that are not in normal form: learns over the normal form
// and translates every ABox back before it reaches the oracle. Hypotheses
// in the trace are translated back too.
LearnTrace learn_with_normal_form(const Ontology& o, MembershipOracle& oracle, const CQ& seed,
                                  std::size_t budget);

// Replaces each fresh-name assertion X_C(b) by a tree for C(b), reusing
// existing successors along functional roles of o.
ABox translate_abox(const NormalForm& nf, const Ontology& o, const ABox& a);
bool respects_functionality(const Ontology& o, const ABox& a);

// 10 * (|var(target)| * (size(o) + |sig(o) + sig(target)|))^2
std::size_t default_budget(const Ontology& o, const CQ& target);

}  // namespace eliq

#pragma once

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eliq {

// Failure with a machine-readable reason code ("parse_error", "not_an_eliq",
// "unsatisfiable", "wrong_dialect", "not_f_restricted", "seed_required", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Role {
  std::string name;
  bool inverted = false;

  Role() = default;
  Role(std::string n, bool inv = false) : name(std::move(n)), inverted(inv) {}
  Role inverse() const { return Role(name, !inverted); }
  std::string str() const { return inverted ? name + "-" : name; }
  auto operator<=>(const Role&) const = default;
};

struct BasicConcept {
  enum class Kind { Top, Atomic, Exists };
  Kind kind = Kind::Top;
  std::string name;  // Atomic
  Role role;         // Exists

  static BasicConcept top() { return {}; }
  static BasicConcept atomic(std::string n) { return {Kind::Atomic, std::move(n), {}}; }
  static BasicConcept exists(Role r) { return {Kind::Exists, {}, std::move(r)}; }
  std::string str() const;
  auto operator<=>(const BasicConcept&) const = default;
};

// ELI concept. Conjunctions are kept flat, sorted and without duplicates or
// top conjuncts, so structural equality is equality up to AC of conjunction.
struct EliConcept {
  enum class Kind { Top, Atomic, And, Exists };
  Kind kind = Kind::Top;
  std::string name;               // Atomic
  Role role;                      // Exists
  std::vector<EliConcept> args;   // And: conjuncts, Exists: single filler

  static EliConcept top() { return {}; }
  static EliConcept atomic(std::string n);
  static EliConcept exists(Role r, EliConcept filler = top());
  static EliConcept conj(std::vector<EliConcept> parts);
  static EliConcept from_basic(const BasicConcept& b);

  const EliConcept& filler() const { return args.front(); }
  bool is_name_or_top() const { return kind == Kind::Top || kind == Kind::Atomic; }
  std::size_t size() const;
  std::string str() const;
  std::strong_ordering operator<=>(const EliConcept& o) const;
  bool operator==(const EliConcept& o) const { return (*this <=> o) == 0; }
};

struct ConceptInclusion {
  BasicConcept lhs;
  EliConcept rhs;
  std::string str() const;
  auto operator<=>(const ConceptInclusion&) const = default;
};

struct RoleInclusion {
  Role sub, sup;
  auto operator<=>(const RoleInclusion&) const = default;
};

struct ConceptDisjointness {
  BasicConcept first, second;
  auto operator<=>(const ConceptDisjointness&) const = default;
};

struct RoleDisjointness {
  Role first, second;
  auto operator<=>(const RoleDisjointness&) const = default;
};

struct Signature {
  std::set<std::string> concepts;
  std::set<std::string> roles;

  void merge(const Signature& other);
  std::size_t size() const { return concepts.size() + roles.size(); }
  bool operator==(const Signature&) const = default;
};

enum class Dialect { Core, R, F, FRestricted, RF };
std::string to_string(Dialect d);

class Ontology {
 public:
  std::vector<ConceptInclusion> cis;
  std::vector<RoleInclusion> ris;
  std::vector<ConceptDisjointness> concept_disjointness;
  std::vector<RoleDisjointness> role_disjointness;
  std::set<Role> functional;

  bool functional_role(const Role& r) const { return functional.count(r) > 0; }
  bool empty() const;
  Signature signature() const;
  // Number of symbol occurrences; used for the polynomial bounds.
  std::size_t size() const;
  bool operator==(const Ontology&) const = default;
};

struct ConceptAtom {
  std::string concept_name;
  std::string var;
  auto operator<=>(const ConceptAtom&) const = default;
};

struct RoleAtom {
  std::string role;  // always a role name, inverses are flipped on insertion
  std::string from, to;
  auto operator<=>(const RoleAtom&) const = default;
};

class ABox;

// Unary conjunctive query. Top atoms are not stored; variables without atoms
// are kept in the variable set.
class CQ {
 public:
  CQ() : CQ("x0") {}
  explicit CQ(std::string answer_var);

  const std::string& answer_var() const { return answer_; }
  const std::set<std::string>& vars() const { return vars_; }
  const std::set<ConceptAtom>& concept_atoms() const { return concepts_; }
  const std::set<RoleAtom>& role_atoms() const { return roles_; }

  void add_var(const std::string& v) { vars_.insert(v); }
  void add_concept(const std::string& concept_name, const std::string& var);
  void add_role(const Role& r, const std::string& from, const std::string& to);
  bool remove_concept(const std::string& concept_name, const std::string& var);
  bool remove_role(const RoleAtom& atom);

  std::set<std::string> concepts_at(const std::string& var) const;
  std::size_t atom_count() const { return concepts_.size() + roles_.size(); }
  Signature signature() const;
  bool connected() const;
  bool is_eliq() const;
  // Induced subquery on `keep`; the answer variable is kept as is.
  CQ restrict_to(const std::set<std::string>& keep) const;
  // Variables reachable from the answer variable.
  std::set<std::string> component_of_answer() const;
  ABox to_abox() const;
  static CQ from_abox(const ABox& a, const std::string& individual);

  bool operator==(const CQ&) const = default;

 private:
  std::string answer_;
  std::set<std::string> vars_;
  std::set<ConceptAtom> concepts_;
  std::set<RoleAtom> roles_;
};

class ABox {
 public:
  const std::set<std::string>& individuals() const { return individuals_; }
  const std::set<ConceptAtom>& concept_assertions() const { return concepts_; }
  const std::set<RoleAtom>& role_assertions() const { return roles_; }

  void add_individual(const std::string& a) { individuals_.insert(a); }
  void add_concept(const std::string& concept_name, const std::string& a);
  void add_role(const Role& r, const std::string& a, const std::string& b);
  bool remove_concept(const std::string& concept_name, const std::string& a);
  Signature signature() const;
  bool operator==(const ABox&) const = default;

 private:
  std::set<std::string> individuals_;
  std::set<ConceptAtom> concepts_;
  std::set<RoleAtom> roles_;
};

// ELIQ <-> ELI concept. Variables of the produced query are x0, x1, ... in
// depth-first order.
EliConcept eliq_to_concept(const CQ& q);
CQ concept_to_eliq(const EliConcept& c, const std::string& answer_var = "x0");
// Answer variable becomes x0, the others x1, x2, ... in breadth-first order
// along role atoms (sorted), then any unreachable ones.
CQ rename_variables(const CQ& q);

}  // namespace eliq

#include "eliq/random.hpp"

#include "eliq/normal_form.hpp"

namespace eliq {

namespace {

int pick(Rng& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }
bool chance(Rng& rng, double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

std::string concept_name(int i) { return std::string(1, static_cast<char>('A' + i)); }
std::string role_name(int i) { return std::string(1, static_cast<char>('r' + i)); }

Role random_role(Rng& rng, int roles) { return Role(role_name(pick(rng, roles)), chance(rng, 0.5)); }

BasicConcept random_basic(Rng& rng, const RandomOntologyOptions& o) {
  if (o.role_names > 0 && chance(rng, 0.4)) return BasicConcept::exists(random_role(rng, o.role_names));
  return BasicConcept::atomic(concept_name(pick(rng, o.concept_names)));
}

EliConcept random_concept(Rng& rng, const RandomOntologyOptions& o, int depth) {
  int k = pick(rng, depth > 0 && o.role_names > 0 ? 4 : 2);
  switch (k) {
    case 0: return EliConcept::top();
    case 1: return EliConcept::atomic(concept_name(pick(rng, o.concept_names)));
    case 2:
      return EliConcept::conj({random_concept(rng, o, depth - 1), random_concept(rng, o, depth - 1)});
    default: return EliConcept::exists(random_role(rng, o.role_names), random_concept(rng, o, depth - 1));
  }
}

ConceptInclusion random_normal_ci(Rng& rng, const RandomOntologyOptions& o) {
  auto name = [&] { return concept_name(pick(rng, o.concept_names)); };
  int k = o.role_names > 0 ? pick(rng, 4) : 0;
  switch (k) {
    case 0: return {BasicConcept::atomic(name()), EliConcept::atomic(name())};
    case 1: return {BasicConcept::exists(random_role(rng, o.role_names)), EliConcept::atomic(name())};
    case 2: return {BasicConcept::atomic(name()), EliConcept::exists(random_role(rng, o.role_names))};
    default:
      return {BasicConcept::atomic(name()),
              EliConcept::exists(random_role(rng, o.role_names), EliConcept::atomic(name()))};
  }
}

}  // namespace

Signature small_signature(int concept_names, int role_names) {
  Signature s;
  for (int i = 0; i < concept_names; ++i) s.concepts.insert(concept_name(i));
  for (int i = 0; i < role_names; ++i) s.roles.insert(role_name(i));
  return s;
}

Ontology random_ontology(Rng& rng, const RandomOntologyOptions& opts) {
  Ontology o;
  int n = pick(rng, opts.max_statements + 1);
  for (int i = 0; i < n; ++i) {
    if (opts.normal_form || chance(rng, 0.5)) {
      o.cis.push_back(random_normal_ci(rng, opts));
    } else {
      o.cis.push_back({random_basic(rng, opts), random_concept(rng, opts, 2)});
    }
  }
  if (opts.dialect == Dialect::R && opts.role_names > 0) {
    int k = 1 + pick(rng, 2);
    for (int i = 0; i < k; ++i) {
      Role a = random_role(rng, opts.role_names), b = random_role(rng, opts.role_names);
      if (a != b) o.ris.push_back({a, b});
    }
  }
  if ((opts.dialect == Dialect::FRestricted || opts.dialect == Dialect::F) && opts.role_names > 0) {
    int k = 1 + pick(rng, 2);
    for (int i = 0; i < k; ++i) o.functional.insert(random_role(rng, opts.role_names));
    if (opts.dialect == Dialect::FRestricted) {
      auto bad = f_restriction_violations(o);
      std::erase_if(o.cis, [&](const ConceptInclusion& ci) {
        for (const auto& b : bad)
          if (b == ci) return true;
        return false;
      });
    }
  }
  if (chance(rng, opts.concept_disjointness))
    o.concept_disjointness.push_back({random_basic(rng, opts), random_basic(rng, opts)});
  if (opts.role_names > 0 && chance(rng, opts.role_disjointness))
    o.role_disjointness.push_back({random_role(rng, opts.role_names), random_role(rng, opts.role_names)});
  return o;
}

CQ random_eliq(Rng& rng, const Signature& sig, int max_vars, double concept_density) {
  std::vector<std::string> concepts(sig.concepts.begin(), sig.concepts.end());
  std::vector<std::string> roles(sig.roles.begin(), sig.roles.end());
  int n = roles.empty() ? 1 : 1 + pick(rng, max_vars);
  CQ q("x0");
  for (int i = 1; i < n; ++i) {
    int parent = pick(rng, i);
    Role r(roles[pick(rng, static_cast<int>(roles.size()))], chance(rng, 0.5));
    q.add_role(r, "x" + std::to_string(parent), "x" + std::to_string(i));
  }
  for (int i = 0; i < n; ++i)
    for (const auto& c : concepts)
      if (chance(rng, concept_density)) q.add_concept(c, "x" + std::to_string(i));
  return q;
}

}  // namespace eliq

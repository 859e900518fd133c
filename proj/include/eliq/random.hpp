#pragma once

#include <random>

#include "eliq/syntax.hpp"

namespace eliq {

using Rng = std::mt19937_64;

struct RandomOntologyOptions {
  Dialect dialect = Dialect::R;  // Core, R, FRestricted or F
  int concept_names = 2;
  int role_names = 2;
  int max_statements = 4;
  bool normal_form = true;
  double concept_disjointness = 0.0;  // chance of one concept disjointness
  double role_disjointness = 0.0;     // chance of one role disjointness
};

Ontology random_ontology(Rng& rng, const RandomOntologyOptions& opts);
// Random ELIQ over `sig` with 1..max_vars variables, answer variable x0.
CQ random_eliq(Rng& rng, const Signature& sig, int max_vars, double concept_density = 0.35);
Signature small_signature(int concept_names, int role_names);

}  // namespace eliq

#pragma once

#include <map>
#include <string>
#include <vector>

#include "eliq/reasoner.hpp"
#include "eliq/syntax.hpp"

namespace eliq {

// One generalisation of the subquery rooted at a variable, before
// compensation. `down` maps its variables to variables of the source query;
// variables missing from the map have no counterpart.
struct GenCandidate {
  CQ query;
  std::map<std::string, std::string> down;
  std::string provenance;
};

struct Frontier {
  std::vector<CQ> members;
  CQ source;
  Ontology ontology;
  std::size_t total_vars() const;
};

struct FrontierOptions {
  bool prune = false;          // drop members equivalent to an earlier one
  bool reverse_order = false;  // alternative tie order, for uniqueness checks
  bool check = true;           // verify that members generalise strictly
};

// Both expect a normal-form ontology and a saturated, minimal ELIQ.
std::vector<GenCandidate> generalize_r(const Ontology& o, const CQ& q, const std::string& var);
CQ compensate_r(const Ontology& o, const CQ& q, const GenCandidate& c);
std::vector<GenCandidate> generalize_f(const Ontology& o, const CQ& q, const std::string& var);
CQ compensate_f(const Ontology& o, const CQ& q, const GenCandidate& c);

Frontier frontier_r(const Ontology& o, const CQ& q, const FrontierOptions& opts = {});
Frontier frontier_f(const Ontology& o, const CQ& q, const FrontierOptions& opts = {});
// Core, R or FRestricted; throws not_f_restricted or unsupported_dialect.
Dialect frontier_dialect(const Ontology& o);
// Picks the construction from the dialect of o.
Frontier compute_frontier(const Ontology& o, const CQ& q, const FrontierOptions& opts = {});

// Members not strictly subsumed by another member; of equivalent members
// the first is kept.
std::vector<CQ> minimal_core(const Reasoner& r, const std::vector<CQ>& members);
// Upper bound on the total number of variables of a frontier of q.
double frontier_size_bound(const Ontology& o, const CQ& q);

}  // namespace eliq

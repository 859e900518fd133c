#pragma once

#include <map>
#include <string>
#include <vector>

#include "eliq/syntax.hpp"

namespace eliq {

struct NormalForm {
  Ontology ontology;
  // Fresh concept name -> the complex concept it stands for.
  std::map<std::string, EliConcept> fresh;
};

bool is_normal_ci(const ConceptInclusion& ci);
bool is_normal_form(const Ontology& o);
// Fresh names avoid sig(o) and `avoid`.
NormalForm normalize(const Ontology& o, const Signature& avoid = {});

Dialect dialect_of(const Ontology& o);
// Concept inclusions whose right-hand side uses some R with func(R-) in o.
std::vector<ConceptInclusion> f_restriction_violations(const Ontology& o);

}  // namespace eliq

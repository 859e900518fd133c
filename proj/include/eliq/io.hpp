#pragma once

#include <string>

#include "eliq/syntax.hpp"

namespace eliq {

// .dlo: one statement per line, '#' starts a comment.
//   basic "sub" eli | role "rsub" role | "disj" basic basic
//   | "rdisj" role role | "func" role
Ontology parse_ontology(const std::string& text);
std::string to_string(const Ontology& o);

EliConcept parse_concept(const std::string& text);

// .cq: "q(x0) :- A(x0), r(x0,y), r-(y,z)" or "eliq: <concept>".
CQ parse_cq(const std::string& text);
std::string to_string(const CQ& q);

// .abox: one assertion per line, "A(a)", "top(a)" or "r(a,b)".
ABox parse_abox(const std::string& text);
std::string to_string(const ABox& a);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace eliq

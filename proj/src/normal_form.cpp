#include "eliq/normal_form.hpp"

#include <functional>

namespace eliq {

bool is_normal_ci(const ConceptInclusion& ci) {
  const auto& rhs = ci.rhs;
  if (rhs.is_name_or_top()) return true;
  if (rhs.kind != EliConcept::Kind::Exists) return false;
  return ci.lhs.kind != BasicConcept::Kind::Exists && rhs.filler().is_name_or_top();
}

bool is_normal_form(const Ontology& o) {
  for (const auto& ci : o.cis)
    if (!is_normal_ci(ci)) return false;
  return true;
}

NormalForm normalize(const Ontology& o, const Signature& avoid) {
  NormalForm nf;
  nf.ontology = o;
  nf.ontology.cis.clear();
  if (is_normal_form(o)) {
    nf.ontology = o;
    return nf;
  }
  auto sig = o.signature();
  std::map<std::string, std::string> name_of;  // concept text -> fresh name
  int counter = 0;
  std::function<std::string(const EliConcept&)> name_for = [&](const EliConcept& c) -> std::string {
    if (c.kind == EliConcept::Kind::Atomic) return c.name;
    if (c.kind == EliConcept::Kind::Top) return "top";
    auto key = c.str();
    if (auto it = name_of.find(key); it != name_of.end()) return it->second;
    std::string x;
    do x = "_X" + std::to_string(++counter);
    while (sig.concepts.count(x) || avoid.concepts.count(x));
    name_of[key] = x;
    nf.fresh[x] = c;
    auto as_concept = [](const std::string& n) {
      return n == "top" ? EliConcept::top() : EliConcept::atomic(n);
    };
    auto self = BasicConcept::atomic(x);
    if (c.kind == EliConcept::Kind::Exists) {
      // name the filler first so the definition can refer to it, but emit
      // the definition of x before the filler's
      auto pos = nf.ontology.cis.size();
      auto filler = name_for(c.filler());
      nf.ontology.cis.insert(nf.ontology.cis.begin() + pos,
                             {self, EliConcept::exists(c.role, as_concept(filler))});
    } else {
      for (const auto& part : c.args) {
        auto pos = nf.ontology.cis.size();
        auto n = name_for(part);
        nf.ontology.cis.insert(nf.ontology.cis.begin() + pos, {self, as_concept(n)});
      }
    }
    return x;
  };
  for (const auto& ci : o.cis) {
    if (is_normal_ci(ci)) {
      nf.ontology.cis.push_back(ci);
      continue;
    }
    auto pos = nf.ontology.cis.size();
    auto x = name_for(ci.rhs);
    nf.ontology.cis.insert(nf.ontology.cis.begin() + pos, {ci.lhs, EliConcept::atomic(x)});
  }
  return nf;
}

std::vector<ConceptInclusion> f_restriction_violations(const Ontology& o) {
  std::vector<ConceptInclusion> out;
  std::function<bool(const EliConcept&)> bad = [&](const EliConcept& c) {
    if (c.kind == EliConcept::Kind::Exists && o.functional_role(c.role.inverse())) return true;
    for (const auto& a : c.args)
      if (bad(a)) return true;
    return false;
  };
  for (const auto& ci : o.cis)
    if (bad(ci.rhs)) out.push_back(ci);
  return out;
}

Dialect dialect_of(const Ontology& o) {
  bool has_ri = !o.ris.empty();
  bool has_func = !o.functional.empty();
  if (has_ri && has_func) return Dialect::RF;
  if (has_ri) return Dialect::R;
  if (has_func) return f_restriction_violations(o).empty() ? Dialect::FRestricted : Dialect::F;
  return Dialect::Core;
}

}  // namespace eliq

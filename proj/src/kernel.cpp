#include "kernel.hpp"

#include <algorithm>
#include <set>

#include "eliq/normal_form.hpp"

namespace eliq::detail {

Kernel::Kernel(const Ontology& o) {
  if (!is_normal_form(o)) throw std::logic_error("kernel expects a normal-form ontology");
  auto sig = o.signature();
  for (const auto& c : sig.concepts) {
    concept_ids_[c] = static_cast<int>(concept_names_.size());
    concept_names_.push_back(c);
  }
  for (const auto& r : sig.roles) {
    role_ids_[r] = static_cast<int>(role_names_.size());
    role_names_.push_back(r);
  }
  fresh_.assign(concepts(), false);
  const int nr = roles();

  for (const auto& ci : o.cis) {
    int lhs = basic_index(ci.lhs);
    const auto& rhs = ci.rhs;
    if (rhs.kind == EliConcept::Kind::Atomic) {
      atomic_cis_.push_back({lhs, concept_ids_.at(rhs.name)});
    } else if (rhs.kind == EliConcept::Kind::Exists) {
      const auto& f = rhs.filler();
      int filler = f.kind == EliConcept::Kind::Atomic ? concept_ids_.at(f.name) : kTop;
      exists_cis_.push_back({lhs, role_index(rhs.role), filler});
    }
  }

  // role hierarchy: reflexive, transitive, closed under inverses
  std::vector<std::vector<bool>> reach(nr, std::vector<bool>(nr, false));
  for (int r = 0; r < nr; ++r) reach[r][r] = true;
  for (const auto& ri : o.ris) {
    int a = role_index(ri.sub), b = role_index(ri.sup);
    reach[a][b] = true;
    reach[inv(a)][inv(b)] = true;
  }
  for (int k = 0; k < nr; ++k)
    for (int i = 0; i < nr; ++i)
      if (reach[i][k])
        for (int j = 0; j < nr; ++j)
          if (reach[k][j]) reach[i][j] = true;
  up_.assign(nr, Bits(nr));
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nr; ++j)
      if (reach[i][j]) up_[i].set(j);

  func_.assign(nr, false);
  for (const auto& r : o.functional) func_[role_index(r)] = true;

  for (const auto& d : o.concept_disjointness)
    concept_disj_.push_back({basic_index(d.first), basic_index(d.second)});
  for (const auto& d : o.role_disjointness) {
    int a = role_index(d.first), b = role_index(d.second);
    role_disj_.push_back({a, b});
    role_disj_.push_back({inv(a), inv(b)});
  }
  role_unsat_.assign(nr, false);
  for (int r = 0; r < nr; ++r)
    for (auto [a, b] : role_disj_)
      if (up_[r].test(a) && up_[r].test(b)) role_unsat_[r] = true;
}

int Kernel::concept_id(const std::string& name) const {
  auto it = concept_ids_.find(name);
  return it == concept_ids_.end() ? -1 : it->second;
}

int Kernel::role_id(const std::string& name) const {
  auto it = role_ids_.find(name);
  return it == role_ids_.end() ? -1 : it->second;
}

int Kernel::role_index(const Role& r) const {
  int id = role_id(r.name);
  return id < 0 ? -1 : 2 * id + (r.inverted ? 1 : 0);
}

int Kernel::basic_index(const BasicConcept& b) const {
  switch (b.kind) {
    case BasicConcept::Kind::Top: return kTop;
    case BasicConcept::Kind::Atomic: {
      int c = concept_id(b.name);
      return c < 0 ? -2 : c;
    }
    case BasicConcept::Kind::Exists: {
      int r = role_index(b.role);
      return r < 0 ? -2 : exists(r);
    }
  }
  return -2;
}

void Kernel::mark_fresh(const std::string& name) {
  int c = concept_id(name);
  if (c >= 0) fresh_[c] = true;
}

void Kernel::atomic_close(Bits& t) const {
  auto in = [&](int b) { return b == kTop || t.test(b); };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int r = 0; r < roles(); ++r)
      if (t.test(exists(r)))
        up_[r].for_each([&](std::size_t s) {
          if (!t.test(exists(s))) {
            t.set(exists(s));
            changed = true;
          }
        });
    for (auto [lhs, rhs] : atomic_cis_)
      if (in(lhs) && !t.test(rhs)) {
        t.set(rhs);
        changed = true;
      }
    for (const auto& ci : exists_cis_)
      if (in(ci.lhs) && !t.test(exists(ci.role))) {
        t.set(exists(ci.role));
        changed = true;
      }
  }
}

bool Kernel::clash(const Bits& t) const {
  auto in = [&](int b) { return b == kTop || t.test(b); };
  for (auto [a, b] : concept_disj_)
    if (in(a) && in(b)) return true;
  for (int r = 0; r < roles(); ++r)
    if (role_unsat_[r] && t.test(exists(r))) return true;
  return false;
}

std::vector<Bits> Kernel::successor_seeds(const Bits& type, int role) const {
  std::set<int> fillers;
  for (const auto& ci : exists_cis_)
    if (ci.role == role && ci.filler != kTop && (ci.lhs == kTop || type.test(ci.lhs)))
      fillers.insert(ci.filler);
  Bits base = empty_type();
  base.set(exists(inv(role)));
  std::vector<Bits> out;
  if (func_[role]) {
    for (int f : fillers) base.set(f);
    out.push_back(base);
    return out;
  }
  out.push_back(base);
  for (int f : fillers) {
    Bits s = base;
    s.set(f);
    out.push_back(s);
  }
  return out;
}

void Kernel::requirements(const Bits& type, int role, Bits& into) const {
  for (const auto& ci : exists_cis_)
    if (ci.role == role && ci.filler != kTop && (ci.lhs == kTop || type.test(ci.lhs))) into.set(ci.filler);
}

Kernel::Entry& Kernel::entry(const Bits& seed, std::vector<Bits>& pending) const {
  auto it = table_.find(seed);
  if (it != table_.end()) return it->second;
  Entry e;
  e.c.type = seed;
  atomic_close(e.c.type);
  e.c.unsat = clash(e.c.type);
  pending.push_back(seed);
  return table_.emplace(seed, std::move(e)).first->second;
}

bool Kernel::recompute(const Bits& key, std::vector<Bits>& pending) const {
  Entry& e = table_.at(key);
  Bits t = e.c.type;
  bool unsat = e.c.unsat;
  for (;;) {
    atomic_close(t);
    bool grew = false;
    for (int r = 0; r < roles(); ++r) {
      if (!t.test(exists(r))) continue;
      for (const auto& s : successor_seeds(t, r)) {
        const Entry& child = entry(s, pending);
        if (child.c.unsat) unsat = true;
        if (func_[inv(r)]) {
          // the successor has this element as its only inv(r)-successor
          Bits req = empty_type();
          requirements(child.c.type, inv(r), req);
          if (!req.subset_of(t)) {
            t |= req;
            grew = true;
          }
        }
      }
    }
    if (!grew) break;
  }
  if (clash(t)) unsat = true;
  if (t == e.c.type && unsat == e.c.unsat) return false;
  e.c.type = std::move(t);
  e.c.unsat = unsat;
  return true;
}

const Kernel::Closure& Kernel::closure(const Bits& seed) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = table_.find(seed);
  if (it != table_.end() && it->second.final) return it->second.c;
  std::vector<Bits> pending;
  Entry& root = entry(seed, pending);
  if (pending.empty()) pending.push_back(seed);  // left over from an aborted run
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < pending.size(); ++i)
      if (recompute(pending[i], pending)) changed = true;
  }
  for (const auto& p : pending) table_.at(p).final = true;
  return root.c;
}

bool Kernel::entails(int b1, int b2) const {
  Bits seed = empty_type();
  if (b1 != kTop) seed.set(b1);
  const auto& c = closure(seed);
  if (c.unsat) return true;
  return b2 == kTop || c.type.test(b2);
}

bool Kernel::satisfiable(int b) const {
  Bits seed = empty_type();
  if (b != kTop) seed.set(b);
  return !closure(seed).unsat;
}

}  // namespace eliq::detail

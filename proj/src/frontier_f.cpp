#include <deque>

#include "frontier_impl.hpp"

namespace eliq::detail {

FTree FrontierBuilder::compensate_f(FTree p) const {
  const int pre = static_cast<int>(p.size());
  int k = 0;
  // 2A: one successor per maximal label set the query no longer forces
  for (int x = 0; x < pre; ++x) {
    int xd = p.nodes[x].down;
    for (const auto& [role, sets] : leads_[xd]) {
      if (!guard(role, p.nodes[x].concepts)) continue;
      for (const auto& m : sets) {
        int z = p.add(x, role, p.nodes[x].name + ".z" + std::to_string(++k), -1);
        p.nodes[z].concepts = m;
      }
    }
  }

  std::deque<int> marked;  // an atom is identified by its lower node
  auto mark = [&](int b) {
    int a = p.nodes[b].parent;
    const Role back = p.nodes[b].role.inverse();
    if (p.nodes[b].down < 0 ||
        (p.nodes[a].down < 0 && func(back) && has_q_neighbor(p.nodes[b].down, back)))
      throw Error("internal", "marking proviso violated at " + p.nodes[b].name);
    marked.push_back(b);
  };

  // Start
  const int before = static_cast<int>(p.size());
  for (int y = 1; y < before; ++y) {
    const Role back = p.nodes[y].role.inverse();
    if (func(back)) continue;
    int xd = p.nodes[p.nodes[y].parent].down;
    mark(p.add(y, back, q_[xd].name + ".c" + std::to_string(++k), xd));
  }

  // Step
  const std::size_t sig = names_.size() + roles_.size() / 2;
  const std::size_t limit = (p.size() - 1) * (1 + q_.size() + sig * sig);
  std::size_t steps = 0;
  while (!marked.empty()) {
    if (++steps > limit) throw Error("internal", "marking process exceeded its iteration bound");
    int b = marked.front();
    marked.pop_front();
    int a = p.nodes[b].parent;
    int bd = p.nodes[b].down;
    const Role back = p.nodes[b].role.inverse();
    if (!func(back) || !has_q_neighbor(bd, back)) {
      graft(p, b, bd, ".c" + std::to_string(++k));
      continue;
    }
    // (i)
    p.nodes[b].concepts.insert(q_[bd].concepts.begin(), q_[bd].concepts.end());
    // (ii)
    for (const auto& [s, w] : q_[bd].adj) {
      if (s == back && w == p.nodes[a].down) continue;
      mark(p.add(b, s, q_[w].name + ".c" + std::to_string(++k), w));
    }
    // (iii)
    for (const auto& [s, sets] : leads_[bd])
      for (const auto& m : sets) {
        auto tag = std::to_string(++k);
        int u = p.add(b, s, p.nodes[b].name + ".z" + tag, -1);
        p.nodes[u].concepts = m;
        mark(p.add(u, s.inverse(), q_[bd].name + ".c" + tag, bd));
      }
  }
  return p;
}

}  // namespace eliq::detail

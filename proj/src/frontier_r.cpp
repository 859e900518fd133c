#include "frontier_impl.hpp"

namespace eliq::detail {

FTree FrontierBuilder::compensate_r(FTree p) const {
  const int pre = static_cast<int>(p.size());
  int k = 0;
  // 2A: successors the query no longer forces, each with a glued copy of q
  for (int x = 0; x < pre; ++x) {
    int xd = p.nodes[x].down;
    for (const auto& [role, labels] : leads_[xd])
      for (const auto& s : sup_.at(role)) {
        if (!guard(s, p.nodes[x].concepts)) continue;
        for (const auto& label : labels) {
          auto tag = std::to_string(++k);
          int z = p.add(x, s, p.nodes[x].name + ".z" + tag, -1);
          p.nodes[z].concepts = label;
          int back = p.add(z, role.inverse(), q_[xd].name + ".c" + tag, xd);
          graft(p, back, xd, ".c" + tag);
        }
      }
  }
  // 2B: a fresh predecessor with a glued copy of q for every role that
  // links the originals of an edge
  for (int y = 1; y < pre; ++y) {
    int xd = p.nodes[p.nodes[y].parent].down;
    int yd = p.nodes[y].down;
    for (const auto& role : links_[xd].at(yd)) {
      auto tag = std::to_string(++k);
      int z = p.add(y, role.inverse(), q_[xd].name + ".c" + tag, xd);
      graft(p, z, xd, ".c" + tag);
    }
  }
  return p;
}

}  // namespace eliq::detail

#include <functional>

#include "eliq/reasoner.hpp"

namespace eliq {

namespace {

struct Shape {
  unsigned label;
  std::vector<std::pair<int, int>> branches;  // (role, shape id), sorted
  int size;
};

}  // namespace

std::vector<CQ> enumerate_eliqs(const Signature& sig, int max_vars) {
  std::vector<std::string> concepts(sig.concepts.begin(), sig.concepts.end());
  std::vector<Role> roles;
  for (const auto& r : sig.roles) {
    roles.emplace_back(r, false);
    roles.emplace_back(r, true);
  }
  const unsigned labels = 1u << concepts.size();
  std::vector<Shape> shapes;
  // branch = (size, role, shape) in a fixed global order
  struct Branch {
    int size, role, shape;
  };
  std::vector<Branch> branches;
  for (int n = 1; n <= max_vars; ++n) {
    std::vector<std::pair<int, int>> cur;
    std::function<void(unsigned, int, std::size_t)> rec = [&](unsigned label, int remaining, std::size_t from) {
      if (remaining == 0) {
        shapes.push_back({label, cur, n});
        return;
      }
      for (std::size_t b = from; b < branches.size(); ++b) {
        if (branches[b].size > remaining) break;
        cur.push_back({branches[b].role, branches[b].shape});
        rec(label, remaining - branches[b].size, b);
        cur.pop_back();
      }
    };
    std::size_t first_new = shapes.size();
    for (unsigned label = 0; label < labels; ++label) rec(label, n - 1, 0);
    for (int r = 0; r < static_cast<int>(roles.size()); ++r)
      for (std::size_t s = first_new; s < shapes.size(); ++s) branches.push_back({n, r, static_cast<int>(s)});
  }
  std::vector<CQ> out;
  out.reserve(shapes.size());
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    CQ q("x0");
    int counter = 0;
    std::function<void(int, const std::string&)> build = [&](int id, const std::string& v) {
      const auto& sh = shapes[id];
      for (std::size_t c = 0; c < concepts.size(); ++c)
        if (sh.label & (1u << c)) q.add_concept(concepts[c], v);
      for (auto [role, child] : sh.branches) {
        auto w = "x" + std::to_string(++counter);
        q.add_role(roles[role], v, w);
        build(child, w);
      }
    };
    build(static_cast<int>(s), "x0");
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace eliq

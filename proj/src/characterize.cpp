#include "eliq/characterize.hpp"

#include <algorithm>
#include <thread>

#include "eliq/frontier.hpp"
#include "eliq/io.hpp"
#include "eliq/reasoner.hpp"

namespace eliq {

std::size_t ExampleSet::size() const {
  std::size_t n = 0;
  for (const auto* list : {&positives, &negatives})
    for (const auto& e : *list) n += e.abox.concept_assertions().size() + e.abox.role_assertions().size();
  return n;
}

ExampleSet characterize(const Ontology& o, const CQ& q) {
  ExampleSet e;
  e.positives.push_back({q.to_abox(), q.answer_var(), Polarity::Positive});
  for (const auto& m : compute_frontier(o, q).members)
    e.negatives.push_back({m.to_abox(), m.answer_var(), Polarity::Negative});
  return e;
}

namespace {

bool fits_with(const Reasoner& r, const CQ& q, const ExampleSet& e) {
  for (const auto& p : e.positives)
    if (!r.certain_answer(p.abox, q, p.individual)) return false;
  for (const auto& n : e.negatives)
    if (r.certain_answer(n.abox, q, n.individual)) return false;
  return true;
}

}  // namespace

bool fits(const Ontology& o, const CQ& q, const ExampleSet& e) { return fits_with(Reasoner(o), q, e); }

UniquenessVerdict verify_unique(const Ontology& o, const CQ& q, const ExampleSet& e, int bound, int jobs) {
  if (bound < static_cast<int>(q.vars().size()))
    throw Error("invalid_argument", "the bound must be at least the number of variables of the query");
  Signature sig = o.signature();
  sig.merge(q.signature());
  const auto candidates = enumerate_eliqs(sig, bound);
  const std::size_t workers = std::max(1, jobs);
  // worker w takes every workers-th candidate; the earliest hit wins
  std::vector<std::size_t> hit(workers, candidates.size());
  auto work = [&](std::size_t w) {
    Reasoner r(o);
    for (std::size_t i = w; i < candidates.size(); i += workers) {
      const auto& c = candidates[i];
      // an unsatisfiable candidate cannot fit a consistent positive example
      if (fits_with(r, c, e) && r.satisfiable(c) && !r.equivalent(c, q)) {
        hit[w] = i;
        return;
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  UniquenessVerdict v;
  v.candidates = candidates.size();
  auto first = *std::min_element(hit.begin(), hit.end());
  if (first < candidates.size()) {
    v.ok = false;
    v.counterexample = candidates[first];
  }
  return v;
}

}  // namespace eliq

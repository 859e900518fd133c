#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eliq/syntax.hpp"

namespace eliq {

enum class Polarity { Positive, Negative };

struct DataExample {
  ABox abox;
  std::string individual;
  Polarity polarity = Polarity::Positive;
};

struct ExampleSet {
  std::vector<DataExample> positives;
  std::vector<DataExample> negatives;
  // Number of assertions over all examples.
  std::size_t size() const;
};

// One positive example, the query itself, and one negative example per
// frontier member, named after the member's variables.
ExampleSet characterize(const Ontology& o, const CQ& q);
bool fits(const Ontology& o, const CQ& q, const ExampleSet& e);

struct UniquenessVerdict {
  bool ok = true;
  std::optional<CQ> counterexample;  // fits but is not equivalent to q
  std::size_t candidates = 0;  // enumerated queries
};

// Every ELIQ over sig(o) and sig(q) with at most `bound` variables that
// fits e must be equivalent to q. The first counterexample in enumeration
// order is reported, independently of `jobs`.
UniquenessVerdict verify_unique(const Ontology& o, const CQ& q, const ExampleSet& e, int bound, int jobs = 1);

}  // namespace eliq

// Seeded random graphs for property testing.
//
// Every graph is connected by construction: vertices x1..xn are strung on a
// random spanning tree whose edges carry drawn labels (3, 4, ..., infinity),
// then each remaining pair independently stays absent (order 2) with
// probability 0.7 or draws a label from the pool.  The whole stream is a
// fixed-order walk over one mt19937_64, so a seed determines every byte of
// the output, on any platform.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wperp/graph.hpp"

namespace wperp {

struct CorpusOptions {
  std::uint64_t seed = 1;
  int count = 1;
  int max_rank = 7;  // ranks are drawn uniformly from [2, max_rank]
  // Candidate pairwise orders; 2 means "no edge".  Tree edges draw from the
  // pool minus 2, which must be nonempty.
  std::vector<Label> label_pool = {Label::finite(2), Label::finite(3),
                                   Label::finite(4), Label::finite(5),
                                   Label::infinity()};
};

// The generated graphs, in stream order.
std::vector<CoxeterGraph> corpus_generate(const CorpusOptions& opt);

// The same corpus rendered in the line-oriented text format, one graph per
// block with a leading comment, separated by blank lines.
std::string corpus_text(const CorpusOptions& opt);

}  // namespace wperp

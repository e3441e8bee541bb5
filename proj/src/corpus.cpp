#include "wperp/corpus.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "wperp/error.hpp"

namespace wperp {

namespace {

// Bounded draw via modulo.  uniform_int_distribution is implementation
// defined, which would break the byte-identical-output guarantee across
// standard libraries; the slight modulo bias is irrelevant here.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

CoxeterGraph one_graph(std::mt19937_64& rng, int max_rank,
                       const std::vector<Label>& pool,
                       const std::vector<Label>& drawn) {
  int rank = 2 + static_cast<int>(draw(rng, max_rank - 1));
  std::vector<VertexId> vs;
  for (int i = 1; i <= rank; ++i) vs.push_back("x" + std::to_string(i));

  std::vector<EdgeSpec> edges;
  // Spanning tree: attach each vertex to a uniformly chosen earlier one.
  std::vector<int> parent(rank, -1);
  for (int i = 1; i < rank; ++i) {
    parent[i] = static_cast<int>(draw(rng, i));
    edges.push_back({vs[parent[i]], vs[i], drawn[draw(rng, drawn.size())]});
  }
  // Remaining pairs, in index order: 7 chances in 10 to stay absent, else a
  // pool label (drawing 2 keeps the pair absent as well).
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      if (parent[j] == i) continue;
      if (draw(rng, 10) < 7) continue;
      Label m = pool[draw(rng, pool.size())];
      if (m != Label::finite(2)) edges.push_back({vs[i], vs[j], m});
    }
  }
  return CoxeterGraph::build(edges, vs);
}

}  // namespace

std::vector<CoxeterGraph> corpus_generate(const CorpusOptions& opt) {
  if (opt.max_rank < 2) throw Error("corpus max_rank must be at least 2");
  if (opt.count < 0) throw Error("corpus count must be nonnegative");
  std::vector<Label> drawn;
  for (const Label& m : opt.label_pool)
    if (m != Label::finite(2)) drawn.push_back(m);
  if (drawn.empty())
    throw Error("corpus label pool needs a drawn label (3 or more, or inf)");

  std::mt19937_64 rng(opt.seed);
  std::vector<CoxeterGraph> out;
  out.reserve(opt.count);
  for (int k = 0; k < opt.count; ++k)
    out.push_back(one_graph(rng, opt.max_rank, opt.label_pool, drawn));
  return out;
}

std::string corpus_text(const CorpusOptions& opt) {
  std::vector<CoxeterGraph> graphs = corpus_generate(opt);
  std::ostringstream os;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    if (k > 0) os << "\n";
    os << "# graph " << (k + 1) << " of " << graphs.size() << " (seed "
       << opt.seed << ")\n";
    os << graphs[k].to_text();
  }
  return os.str();
}

}  // namespace wperp

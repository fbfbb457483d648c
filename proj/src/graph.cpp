#include "petdom/graph.hpp"

#include <algorithm>
#include <cassert>

namespace petdom {

Graph Graph::build(const PetersenParams& params) {
  params.validate();
  const int n = params.n;
  const int k = params.k;

  Graph g;
  g.params_ = params;
  g.adj_.resize(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    g.adj_[static_cast<std::size_t>(i)] = {mod_index(n, i - 1), mod_index(n, i + 1), n + i};
    g.adj_[static_cast<std::size_t>(n + i)] = {i, n + mod_index(n, i - k), n + mod_index(n, i + k)};
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());

  g.closed_.reserve(g.adj_.size());
  for (int v = 0; v < 2 * n; ++v) {
    VertexSet row(2 * n);
    row.add(v);
    for (int w : g.adj_[static_cast<std::size_t>(v)]) row.add(w);
    assert(row.size() == 4);
    g.closed_.push_back(std::move(row));
  }
  return g;
}

Graph build_petersen(const PetersenParams& params) { return Graph::build(params); }

VertexSet closed_neighborhood(const Graph& g, int dense_id) {
  if (dense_id < 0 || dense_id >= g.vertex_count())
    throw std::out_of_range("vertex id out of range");
  return g.closed_row(dense_id);
}

VertexSet closed_neighborhood(const Graph& g, VertexId v) {
  return closed_neighborhood(g, v.dense(g.n()));
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  VertexSet covered(g.vertex_count());
  for (int v : s.members()) covered |= g.closed_row(v);
  return covered.is_full();
}

bool is_efficient_dominating(const Graph& g, const VertexSet& s) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.closed_row(v).intersection_size(s) != 1) return false;
  // Multiplicity one everywhere forces 4|S| = 2n.
  assert(4 * s.size() == g.vertex_count());
  return true;
}

VertexSet undominated_vertices(const Graph& g, const VertexSet& s) {
  VertexSet covered(g.vertex_count());
  for (int v : s.members()) covered |= g.closed_row(v);
  return covered.complement();
}

}  // namespace petdom

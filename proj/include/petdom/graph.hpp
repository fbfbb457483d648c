#pragma once

#include <array>
#include <span>
#include <vector>

#include "petdom/params.hpp"
#include "petdom/vertex_set.hpp"

namespace petdom {

/// The generalized Petersen graph P(n, k): 2n vertices, outer cycle
/// v_0..v_{n-1}, spokes v_i u_i, inner edges u_i u_{i+k} (subscripts mod n).
/// Immutable after construction; concurrent reads are safe.
class Graph {
 public:
  static Graph build(const PetersenParams& params);

  const PetersenParams& params() const { return params_; }
  int n() const { return params_.n; }
  int k() const { return params_.k; }
  int vertex_count() const { return 2 * params_.n; }
  int edge_count() const { return 3 * params_.n; }

  /// The three neighbors of v, sorted by dense id.
  std::span<const int, 3> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  /// Bit row for N[v] (derived from the adjacency lists at build time).
  const VertexSet& closed_row(int v) const { return closed_[static_cast<std::size_t>(v)]; }

 private:
  Graph() = default;

  PetersenParams params_;
  std::vector<std::array<int, 3>> adj_;
  std::vector<VertexSet> closed_;
};

/// Reduce an index modulo n into [0, n). The single reduction point for all
/// construction arithmetic; negative intermediates are normalized here.
inline int mod_index(int n, long long i) {
  long long r = i % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

Graph build_petersen(const PetersenParams& params);

VertexSet closed_neighborhood(const Graph& g, int dense_id);
VertexSet closed_neighborhood(const Graph& g, VertexId v);

/// True iff the union of closed neighborhoods of s covers all 2n vertices.
bool is_dominating(const Graph& g, const VertexSet& s);

/// True iff every vertex lies in exactly one member's closed neighborhood.
bool is_efficient_dominating(const Graph& g, const VertexSet& s);

/// V \ N[S]; empty iff s dominates.
VertexSet undominated_vertices(const Graph& g, const VertexSet& s);

}  // namespace petdom

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "petdom/graph.hpp"

namespace petdom {

/// Solvers accept graphs up to this many vertices (2n <= 128).
inline constexpr int kSolverVertexCeiling = 128;

/// Search limits. Absent fields mean unlimited. `target` stops the search
/// as soon as a dominating set of at most that size is found.
struct SolveBudget {
  std::optional<long long> max_nodes;
  std::optional<double> max_seconds;
  std::optional<int> target;
};

struct SolveReport {
  int gamma = 0;
  VertexSet witness;
  bool optimal = false;
  long long nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Exact domination number by branch and bound: branch on the lowest-id
/// undominated vertex over the <= 4 members of its closed neighborhood in
/// ascending order; lower bound from a greedy packing of pairwise-disjoint
/// closed neighborhoods. Deterministic and single-threaded. When the budget
/// runs out, gamma is the best upper bound found and optimal = false;
/// budget exhaustion is not an error.
SolveReport exact_gamma(const Graph& g, const SolveBudget& budget = {});

struct EfficientResult {
  bool exists = false;
  std::optional<VertexSet> witness;
};

/// Decides whether V can be covered by pairwise-disjoint closed
/// neighborhoods (dancing-links exact cover). Returns a witness when one
/// exists.
EfficientResult exists_efficient(const Graph& g);

/// Deterministic greedy: repeatedly dominate the lowest-id uncovered vertex
/// with the neighbor covering the most new vertices, then drop redundant
/// members in reverse insertion order. The result is irredundant.
VertexSet greedy_dominating_set(const Graph& g);

/// `count` dominating sets from seeded randomized greedy (SplitMix64-driven
/// vertex-order shuffle, greedy cover, reverse-order pruning). Identical
/// (graph, count, seed) triples reproduce identical output.
std::vector<VertexSet> random_dominating_sets(const Graph& g, int count, std::uint64_t seed);

}  // namespace petdom

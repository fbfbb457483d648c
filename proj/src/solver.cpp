#include "petdom/solver.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <limits>
#include <numeric>

#include "petdom/rng.hpp"

namespace petdom {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxWords = (kSolverVertexCeiling + 63) / 64;
constexpr int kInfeasible = std::numeric_limits<int>::max() / 2;

struct Mask {
  std::array<std::uint64_t, kMaxWords> w{};
};

void check_ceiling(const Graph& g) {
  if (g.vertex_count() > kSolverVertexCeiling)
    throw InvalidParams("solver handles at most " + std::to_string(kSolverVertexCeiling) +
                        " vertices, got " + std::to_string(g.vertex_count()));
}

Mask to_mask(const VertexSet& s) {
  Mask m;
  const auto& words = s.words();
  for (std::size_t i = 0; i < words.size(); ++i) m.w[i] = words[i];
  return m;
}

VertexSet to_vertex_set(const Mask& m, int universe) {
  VertexSet s(universe);
  for (int v = 0; v < universe; ++v)
    if ((m.w[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u) s.add(v);
  return s;
}

// Greedy cover in the given vertex order, then reverse-order pruning of
// redundant members. Shared by the deterministic and the seeded variants.
std::vector<int> greedy_cover(const Graph& g, const std::vector<int>& order) {
  const int nv = g.vertex_count();
  VertexSet covered(nv);
  std::vector<int> picked;

  for (int v : order) {
    if (covered.contains(v)) continue;
    int best = -1;
    int best_gain = -1;
    for (int cand : closed_neighborhood(g, v).members()) {
      const int gain = g.closed_row(cand).size() - g.closed_row(cand).intersection_size(covered);
      if (gain > best_gain) {  // ties resolve to the lowest dense id
        best_gain = gain;
        best = cand;
      }
    }
    picked.push_back(best);
    covered |= g.closed_row(best);
  }

  // cover_count[w] = how many picked members dominate w
  std::vector<int> cover_count(static_cast<std::size_t>(nv), 0);
  for (int m : picked)
    for (int w : g.closed_row(m).members()) ++cover_count[static_cast<std::size_t>(w)];
  std::vector<int> result;
  std::vector<bool> dropped(picked.size(), false);
  for (std::size_t i = picked.size(); i-- > 0;) {
    const int m = picked[i];
    bool redundant = true;
    for (int w : g.closed_row(m).members())
      if (cover_count[static_cast<std::size_t>(w)] < 2) {
        redundant = false;
        break;
      }
    if (redundant) {
      dropped[i] = true;
      for (int w : g.closed_row(m).members()) --cover_count[static_cast<std::size_t>(w)];
    }
  }
  for (std::size_t i = 0; i < picked.size(); ++i)
    if (!dropped[i]) result.push_back(picked[i]);
  std::sort(result.begin(), result.end());
  return result;
}

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, const SolveBudget& budget) : g_(g), budget_(budget) {
    nv_ = g.vertex_count();
    nw_ = (nv_ + 63) / 64;
    for (int i = 0; i < nv_; ++i) {
      if (i / 64 < kMaxWords) full_.w[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63);
    }
    rows_.reserve(static_cast<std::size_t>(nv_));
    row_members_.reserve(static_cast<std::size_t>(nv_));
    for (int v = 0; v < nv_; ++v) {
      rows_.push_back(to_mask(g.closed_row(v)));
      auto mem = g.closed_row(v).members();
      std::array<int, 4> arr{};
      for (std::size_t i = 0; i < 4; ++i) arr[i] = mem[i];
      row_members_.push_back(arr);
    }
  }

  SolveReport run() {
    start_ = Clock::now();

    const std::vector<int> greedy = greedy_cover(g_, identity_order());
    best_ = greedy;
    best_size_ = static_cast<int>(greedy.size());

    if (!(budget_.target && best_size_ <= *budget_.target)) {
      chosen_.reserve(static_cast<std::size_t>(best_size_));
      dfs(Mask{}, Mask{}, 0);
    } else {
      stopped_ = true;
    }

    SolveReport report;
    report.gamma = best_size_;
    VertexSet witness(nv_);
    for (int v : best_) witness.add(v);
    report.witness = witness;
    report.optimal = !stopped_;
    report.nodes_explored = nodes_;
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_);
    return report;
  }

 private:
  std::vector<int> identity_order() const {
    std::vector<int> order(static_cast<std::size_t>(nv_));
    std::iota(order.begin(), order.end(), 0);
    return order;
  }

  bool is_full(const Mask& covered) const {
    for (int i = 0; i < nw_; ++i)
      if (covered.w[static_cast<std::size_t>(i)] != full_.w[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  // Greedy packing of pairwise-disjoint closed neighborhoods over the
  // uncovered vertices: each packed neighborhood must contain one distinct
  // future dominator. Also detects vertices whose whole closed neighborhood
  // is forbidden (infeasible branch).
  int lower_bound(const Mask& covered, const Mask& forbidden) const {
    Mask blocked{};
    int pack = 0;
    int uncovered = 0;
    for (int wi = 0; wi < nw_; ++wi) {
      std::uint64_t rem = full_.w[static_cast<std::size_t>(wi)] & ~covered.w[static_cast<std::size_t>(wi)];
      while (rem) {
        const int v = wi * 64 + std::countr_zero(rem);
        rem &= rem - 1;
        ++uncovered;
        const Mask& row = rows_[static_cast<std::size_t>(v)];
        bool any_allowed = false;
        bool disjoint = true;
        for (int i = 0; i < nw_; ++i) {
          const std::uint64_t r = row.w[static_cast<std::size_t>(i)];
          if (r & ~forbidden.w[static_cast<std::size_t>(i)]) any_allowed = true;
          if (r & blocked.w[static_cast<std::size_t>(i)]) disjoint = false;
        }
        if (!any_allowed) return kInfeasible;
        if (disjoint) {
          ++pack;
          for (int i = 0; i < nw_; ++i) blocked.w[static_cast<std::size_t>(i)] |= row.w[static_cast<std::size_t>(i)];
        }
      }
    }
    return std::max(pack, (uncovered + 3) / 4);
  }

  int first_uncovered(const Mask& covered) const {
    for (int wi = 0; wi < nw_; ++wi) {
      const std::uint64_t rem =
          full_.w[static_cast<std::size_t>(wi)] & ~covered.w[static_cast<std::size_t>(wi)];
      if (rem) return wi * 64 + std::countr_zero(rem);
    }
    return -1;
  }

  bool budget_hit() {
    if (budget_.max_nodes && nodes_ > *budget_.max_nodes) return true;
    if (budget_.max_seconds && (nodes_ & 4095) == 0) {
      const double secs = std::chrono::duration<double>(Clock::now() - start_).count();
      if (secs > *budget_.max_seconds) return true;
    }
    return false;
  }

  // Returns false when a budget stop fired and the search must unwind.
  bool dfs(const Mask& covered, Mask forbidden, int chosen_count) {
    if (stopped_) return false;
    ++nodes_;
    if (budget_hit()) {
      stopped_ = true;
      return false;
    }

    if (is_full(covered)) {
      if (chosen_count < best_size_) {
        best_size_ = chosen_count;
        best_ = chosen_;
        std::sort(best_.begin(), best_.end());
        if (budget_.target && best_size_ <= *budget_.target) {
          stopped_ = true;
          return false;
        }
      }
      return true;
    }

    const int lb = lower_bound(covered, forbidden);
    if (lb == kInfeasible) return true;
    if (chosen_count + lb >= best_size_) return true;

    const int v = first_uncovered(covered);
    for (int cand : row_members_[static_cast<std::size_t>(v)]) {
      if ((forbidden.w[static_cast<std::size_t>(cand) >> 6] >> (cand & 63)) & 1u) continue;
      Mask covered2 = covered;
      const Mask& row = rows_[static_cast<std::size_t>(cand)];
      for (int i = 0; i < nw_; ++i) covered2.w[static_cast<std::size_t>(i)] |= row.w[static_cast<std::size_t>(i)];
      chosen_.push_back(cand);
      const bool keep_going = dfs(covered2, forbidden, chosen_count + 1);
      chosen_.pop_back();
      if (!keep_going) return false;
      // Later branches exclude this candidate; together the branches
      // partition all ways of dominating v.
      forbidden.w[static_cast<std::size_t>(cand) >> 6] |= 1ull << (cand & 63);
    }
    return true;
  }

  const Graph& g_;
  SolveBudget budget_;
  int nv_ = 0;
  int nw_ = 0;
  Mask full_{};
  std::vector<Mask> rows_;
  std::vector<std::array<int, 4>> row_members_;

  Clock::time_point start_{};
  long long nodes_ = 0;
  bool stopped_ = false;
  int best_size_ = 0;
  std::vector<int> best_;
  std::vector<int> chosen_;
};

// Dancing-links exact cover over the closed-neighborhood matrix: columns are
// the 2n vertices to cover, row r selects vertex r and covers N[r].
class DancingLinks {
 public:
  explicit DancingLinks(const Graph& g) : nv_(g.vertex_count()) {
    const int ncols = nv_;
    const int nnodes = 1 + ncols + 4 * nv_;
    left_.resize(static_cast<std::size_t>(nnodes));
    right_.resize(static_cast<std::size_t>(nnodes));
    up_.resize(static_cast<std::size_t>(nnodes));
    down_.resize(static_cast<std::size_t>(nnodes));
    col_.resize(static_cast<std::size_t>(nnodes));
    row_of_.assign(static_cast<std::size_t>(nnodes), -1);
    count_.assign(static_cast<std::size_t>(ncols + 1), 0);

    // 0 is the root; columns are 1..ncols
    for (int c = 0; c <= ncols; ++c) {
      left_[static_cast<std::size_t>(c)] = c == 0 ? ncols : c - 1;
      right_[static_cast<std::size_t>(c)] = c == ncols ? 0 : c + 1;
      up_[static_cast<std::size_t>(c)] = c;
      down_[static_cast<std::size_t>(c)] = c;
      col_[static_cast<std::size_t>(c)] = c;
    }

    int next = ncols + 1;
    for (int r = 0; r < nv_; ++r) {
      int row_start = -1;
      for (int v : g.closed_row(r).members()) {
        const int node = next++;
        const int c = v + 1;
        col_[static_cast<std::size_t>(node)] = c;
        row_of_[static_cast<std::size_t>(node)] = r;
        // vertical insert at the bottom of column c
        up_[static_cast<std::size_t>(node)] = up_[static_cast<std::size_t>(c)];
        down_[static_cast<std::size_t>(node)] = c;
        down_[static_cast<std::size_t>(up_[static_cast<std::size_t>(c)])] = node;
        up_[static_cast<std::size_t>(c)] = node;
        ++count_[static_cast<std::size_t>(c)];
        // horizontal insert
        if (row_start < 0) {
          row_start = node;
          left_[static_cast<std::size_t>(node)] = node;
          right_[static_cast<std::size_t>(node)] = node;
        } else {
          left_[static_cast<std::size_t>(node)] = left_[static_cast<std::size_t>(row_start)];
          right_[static_cast<std::size_t>(node)] = row_start;
          right_[static_cast<std::size_t>(left_[static_cast<std::size_t>(row_start)])] = node;
          left_[static_cast<std::size_t>(row_start)] = node;
        }
      }
    }
  }

  bool solve(std::vector<int>& solution) { return search(solution); }

 private:
  void cover(int c) {
    left_[static_cast<std::size_t>(right_[static_cast<std::size_t>(c)])] = left_[static_cast<std::size_t>(c)];
    right_[static_cast<std::size_t>(left_[static_cast<std::size_t>(c)])] = right_[static_cast<std::size_t>(c)];
    for (int i = down_[static_cast<std::size_t>(c)]; i != c; i = down_[static_cast<std::size_t>(i)])
      for (int j = right_[static_cast<std::size_t>(i)]; j != i; j = right_[static_cast<std::size_t>(j)]) {
        up_[static_cast<std::size_t>(down_[static_cast<std::size_t>(j)])] = up_[static_cast<std::size_t>(j)];
        down_[static_cast<std::size_t>(up_[static_cast<std::size_t>(j)])] = down_[static_cast<std::size_t>(j)];
        --count_[static_cast<std::size_t>(col_[static_cast<std::size_t>(j)])];
      }
  }

  void uncover(int c) {
    for (int i = up_[static_cast<std::size_t>(c)]; i != c; i = up_[static_cast<std::size_t>(i)])
      for (int j = left_[static_cast<std::size_t>(i)]; j != i; j = left_[static_cast<std::size_t>(j)]) {
        ++count_[static_cast<std::size_t>(col_[static_cast<std::size_t>(j)])];
        up_[static_cast<std::size_t>(down_[static_cast<std::size_t>(j)])] = j;
        down_[static_cast<std::size_t>(up_[static_cast<std::size_t>(j)])] = j;
      }
    left_[static_cast<std::size_t>(right_[static_cast<std::size_t>(c)])] = c;
    right_[static_cast<std::size_t>(left_[static_cast<std::size_t>(c)])] = c;
  }

  bool search(std::vector<int>& solution) {
    if (right_[0] == 0) return true;
    int best = right_[0];
    for (int c = right_[0]; c != 0; c = right_[static_cast<std::size_t>(c)])
      if (count_[static_cast<std::size_t>(c)] < count_[static_cast<std::size_t>(best)]) best = c;
    if (count_[static_cast<std::size_t>(best)] == 0) return false;

    cover(best);
    for (int i = down_[static_cast<std::size_t>(best)]; i != best; i = down_[static_cast<std::size_t>(i)]) {
      solution.push_back(row_of_[static_cast<std::size_t>(i)]);
      for (int j = right_[static_cast<std::size_t>(i)]; j != i; j = right_[static_cast<std::size_t>(j)])
        cover(col_[static_cast<std::size_t>(j)]);
      if (search(solution)) return true;
      for (int j = left_[static_cast<std::size_t>(i)]; j != i; j = left_[static_cast<std::size_t>(j)])
        uncover(col_[static_cast<std::size_t>(j)]);
      solution.pop_back();
    }
    uncover(best);
    return false;
  }

  int nv_;
  std::vector<int> left_, right_, up_, down_, col_, row_of_, count_;
};

}  // namespace

SolveReport exact_gamma(const Graph& g, const SolveBudget& budget) {
  check_ceiling(g);
  BranchAndBound search(g, budget);
  return search.run();
}

EfficientResult exists_efficient(const Graph& g) {
  check_ceiling(g);
  DancingLinks dlx(g);
  std::vector<int> rows;
  EfficientResult result;
  result.exists = dlx.solve(rows);
  if (result.exists) {
    VertexSet witness(g.vertex_count());
    for (int r : rows) witness.add(r);
    result.witness = std::move(witness);
  }
  return result;
}

VertexSet greedy_dominating_set(const Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  VertexSet s(g.vertex_count());
  for (int v : greedy_cover(g, order)) s.add(v);
  return s;
}

std::vector<VertexSet> random_dominating_sets(const Graph& g, int count, std::uint64_t seed) {
  if (count < 1) throw InvalidParams("count must be >= 1, got " + std::to_string(count));
  SplitMix64 rng(seed);
  std::vector<VertexSet> out;
  out.reserve(static_cast<std::size_t>(count));

  std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
  for (int i = 0; i < count; ++i) {
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t j = order.size(); j-- > 1;)  // Fisher-Yates, high to low
      std::swap(order[j], order[rng.below(j + 1)]);
    VertexSet s(g.vertex_count());
    for (int v : greedy_cover(g, order)) s.add(v);
    assert(is_dominating(g, s));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace petdom

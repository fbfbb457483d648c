#pragma once

#include <optional>
#include <string>
#include <vector>

#include "petdom/graph.hpp"
#include "petdom/solver.hpp"

namespace petdom {

/// Zhao-style upper bound on gamma(P(ck, k)), three cases keyed on c mod 3.
/// Requires c >= 3, k >= 1.
long long zhao_upper_bound(int c, int k);

/// Upper bound matched by construct_general, keyed on (c mod 4, k mod 4)
/// with the k = 4, 8 variants for c == 3 (mod 4). Requires c >= 3, k >= 3.
long long general_upper_bound(int c, int k);

enum class GammaSource { P4k, P5k, P6k, QuotedK1, QuotedK2, QuotedK3 };

/// An exact domination number with its provenance. `quoted` marks values
/// taken secondhand from the literature rather than from a family formula
/// this package also constructs witnesses for.
struct KnownGamma {
  int value = 0;
  GammaSource source = GammaSource::P4k;

  bool quoted() const {
    return source == GammaSource::QuotedK1 || source == GammaSource::QuotedK2 ||
           source == GammaSource::QuotedK3;
  }
  std::string source_name() const;
};

/// The exact gamma(P(n, k)) when a closed form is on record for (n, k):
/// the n = 4k, 5k, 6k families plus quoted k <= 3 results (k = 1 all n,
/// k = 2 all n, k = 3 only for n == 3 (mod 4), n != 11, and n == 2 (mod 4)).
/// Absent otherwise; in particular no value is recorded for P(3k, k).
std::optional<KnownGamma> known_gamma(int n, int k);

/// The trace of a set in the k index-residue columns of P(ck, k): column i
/// holds the members (outer and inner) whose index is congruent to i mod k.
struct ColumnProfile {
  int c = 0;
  int k = 0;
  std::vector<int> sizes;
  std::vector<VertexSet> columns;

  int total() const;
};

/// Partitions s by index mod k. Throws NotFactored when params.c is absent.
ColumnProfile column_profile(const Graph& g, const VertexSet& s);

struct AuditCheck {
  std::string name;
  std::optional<int> column;
  bool pass = true;
  std::string witness;  // non-empty on failure
};

struct AuditReport {
  std::vector<AuditCheck> checks;
  bool all_pass() const;
  int failures() const;
};

// Individual column rules, applicable to any factored P(ck, k). Each
// returns one entry per column (or per column window) it inspects.

/// Every column has at least `min` members.
std::vector<AuditCheck> check_column_min_size(const ColumnProfile& p, int min);

/// c = 5: a column holding two outer members whose indices differ by 2k or
/// 3k has at least four members.
std::vector<AuditCheck> check_outer_pair_rule(const Graph& g, const ColumnProfile& p);

/// c = 5: a two-member column consists of two non-adjacent inner vertices,
/// and the follow-on size constraints on the next three columns hold.
std::vector<AuditCheck> check_size_two_column_rules(const Graph& g, const ColumnProfile& p);

/// c = 6: a column with exactly one inner member has at least four members.
std::vector<AuditCheck> check_single_inner_rule(const Graph& g, const ColumnProfile& p);

/// c = 6: every three consecutive columns hold at least ten members.
std::vector<AuditCheck> check_triple_sum_rule(const ColumnProfile& p);

/// Runs the column rules proved for dominating sets of P(5k, k) (c = 5) or
/// P(6k, k) (c = 6), k >= 4, prefixed with a domination pre-check. A failed
/// rule on a genuine dominating set indicates a checker bug, never a
/// property of the input. Throws NotApplicable for other shapes.
AuditReport audit_lemmas(const Graph& g, const VertexSet& s);

struct BoundTableRow {
  int c = 0;
  int k = 0;
  long long zhao = 0;
  long long general = 0;
  int construction_size = 0;
  bool construction_verified = false;
  std::optional<int> exact;
  std::optional<bool> optimal;
};

struct TableOptions {
  /// Run the exact solver on cells with 2n <= this many vertices (0 = never).
  int exact_max_vertices = 0;
  SolveBudget budget;
};

/// One row per (c, k) in the inclusive ranges, ordered by (c, k).
std::vector<BoundTableRow> bound_table(int c_lo, int c_hi, int k_lo, int k_hi,
                                       const TableOptions& options = {});

}  // namespace petdom

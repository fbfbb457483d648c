#include "petdom/analysis.hpp"

#include <numeric>

#include "petdom/constructions.hpp"

namespace petdom {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

long long zhao_upper_bound(int c, int k) {
  if (c < 3 || k < 1)
    throw UnsupportedParams("bound requires c >= 3 and k >= 1, got c = " + std::to_string(c) +
                            ", k = " + std::to_string(k));
  const long long base = ceil_div(5LL * k, 3);
  switch (c % 3) {
    case 0: return (c / 3) * base;
    case 1: return ceil_div(c, 3) * base - ceil_div(2LL * k, 3);
    default: return ceil_div(c, 3) * base - ceil_div(2LL * k, 3) + ceil_div(k, 3);
  }
}

long long general_upper_bound(int c, int k) {
  if (c < 3 || k < 3)
    throw UnsupportedParams("bound requires c >= 3 and k >= 3, got c = " + std::to_string(c) +
                            ", k = " + std::to_string(k));
  const long long ck = static_cast<long long>(c) * k;
  const long long alpha = k % 2 == 0 ? c / 4 : 0;
  switch (c % 4) {
    case 0:
      return ck / 2 + alpha;
    case 1:
      if (k % 2 == 0) return ck / 2 + k / 2 - 1 + alpha;
      return (ck - 1) / 2 + (k + 1) / 2 + alpha;
    case 2:
      if (k % 2 == 0) return ck / 2 + k / 2 - 1 + alpha;
      if (k % 4 == 1) return ck / 2 + (k + 1) / 2 + alpha;
      return ck / 2 + (k - 1) / 2 + alpha;
    default:  // c == 3 (mod 4)
      if (k == 4 || k == 8) return ck / 2 + k / 4 + alpha;
      return ck / 2 + k / 4 + 1 + alpha;
  }
}

std::string KnownGamma::source_name() const {
  switch (source) {
    case GammaSource::P4k: return "p4k";
    case GammaSource::P5k: return "p5k";
    case GammaSource::P6k: return "p6k";
    case GammaSource::QuotedK1: return "quoted-k1";
    case GammaSource::QuotedK2: return "quoted-k2";
    case GammaSource::QuotedK3: return "quoted-k3";
  }
  return "?";
}

std::optional<KnownGamma> known_gamma(int n, int k) {
  PetersenParams::nk(n, k).validate();

  std::vector<KnownGamma> hits;
  if (n == 4 * k) hits.push_back({k % 2 == 1 ? 2 * k : 2 * k + 1, GammaSource::P4k});
  if (n == 5 * k) hits.push_back({3 * k, GammaSource::P5k});
  if (n == 6 * k) {
    const int base = static_cast<int>((10LL * k + 2) / 3);
    hits.push_back({k == 2 ? base + 1 : base, GammaSource::P6k});
  }
  if (k == 1) hits.push_back({n % 4 == 2 ? n / 2 + 1 : (n + 1) / 2, GammaSource::QuotedK1});
  if (k == 2) hits.push_back({(3 * n + 4) / 5, GammaSource::QuotedK2});
  if (k == 3) {
    // Only the two quoted residue classes; nothing broader.
    if (n % 4 == 3 && n != 11)
      hits.push_back({(n + 1) / 2 + 1, GammaSource::QuotedK3});
    else if (n % 4 == 2)
      hits.push_back({n / 2 + 1, GammaSource::QuotedK3});
  }
  if (hits.empty()) return std::nullopt;
  for (const auto& h : hits)
    if (h.value != hits[0].value)
      throw std::logic_error("inconsistent recorded gamma values for P(" + std::to_string(n) + "," +
                             std::to_string(k) + ")");
  // Family formulas (which this package also constructs witnesses for) win
  // over quoted literature values for attribution.
  return hits.front();
}

int ColumnProfile::total() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

ColumnProfile column_profile(const Graph& g, const VertexSet& s) {
  const PetersenParams& params = g.params();
  if (!params.c)
    throw NotFactored("column profile requires the n = c*k factorization");
  if (s.universe() != g.vertex_count())
    throw std::logic_error("set universe does not match graph");

  ColumnProfile profile;
  profile.c = *params.c;
  profile.k = params.k;
  profile.sizes.assign(static_cast<std::size_t>(params.k), 0);
  profile.columns.assign(static_cast<std::size_t>(params.k), VertexSet(g.vertex_count()));
  for (int v : s.members()) {
    const int index = v < params.n ? v : v - params.n;
    const int col = index % params.k;
    ++profile.sizes[static_cast<std::size_t>(col)];
    profile.columns[static_cast<std::size_t>(col)].add(v);
  }
  return profile;
}

bool AuditReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

int AuditReport::failures() const {
  int total = 0;
  for (const auto& c : checks)
    if (!c.pass) ++total;
  return total;
}

std::vector<AuditCheck> check_column_min_size(const ColumnProfile& p, int min) {
  std::vector<AuditCheck> out;
  for (int i = 0; i < p.k; ++i) {
    AuditCheck check{"column-min-size", i, true, ""};
    if (p.sizes[static_cast<std::size_t>(i)] < min) {
      check.pass = false;
      check.witness = "|S_" + std::to_string(i) + "| = " + std::to_string(p.sizes[static_cast<std::size_t>(i)]);
    }
    out.push_back(std::move(check));
  }
  return out;
}

std::vector<AuditCheck> check_outer_pair_rule(const Graph& g, const ColumnProfile& p) {
  const int n = g.n();
  const int k = p.k;
  std::vector<AuditCheck> out;
  for (int i = 0; i < k; ++i) {
    AuditCheck check{"outer-pair-forces-four", i, true, ""};
    std::vector<int> outers;
    for (int v : p.columns[static_cast<std::size_t>(i)].members())
      if (v < n) outers.push_back(v);
    for (std::size_t a = 0; a < outers.size() && check.pass; ++a)
      for (std::size_t b = a + 1; b < outers.size() && check.pass; ++b) {
        const int diff = outers[b] - outers[a];
        if ((diff == 2 * k || diff == 3 * k) && p.sizes[static_cast<std::size_t>(i)] < 4) {
          check.pass = false;
          check.witness = "v" + std::to_string(outers[a]) + ", v" + std::to_string(outers[b]) +
                          " with |S_" + std::to_string(i) +
                          "| = " + std::to_string(p.sizes[static_cast<std::size_t>(i)]);
        }
      }
    out.push_back(std::move(check));
  }
  return out;
}

std::vector<AuditCheck> check_size_two_column_rules(const Graph& g, const ColumnProfile& p) {
  const int n = g.n();
  const int k = p.k;
  std::vector<AuditCheck> out;
  auto size_at = [&](int i) { return p.sizes[static_cast<std::size_t>(((i % k) + k) % k)]; };

  for (int i = 0; i < k; ++i) {
    if (size_at(i) != 2) continue;

    const auto members = p.columns[static_cast<std::size_t>(i)].members();
    AuditCheck inner{"size-two-column-inner-independent", i, true, ""};
    if (members[0] < n || members[1] < n) {
      inner.pass = false;
      inner.witness = "outer member in two-vertex column " + std::to_string(i);
    } else {
      const auto nbs = g.neighbors(members[0]);
      if (std::find(nbs.begin(), nbs.end(), members[1]) != nbs.end()) {
        inner.pass = false;
        inner.witness = "adjacent pair " + VertexId::from_dense(n, members[0]).token() + ", " +
                        VertexId::from_dense(n, members[1]).token();
      }
    }
    out.push_back(std::move(inner));

    AuditCheck chain{"size-two-successor-chain", i, true, ""};
    const int s1 = size_at(i + 1);
    const int s2 = size_at(i + 2);
    const int s3 = size_at(i + 3);
    if (s1 == 2) {
      if (s2 < 4)
        chain = {"size-two-successor-chain", i, false,
                 "|S_+1| = 2 but |S_+2| = " + std::to_string(s2)};
      else if (s2 == 4 && s3 < 4)
        chain = {"size-two-successor-chain", i, false,
                 "|S_+2| = 4 but |S_+3| = " + std::to_string(s3)};
    } else if (s1 == 3) {
      if (s2 < 3)
        chain = {"size-two-successor-chain", i, false,
                 "|S_+1| = 3 but |S_+2| = " + std::to_string(s2)};
      else if (s2 == 3 && s3 < 4)
        chain = {"size-two-successor-chain", i, false,
                 "|S_+2| = 3 but |S_+3| = " + std::to_string(s3)};
    }
    out.push_back(std::move(chain));
  }
  return out;
}

std::vector<AuditCheck> check_single_inner_rule(const Graph& g, const ColumnProfile& p) {
  const int n = g.n();
  std::vector<AuditCheck> out;
  for (int i = 0; i < p.k; ++i) {
    AuditCheck check{"single-inner-forces-four", i, true, ""};
    int inner_count = 0;
    for (int v : p.columns[static_cast<std::size_t>(i)].members())
      if (v >= n) ++inner_count;
    if (inner_count == 1 && p.sizes[static_cast<std::size_t>(i)] < 4) {
      check.pass = false;
      check.witness = "|B ∩ S_" + std::to_string(i) + "| = 1 with |S_" + std::to_string(i) +
                      "| = " + std::to_string(p.sizes[static_cast<std::size_t>(i)]);
    }
    out.push_back(std::move(check));
  }
  return out;
}

std::vector<AuditCheck> check_triple_sum_rule(const ColumnProfile& p) {
  const int k = p.k;
  std::vector<AuditCheck> out;
  for (int i = 0; i < k; ++i) {
    const int sum = p.sizes[static_cast<std::size_t>((i + k - 1) % k)] +
                    p.sizes[static_cast<std::size_t>(i)] +
                    p.sizes[static_cast<std::size_t>((i + 1) % k)];
    AuditCheck check{"triple-sum-at-least-ten", i, true, ""};
    if (sum < 10) {
      check.pass = false;
      check.witness = "columns " + std::to_string((i + k - 1) % k) + "," + std::to_string(i) + "," +
                      std::to_string((i + 1) % k) + " hold " + std::to_string(sum);
    }
    out.push_back(std::move(check));
  }
  return out;
}

AuditReport audit_lemmas(const Graph& g, const VertexSet& s) {
  const PetersenParams& params = g.params();
  if (!params.c || (*params.c != 5 && *params.c != 6))
    throw NotApplicable("column audits apply to P(5k,k) and P(6k,k) only");
  if (params.k < 4)
    throw NotApplicable("column audits require k >= 4 (smaller k aliases the column windows)");

  const ColumnProfile profile = column_profile(g, s);
  AuditReport report;
  report.checks.push_back({"dominating", std::nullopt, is_dominating(g, s), ""});
  if (!report.checks.back().pass) report.checks.back().witness = "input set does not dominate";

  auto append = [&report](std::vector<AuditCheck> checks) {
    for (auto& c : checks) report.checks.push_back(std::move(c));
  };
  append(check_column_min_size(profile, 2));
  if (*params.c == 5) {
    append(check_outer_pair_rule(g, profile));
    append(check_size_two_column_rules(g, profile));
  } else {
    append(check_single_inner_rule(g, profile));
    append(check_triple_sum_rule(profile));
  }
  return report;
}

std::vector<BoundTableRow> bound_table(int c_lo, int c_hi, int k_lo, int k_hi,
                                       const TableOptions& options) {
  if (c_lo > c_hi || k_lo > k_hi || c_lo < 3 || k_lo < 3)
    throw InvalidParams("table ranges must be non-empty with c >= 3 and k >= 3");

  std::vector<BoundTableRow> rows;
  for (int c = c_lo; c <= c_hi; ++c)
    for (int k = k_lo; k <= k_hi; ++k) {
      BoundTableRow row;
      row.c = c;
      row.k = k;
      row.zhao = zhao_upper_bound(c, k);
      row.general = general_upper_bound(c, k);
      const ConstructionReport report = construct_general(c, k);
      row.construction_size = report.set.size();
      row.construction_verified = report.verified;
      if (options.exact_max_vertices > 0 && 2 * c * k <= options.exact_max_vertices) {
        const Graph g = Graph::build(PetersenParams::ck(c, k));
        const SolveReport solve = exact_gamma(g, options.budget);
        row.exact = solve.gamma;
        row.optimal = solve.optimal;
      }
      rows.push_back(row);
    }
  return rows;
}

}  // namespace petdom

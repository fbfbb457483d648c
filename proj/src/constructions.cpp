#include "petdom/constructions.hpp"

#include <utility>
#include <vector>

#include "petdom/analysis.hpp"
#include "petdom/solver.hpp"

namespace petdom {

namespace {

// Assembles a vertex pattern from named blocks with one mod-n reduction
// point. The cardinality accounting of the source formulas assumes the
// blocks are disjoint, so a duplicate insertion throws instead of silently
// shrinking the set. Explicit removals must hit a present vertex.
class BlockBuilder {
 public:
  explicit BlockBuilder(int n) : n_(n), owner_(static_cast<std::size_t>(2 * n), -1), set_(2 * n) {}

  void begin(std::string name) { blocks_.push_back(std::move(name)); }

  void outer(long long i) { insert(mod_index(n_, i)); }
  void inner(long long i) { insert(n_ + mod_index(n_, i)); }
  void remove_outer(long long i) { erase(mod_index(n_, i)); }
  void remove_inner(long long i) { erase(n_ + mod_index(n_, i)); }

  const VertexSet& set() const { return set_; }

  void check_size(int claimed) const {
    if (set_.size() != claimed)
      throw TranscriptionError("assembled " + std::to_string(set_.size()) + " vertices, formula claims " +
                               std::to_string(claimed));
  }

 private:
  void insert(int id) {
    auto& owner = owner_[static_cast<std::size_t>(id)];
    if (owner >= 0)
      throw TranscriptionError("block '" + blocks_.back() + "' overlaps block '" +
                               blocks_[static_cast<std::size_t>(owner)] + "' at " +
                               VertexId::from_dense(n_, id).token());
    owner = static_cast<int>(blocks_.size()) - 1;
    set_.add(id);
  }

  void erase(int id) {
    auto& owner = owner_[static_cast<std::size_t>(id)];
    if (owner < 0)
      throw TranscriptionError("removal of absent vertex " + VertexId::from_dense(n_, id).token());
    owner = -1;
    set_.remove(id);
  }

  int n_;
  std::vector<std::string> blocks_;
  std::vector<int> owner_;
  VertexSet set_;
};

// Odd k. Base pattern: outer vertices at 4i, inner at 4i+2, for
// 0 <= i < floor(n/4); tails keyed on (c mod 4, k mod 4).
void build_odd_k(BlockBuilder& b, int c, int k, int n) {
  const int m = n / 4;
  b.begin("outer-quarter");
  for (int i = 0; i < m; ++i) b.outer(4LL * i);
  b.begin("inner-quarter");
  for (int i = 0; i < m; ++i) b.inner(4LL * i + 2);

  switch (c % 4) {
    case 0:
      break;
    case 1:
      if (k % 4 == 1) {
        b.begin("tail-inner-pairs");
        for (int i = 0; i <= k / 4 - 1; ++i) {
          b.inner(n - 2 - 4LL * i);
          b.inner(n - 4 - 4LL * i);
        }
        b.begin("tail-last");
        b.inner(n - 1);
      } else {
        b.begin("tail-inner-pairs");
        for (int i = 0; i <= (k + 3) / 4 - 1; ++i) {
          b.inner(n - 2 - 4LL * i);
          b.inner(n - 4 - 4LL * i);
        }
        b.begin("tail-last");
        b.outer(n - 3);
      }
      break;
    case 2:
      if (k % 4 == 1) {
        b.begin("tail-inner-pairs");
        for (int i = 0; i <= k / 4 - 1; ++i) {
          b.inner(n - 2 - 4LL * i);
          b.inner(n - 5 - 4LL * i);
        }
        b.begin("tail-last");
        b.inner(n - 1);
        b.inner(n - 3);
      } else {
        b.begin("tail-inner-pairs");
        for (int i = 0; i <= (k + 3) / 4 - 1; ++i) {
          b.inner(n - 2 - 4LL * i);
          b.inner(n - 3 - 4LL * i);
        }
      }
      break;
    default:  // c == 3 (mod 4)
      b.begin("tail-inner-run");
      for (int i = 0; i <= k / 4; ++i) b.inner(n - 2 - 4LL * i);
      if (k % 4 == 1) {
        b.begin("tail-last");
        b.outer(n - 3);
      }
      break;
  }
}

// Even k. Base pattern: five blocks repeated in each of the floor(c/4)
// windows of width 4k, then a tail for the remaining r = c mod 4 windows.
void build_even_k(BlockBuilder& b, int c, int k, int n) {
  const int m2 = c / 4;
  const long long w = 4LL * k;

  if (k % 4 == 0) {
    const int q = k / 4;
    b.begin("window-a");
    for (int j = 0; j < m2; ++j)
      for (int i = 0; i < q; ++i) {
        b.outer(w * j + 2 + 4LL * i);
        b.inner(w * j + 4LL * i);
      }
    b.begin("window-b");
    for (int j = 0; j < m2; ++j)
      for (int i = 0; i < q; ++i) {
        b.outer(w * j + k + 1 + 4LL * i);
        b.inner(w * j + k + 3 + 4LL * i);
      }
    b.begin("window-c");
    for (int j = 0; j < m2; ++j)
      for (int i = 0; i < q; ++i) {
        b.outer(w * j + 2LL * k + 4LL * i);
        b.inner(w * j + 2LL * k + 2 + 4LL * i);
      }
    b.begin("window-d");
    for (int j = 0; j < m2; ++j)
      for (int i = 0; i < q; ++i) {
        b.outer(w * j + 3LL * k + 3 + 4LL * i);
        b.inner(w * j + 3LL * k + 1 + 4LL * i);
      }
    b.begin("window-e");
    for (int j = 0; j < m2; ++j) b.outer(w * j + 3LL * k);
  } else {  // k == 2 (mod 4)
    const int q = (k - 2) / 4;
    b.begin("window-a");
    for (int j = 0; j < m2; ++j)
      for (int i = 0; i < q; ++i) {
        b.outer(w * j + 4LL * i);
        b.inner(w * j + 2 + 4LL * i);
      }
    b.begin("window-b");
    for (int j = 0; j < m2; ++j)
      for (int i = 0; i < q; ++i) {
        b.outer(w * j + k + 1 + 4LL * i);
        b.inner(w * j + k - 1 + 4LL * i);
      }
    b.begin("window-c");
    for (int j = 0; j < m2; ++j)
      for (int i = 0; i < q; ++i) {
        b.outer(w * j + 2LL * k + 2 + 4LL * i);
        b.inner(w * j + 2LL * k + 4LL * i);
      }
    b.begin("window-d");
    for (int j = 0; j < m2; ++j)
      for (int i = 0; i < q; ++i) {
        b.outer(w * j + 3LL * k - 1 + 4LL * i);
        b.inner(w * j + 3LL * k + 1 + 4LL * i);
      }
    b.begin("window-e");
    for (int j = 0; j < m2; ++j) {
      b.outer(w * j + k - 2);
      b.outer(w * j + 2LL * k - 2);
      b.outer(w * j + 4LL * k - 3);
      b.inner(w * j + 2LL * k - 3);
      b.inner(w * j + 4LL * k - 2);
    }
  }

  switch (c % 4) {
    case 0:
      break;
    case 1:
      if (k % 4 == 0) {
        b.begin("tail-inner-run");
        for (int i = n - k + 1; i <= n - 1; ++i) b.inner(i);
      } else {
        b.begin("tail-inner-run");
        for (int i = n - k + 1; i <= n - 4; ++i) b.inner(i);
        b.begin("tail-mixed");
        b.outer(n - static_cast<long long>(k));
        b.outer(n - 3);
        b.inner(n - 1);
      }
      break;
    case 2:
      if (k % 4 == 0) {
        b.begin("tail-pairs");
        for (int i = 0; i <= k / 4 - 1; ++i) {
          b.outer(n - 2LL * k + 2 + 4LL * i);
          b.inner(n - 2LL * k + 4LL * i);
        }
        b.begin("tail-inner-run");
        for (int i = n - k; i <= n - 1; ++i) b.inner(i);
        b.remove_inner(n - 2LL * k);
      } else {
        b.begin("tail-pairs");
        for (int i = 0; i <= (k - 2) / 4 - 1; ++i) {
          b.outer(n - 2LL * k + 4LL * i);
          b.inner(n - 2LL * k + 2 + 4LL * i);
        }
        b.begin("tail-inner-run");
        for (int i = n - k - 3; i <= n - 5; ++i) b.inner(i);
        b.begin("tail-last");
        b.outer(n - 3);
      }
      break;
    default:  // c == 3 (mod 4)
      if (k == 4) {
        b.begin("tail-outer-anchors");
        for (int i = 1; i <= 3; ++i) {
          b.outer(n - static_cast<long long>(i) * k);
          b.outer(n - static_cast<long long>(i) * k + 3);
        }
        b.begin("tail-inner");
        b.inner(n - 2LL * k + 2);
        b.inner(n - static_cast<long long>(k) + 1);
        b.remove_outer(n - static_cast<long long>(k));
      } else if (k == 8) {
        b.begin("tail-outer-anchors");
        for (int i = 1; i <= 3; ++i) {
          b.outer(n - static_cast<long long>(i) * k);
          b.outer(n - static_cast<long long>(i) * k + 3);
          b.outer(n - static_cast<long long>(i) * k + 6);
        }
        b.begin("tail-inner");
        b.inner(n - 3LL * k + 4);
        b.inner(n - 2LL * k + 2);
        b.inner(n - 2LL * k + 7);
        b.inner(n - static_cast<long long>(k) + 1);
        b.inner(n - static_cast<long long>(k) + 5);
      } else if (k % 4 == 0) {
        b.begin("tail-window3");
        for (int i = 0; i <= k / 4 - 2; ++i) {
          b.outer(n - 3LL * k + 6 + 4LL * i);
          b.inner(n - 3LL * k + 4 + 4LL * i);
        }
        b.begin("tail-window2");
        for (int i = 0; i <= k / 4 - 3; ++i) {
          b.outer(n - 2LL * k + 9 + 4LL * i);
          b.inner(n - 2LL * k + 11 + 4LL * i);
        }
        b.begin("tail-window1");
        for (int i = 0; i <= k / 4 - 3; ++i) {
          b.outer(n - static_cast<long long>(k) + 8 + 4LL * i);
          b.inner(n - static_cast<long long>(k) + 9 + 4LL * i);
          b.inner(n - static_cast<long long>(k) + 10 + 4LL * i);
        }
        b.begin("tail-outer-anchors");
        for (int i = 1; i <= 3; ++i) {
          b.outer(n - static_cast<long long>(i) * k);
          b.outer(n - static_cast<long long>(i) * k + 3);
        }
        b.begin("tail-outer-extra");
        b.outer(n - 2LL * k + 6);
        b.outer(n - static_cast<long long>(k) + 6);
        b.outer(n - 1);
        b.begin("tail-inner-extra");
        b.inner(n - 2LL * k + 2);
        b.inner(n - 2LL * k + 7);
        b.inner(n - static_cast<long long>(k) + 1);
        b.inner(n - static_cast<long long>(k) + 5);
      } else {  // k == 2 (mod 4)
        b.begin("tail-window3");
        for (int i = 0; i <= (k - 2) / 4 - 1; ++i) {
          b.outer(n - 3LL * k + 4LL * i);
          b.inner(n - 3LL * k + 2 + 4LL * i);
        }
        b.begin("tail-window2");
        for (int i = 0; i <= (k - 2) / 4; ++i) {
          b.outer(n - 2LL * k + 1 + 4LL * i);
          b.inner(n - 2LL * k - 1 + 4LL * i);
        }
        b.begin("tail-window1");
        for (int i = 0; i <= (k - 2) / 4 - 1; ++i) {
          b.outer(n - static_cast<long long>(k) + 3 + 4LL * i);
          b.inner(n - static_cast<long long>(k) + 4LL * i);
          b.inner(n - static_cast<long long>(k) + 1 + 4LL * i);
        }
        b.begin("tail-extra");
        b.outer(n - 2LL * k - 2);
        b.inner(n - 2);
      }
      break;
  }
}

CaseLabel make_general_label(int c, int k) {
  CaseLabel label;
  label.family = k % 2 == 1 ? Family::GeneralOddK : Family::GeneralEvenK;
  label.c_mod4 = c % 4;
  label.k_mod2 = k % 2;
  label.k_mod4 = k % 4;
  if (c % 4 == 3 && k == 4) label.special = SpecialCase::K4;
  if (c % 4 == 3 && k == 8) label.special = SpecialCase::K8;
  return label;
}

}  // namespace

std::string CaseLabel::to_string() const {
  std::string out;
  switch (family) {
    case Family::GeneralOddK: out = "general-odd-k"; break;
    case Family::GeneralEvenK: out = "general-even-k"; break;
    case Family::P6k: out = "p6k"; break;
  }
  out += "(";
  bool first = true;
  auto item = [&](const std::string& s) {
    if (!first) out += ", ";
    out += s;
    first = false;
  };
  if (c_mod4) item("c mod 4 = " + std::to_string(*c_mod4));
  if (family == Family::P6k) {
    item("t = " + std::to_string(t_mod3.value_or(0)));
  } else if (k_mod4) {
    item("k mod 4 = " + std::to_string(*k_mod4));
  }
  if (special == SpecialCase::K4) item("k = 4");
  if (special == SpecialCase::K8) item("k = 8");
  out += ")";
  return out;
}

ConstructionReport construct_general(int c, int k) {
  if (c < 3 || k < 3)
    throw UnsupportedParams("general construction requires c >= 3 and k >= 3, got c = " +
                            std::to_string(c) + ", k = " + std::to_string(k));
  const PetersenParams params = PetersenParams::ck(c, k);
  const Graph g = Graph::build(params);
  const int n = params.n;

  BlockBuilder b(n);
  if (k % 2 == 1)
    build_odd_k(b, c, k, n);
  else
    build_even_k(b, c, k, n);

  const long long claimed = general_upper_bound(c, k);
  b.check_size(static_cast<int>(claimed));

  ConstructionReport report;
  report.params = params;
  report.label = make_general_label(c, k);
  report.set = b.set();
  report.claimed_size = static_cast<int>(claimed);
  report.verified = is_dominating(g, report.set);
  return report;
}

ConstructionReport construct_p6k(int k) {
  if (k < 4) throw UnsupportedParams("P(6k,k) construction requires k >= 4, got k = " + std::to_string(k));
  const PetersenParams params = PetersenParams::ck(6, k);
  const Graph g = Graph::build(params);
  const int n = params.n;
  const int t = k % 3;

  BlockBuilder b(n);
  if (t == 0) {
    b.begin("inner-run-low");
    for (int i = 0; i <= k - 1; ++i) b.inner(i);
    b.begin("inner-run-high");
    for (int i = 3 * k; i <= 4 * k - 1; ++i) b.inner(i);
    b.begin("outer-stride-k");
    for (int i = 0; i <= 2 * k / 3 - 1; ++i) b.outer(k + 3LL * i + 1);
    b.begin("outer-stride-4k");
    for (int i = 0; i <= 2 * k / 3 - 1; ++i) b.outer(4LL * k + 3LL * i + 1);
  } else if (t == 1) {
    b.begin("inner-run-low");
    for (int i = 0; i <= k - 1; ++i) b.inner(i);
    b.begin("inner-run-high");
    for (int i = 3 * k - 2; i <= 4 * k - 3; ++i) b.inner(i);
    b.begin("outer-stride-k");
    for (int i = 0; i <= (2 * k - 2) / 3 - 1; ++i) b.outer(k + 3LL * i + 1);
    b.begin("outer-stride-4k");
    for (int i = 0; i <= (k - 1) / 3 - 1; ++i) b.outer(4LL * k + 3LL * i - 1);
    b.begin("outer-pair");
    b.outer(5LL * k - 2);
    b.outer(5LL * k - 1);
    b.begin("outer-stride-5k");
    for (int i = 0; i <= (k - 1) / 3 - 1; ++i) b.outer(5LL * k + 3LL * i + 2);
  } else {  // t == 2
    b.begin("inner-run-low");
    for (int i = 0; i <= k - 1; ++i) b.inner(i);
    b.begin("outer-stride-k");
    for (int i = 0; i <= (k - 2) / 3; ++i) b.outer(k + 3LL * i + 1);
    b.begin("outer-stride-2k");
    for (int i = 0; i <= (k - 5) / 3 - 1; ++i) b.outer(2LL * k + 3LL * i + 2);
    b.begin("inner-run-high");
    for (int i = 3 * k; i <= 4 * k - 5; ++i) b.inner(i);
    b.begin("outer-stride-4k");
    for (int i = 0; i <= (k - 5) / 3 - 1; ++i) b.outer(4LL * k + 3LL * i + 1);
    b.begin("outer-stride-5k");
    for (int i = 0; i <= (k - 2) / 3; ++i) b.outer(5LL * k + 3LL * i);
    b.begin("patch");
    b.inner(3LL * k - 4);
    b.outer(3LL * k - 2);
    b.inner(4LL * k - 3);
    b.inner(4LL * k - 1);
    b.outer(4LL * k - 3);
    b.inner(5LL * k - 2);
    b.outer(5LL * k - 4);
  }

  const int claimed = static_cast<int>((10LL * k + 2) / 3);
  b.check_size(claimed);

  ConstructionReport report;
  report.params = params;
  report.label.family = Family::P6k;
  report.label.c_mod4 = 6 % 4;
  report.label.k_mod2 = k % 2;
  report.label.k_mod4 = k % 4;
  report.label.t_mod3 = t;
  report.set = b.set();
  report.claimed_size = claimed;
  report.verified = is_dominating(g, report.set);
  return report;
}

ConstructionReport construct_efficient(const PetersenParams& in) {
  PetersenParams params = in;
  params.validate();
  if (params.n % 4 != 0 || params.k % 2 == 0)
    throw NotApplicable("efficient dominating sets require n == 0 (mod 4) and odd k; got n = " +
                        std::to_string(params.n) + ", k = " + std::to_string(params.k));
  if (!params.c && params.n % params.k == 0 && params.n / params.k >= 3) params.c = params.n / params.k;

  const Graph g = Graph::build(params);
  const int n = params.n;

  BlockBuilder b(n);
  b.begin("outer-quarter");
  for (int i = 0; i < n / 4; ++i) b.outer(4LL * i);
  b.begin("inner-quarter");
  for (int i = 0; i < n / 4; ++i) b.inner(4LL * i + 2);

  VertexSet set = b.set();
  if (!is_efficient_dominating(g, set)) {
    // Should not occur: the quarter-phase pattern covers each vertex once
    // for every odd k when 4 | n. Kept as a safety net.
    const EfficientResult fallback = exists_efficient(g);
    if (!fallback.exists)
      throw NotApplicable("no efficient dominating set exists for P(" + std::to_string(params.n) +
                          "," + std::to_string(params.k) + ")");
    set = *fallback.witness;
  }

  ConstructionReport report;
  report.params = params;
  report.label.family = Family::GeneralOddK;
  if (params.c) report.label.c_mod4 = *params.c % 4;
  report.label.k_mod2 = params.k % 2;
  report.label.k_mod4 = params.k % 4;
  report.set = set;
  report.claimed_size = n / 2;
  report.verified = is_dominating(g, set);
  return report;
}

}  // namespace petdom

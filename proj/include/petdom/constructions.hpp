#pragma once

#include <optional>
#include <string>

#include "petdom/graph.hpp"

namespace petdom {

/// Construction family: the general P(ck,k) pattern (split by parity of k)
/// or the dedicated P(6k,k) pattern.
enum class Family { GeneralOddK, GeneralEvenK, P6k };

enum class SpecialCase { None, K4, K8 };

/// Identifies which case of a construction produced a set. Residues are
/// recorded exactly as computed from the (c, k) the set was built for.
struct CaseLabel {
  Family family = Family::GeneralOddK;
  std::optional<int> c_mod4;
  int k_mod2 = 0;
  std::optional<int> k_mod4;
  std::optional<int> t_mod3;  // P6k only: t = k mod 3
  SpecialCase special = SpecialCase::None;

  std::string to_string() const;
};

/// A materialized dominating-set candidate together with the size its
/// defining formula claims. `verified` is the result of a full domination
/// check, never assumed; |set| == claimed_size is enforced at build time.
struct ConstructionReport {
  PetersenParams params;
  CaseLabel label;
  VertexSet set;
  int claimed_size = 0;
  bool verified = false;
};

/// The general P(ck, k) dominating set, c >= 3, k >= 3. Dispatches on
/// (c mod 4, k mod 4) with dedicated k = 4 and k = 8 variants for
/// c == 3 (mod 4). Throws UnsupportedParams outside the hypothesis and
/// TranscriptionError if the transcribed pattern overlaps itself or misses
/// its claimed cardinality.
ConstructionReport construct_general(int c, int k);

/// The P(6k, k) set of ceil(10k/3) vertices, k >= 4, dispatching on
/// t = k mod 3.
ConstructionReport construct_p6k(int k);

/// An efficient dominating set of size n/2 for n == 0 (mod 4) and odd k,
/// built from the quarter-phase pattern {v_{4i}} u {u_{4i+2}}; falls back to
/// exact-cover search in the unexpected case the pattern fails to verify.
/// Throws NotApplicable when no efficient dominating set exists.
ConstructionReport construct_efficient(const PetersenParams& params);

}  // namespace petdom

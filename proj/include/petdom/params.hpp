#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace petdom {

/// Invalid (n, k) pair or inconsistent factorization.
struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Parameters outside a construction's hypothesis.
struct UnsupportedParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The requested object provably does not exist for these parameters.
struct NotApplicable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Operation requires the n = c*k factorization but none was given.
struct NotFactored : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A transcribed vertex pattern failed an internal consistency check
/// (overlapping blocks or a cardinality mismatch). Always a bug, never
/// a property of valid inputs.
struct TranscriptionError : std::logic_error {
  using std::logic_error::logic_error;
};

/// The pair (n, k) of P(n, k), optionally carrying the factorization n = c*k.
struct PetersenParams {
  int n = 0;
  int k = 0;
  std::optional<int> c;

  static PetersenParams nk(int n, int k);
  /// From the P(ck, k) form; keeps c.
  static PetersenParams ck(int c, int k);

  /// Throws InvalidParams unless n >= 3, 1 <= k <= (n-1)/2, and c*k == n
  /// with c >= 3 when c is present. k = n/2 is rejected even when integral
  /// (the inner edges would be doubled).
  void validate() const;

  friend bool operator==(const PetersenParams&, const PetersenParams&) = default;
};

enum class VertexRole : std::uint8_t { Outer, Inner };

/// One vertex of P(n, k). Dense encoding: outer v_i -> i, inner u_i -> n + i;
/// the total order on vertices is the dense encoding order.
struct VertexId {
  VertexRole role = VertexRole::Outer;
  int index = 0;

  static VertexId outer(int i) { return {VertexRole::Outer, i}; }
  static VertexId inner(int i) { return {VertexRole::Inner, i}; }
  static VertexId from_dense(int n, int dense);

  int dense(int n) const { return role == VertexRole::Outer ? index : n + index; }

  /// "v<i>" for outer vertices, "u<i>" for inner ones.
  std::string token() const;
  static std::optional<VertexId> parse(std::string_view token);

  friend bool operator==(const VertexId&, const VertexId&) = default;
};

}  // namespace petdom

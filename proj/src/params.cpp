#include "petdom/params.hpp"

#include <charconv>

namespace petdom {

PetersenParams PetersenParams::nk(int n, int k) {
  PetersenParams p;
  p.n = n;
  p.k = k;
  return p;
}

PetersenParams PetersenParams::ck(int c, int k) {
  PetersenParams p;
  p.n = c * k;
  p.k = k;
  p.c = c;
  return p;
}

void PetersenParams::validate() const {
  if (n < 3) throw InvalidParams("P(n,k) requires n >= 3, got n = " + std::to_string(n));
  if (k < 1 || 2 * k > n - 1)
    throw InvalidParams("P(n,k) requires 1 <= k <= (n-1)/2, got n = " + std::to_string(n) +
                        ", k = " + std::to_string(k));
  if (c) {
    if (*c < 3) throw InvalidParams("factorization requires c >= 3, got c = " + std::to_string(*c));
    if (*c * k != n)
      throw InvalidParams("factorization mismatch: c*k = " + std::to_string(*c * k) +
                          " but n = " + std::to_string(n));
  }
}

VertexId VertexId::from_dense(int n, int dense) {
  if (dense < 0 || dense >= 2 * n) throw std::out_of_range("dense vertex id out of range");
  return dense < n ? outer(dense) : inner(dense - n);
}

std::string VertexId::token() const {
  return (role == VertexRole::Outer ? "v" : "u") + std::to_string(index);
}

std::optional<VertexId> VertexId::parse(std::string_view token) {
  if (token.size() < 2) return std::nullopt;
  VertexRole role;
  if (token[0] == 'v')
    role = VertexRole::Outer;
  else if (token[0] == 'u')
    role = VertexRole::Inner;
  else
    return std::nullopt;
  int index = 0;
  auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), index);
  if (ec != std::errc{} || ptr != token.data() + token.size() || index < 0) return std::nullopt;
  return VertexId{role, index};
}

}  // namespace petdom

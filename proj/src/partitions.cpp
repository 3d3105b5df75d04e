#include "edgeposet/partitions.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "edgeposet/error.hpp"
#include "edgeposet/peck.hpp"

namespace edgeposet {

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) out *= static_cast<std::uint64_t>(i);
  return out;
}

}  // namespace

std::vector<Partition> partitions_in_box(int k, int l, int m) {
  if (k < 0 || l < 0 || m < 0) throw Error(ErrorKind::InvalidParams, "negative partition bound");
  std::vector<Partition> out;
  Partition current;
  std::function<void(int, int)> extend = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == l) return;
    for (int part = std::min(cap, remaining); part >= 1; --part) {
      current.push_back(part);
      extend(remaining - part, part);
      current.pop_back();
    }
  };
  extend(k, m);
  return out;
}

int nu(const Partition& lambda) {
  return static_cast<int>(std::set<int>(lambda.begin(), lambda.end()).size());
}

std::uint64_t p_count(int k, int l, int m, int r) {
  if (r < 0) throw Error(ErrorKind::InvalidParams, "negative r");
  std::uint64_t sum = 0;
  for (const auto& lambda : partitions_in_box(k, l, m)) sum += binomial(nu(lambda), r);
  return sum;
}

std::uint32_t young_mask(const Partition& lambda, int l, int m) {
  if (static_cast<int>(lambda.size()) > l || l * m > 32)
    throw Error(ErrorKind::InvalidParams, "partition does not fit the box");
  std::uint32_t mask = 0;
  for (int row = 0; row < static_cast<int>(lambda.size()); ++row) {
    if (lambda[row] > m || lambda[row] < 1) throw Error(ErrorKind::InvalidParams, "partition does not fit the box");
    for (int col = 0; col < lambda[row]; ++col) mask |= std::uint32_t{1} << (row * m + col);
  }
  return mask;
}

Partition young_representative(const QuotientPoset& q, int orbit, int l, int m) {
  const PermGroup& g = q.base.group;
  std::uint64_t expected = factorial(l);
  for (int i = 0; i < l; ++i) expected *= factorial(m);
  if (l < 1 || m < 1 || g.degree() != l * m || g.order() != expected ||
      q.base.poset.size() != (std::size_t{1} << (l * m)))
    throw Error(ErrorKind::WrongGroup, "expected S_m wreath S_l on B_{lm}");
  for (const auto& gen : g.generators())
    for (int block = 0; block < l; ++block)
      for (int j = 1; j < m; ++j)
        if (gen(block * m + j) / m != gen(block * m) / m)
          throw Error(ErrorKind::WrongGroup, "generator " + gen.cycle_string() + " breaks the row blocks");
  if (orbit < 0 || static_cast<std::size_t>(orbit) >= q.representative.size())
    throw Error(ErrorKind::IndexOutOfRange, "orbit " + std::to_string(orbit));

  const auto mask = static_cast<std::uint32_t>(q.representative[orbit]);
  Partition lambda;
  for (int row = 0; row < l; ++row) {
    const int filled = __builtin_popcount((mask >> (row * m)) & ((std::uint32_t{1} << m) - 1));
    if (filled > 0) lambda.push_back(filled);
  }
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  if (q.orbit_of[young_mask(lambda, l, m)] != orbit)
    throw Error(ErrorKind::Internal, "Young diagram lies outside its orbit");
  return lambda;
}

PakSequence pak_sequence_check(int l, int m, int r) {
  if (l < 0 || m < 0 || r < 0) throw Error(ErrorKind::InvalidParams, "negative parameter");
  PakSequence out;
  for (int k = r; k <= l * m; ++k) out.sequence.push_back(p_count(k, l, m, r));
  std::vector<std::size_t> as_sizes(out.sequence.begin(), out.sequence.end());
  const RankProfile profile = rank_profile(as_sizes);
  out.symmetric = profile.symmetric;
  out.unimodal = profile.unimodal;
  return out;
}

}  // namespace edgeposet

#pragma once

#include <cstdint>
#include <vector>

#include "edgeposet/action.hpp"

namespace edgeposet {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

/// Partitions of k with at most l parts, each at most m, in decreasing
/// lexicographic order: (2) comes before (1,1).
std::vector<Partition> partitions_in_box(int k, int l, int m);

/// Number of distinct part sizes.
int nu(const Partition& lambda);

/// Sum over partitions of k in the l x m box of binom(nu, r).
std::uint64_t p_count(int k, int l, int m, int r);

/// Left-justified diagram of lambda in the l x m grid: point j is row j / m,
/// column j % m, and row i holds lambda[i] boxes.
std::uint32_t young_mask(const Partition& lambda, int l, int m);

/// Sorted row counts of the orbit's least mask. Throws WrongGroup unless the
/// quotient comes from S_m ≀ S_l acting block-wise on B_{lm}, and Internal if
/// the diagram's mask lies in another orbit.
Partition young_representative(const QuotientPoset& q, int orbit, int l, int m);

struct PakSequence {
  std::vector<std::uint64_t> sequence;  // p_r, ..., p_{lm}
  bool symmetric = false;
  bool unimodal = false;
};

PakSequence pak_sequence_check(int l, int m, int r);

}  // namespace edgeposet

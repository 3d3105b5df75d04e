#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "edgeposet/edge.hpp"
#include "edgeposet/poset.hpp"

namespace edgeposet {

using BigInt = boost::multiprecision::cpp_int;

/// Dense matrix of arbitrary-precision integers.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

  static ExactMatrix identity(std::size_t n);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

  /// Fraction-free (Bareiss) elimination.
  std::size_t rank() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> cells_;
};

struct RankProfile {
  bool symmetric = true;
  bool unimodal = true;
};

RankProfile rank_profile(const GradedPoset& p);
RankProfile rank_profile(const std::vector<std::size_t>& ranks);

/// The 0/1 matrix of V(P_i) -> V(P_{i+1}), x -> sum of its upper covers.
/// Rows and columns follow levels() order.
ExactMatrix lefschetz_matrix(const GradedPoset& p, int i);

/// Rank of U^{n-2i}: V(P_i) -> V(P_{n-i}), n = max rank. Requires 0 <= i < n/2.
std::size_t lefschetz_power_rank(const GradedPoset& p, int i);

bool is_unitary_peck(const GradedPoset& p);

/// d_k: the largest union of k antichains, by min-cost flow on the split
/// network (Greene-Kleitman duality).
std::size_t max_k_antichain_union(const GradedPoset& p, std::size_t k);

/// d_k by dynamic programming over subsets; exponential, |P| <= 16.
std::size_t max_k_antichain_union_exhaustive(const GradedPoset& p, std::size_t k);

/// Sum of the k largest rank sizes.
std::size_t largest_ranks_sum(const GradedPoset& p, std::size_t k);

bool is_strongly_sperner(const GradedPoset& p);

/// Rank profile, then the unitary Peck shortcut, then the flow computation.
bool is_peck(const GradedPoset& p);

struct PeckReport {
  std::vector<std::size_t> rank_vector;
  bool symmetric = false;
  bool unimodal = false;
  std::vector<std::size_t> d;  // d[k-1] = d_k for k = 1..number of ranks
  bool strongly_sperner = false;
  bool peck = false;
  bool unitary_peck = false;
  std::vector<std::size_t> lefschetz_ranks;  // entry i for i < n/2
};

/// Every Peck quantity of p. With `oracle_threshold` > 0, posets of at most
/// that many elements have each d_k recomputed exhaustively and a mismatch
/// throws Error{Internal}.
PeckReport peck_report(const GradedPoset& p, std::size_t oracle_threshold = 0);

struct ChainDecomposition {
  std::vector<std::vector<Element>> chains;
};

/// Partition, saturation (consecutive covers) and symmetry about the middle rank.
bool is_symmetric_chain_decomposition(const GradedPoset& p, const ChainDecomposition& d);

/// Bracketing decomposition of B_n: read a mask as a word with 0 = "(" and
/// 1 = ")"; each chain fills its unmatched positions left to right.
ChainDecomposition scd_boolean(int n);

/// SCD of H(B_n) assembled from one bracketing SCD of B_{n-1} per component.
ChainDecomposition scd_h_boolean(const HDecomposition& h);

/// Image of every chain under a bijective morphism. Throws InvalidMorphism if
/// f is not bijective and ImageChainNotSaturated if an image chain breaks.
ChainDecomposition scd_transport(const ChainDecomposition& d, const PosetMorphism& f);

}  // namespace edgeposet

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace edgeposet {

using Element = int;
using Cover = std::pair<Element, Element>;

/// Largest n accepted by boolean_algebra() and the B_n constructions built on it.
inline constexpr int kBooleanCap = 16;

/// Posets up to this size answer leq() from a precomputed reachability matrix.
inline constexpr std::size_t kClosureThreshold = 4096;

/// A finite graded poset given by explicit ranks and Hasse covers.
///
/// Elements are the dense indices 0..size()-1. Every cover (x, y) satisfies
/// rank(y) = rank(x) + 1; ranks are stored, never inferred, so components may
/// start above rank 0. Instances are immutable and cheap to copy (shared
/// storage), and safe to read from several threads.
class GradedPoset {
 public:
  GradedPoset();

  /// Validates and builds. Throws Error{IndexOutOfRange | DuplicateCover | NotGraded}.
  static GradedPoset build(std::vector<int> ranks, std::vector<Cover> covers,
                           std::vector<std::string> labels = {});

  std::size_t size() const;
  bool empty() const { return size() == 0; }

  int rank_of(Element x) const;
  std::span<const int> ranks() const;

  /// Largest rank present, or -1 for the empty poset.
  int max_rank() const;

  /// Covers in lexicographic (low, high) order.
  std::span<const Cover> covers() const;
  std::span<const Element> upper_covers(Element x) const;
  std::span<const Element> lower_covers(Element x) const;
  bool is_cover(Element x, Element y) const;

  bool leq(Element x, Element y) const;

  /// Entry i is |P_i|; length max_rank()+1.
  std::vector<std::size_t> rank_vector() const;

  /// Elements of each rank in increasing index order.
  std::vector<std::vector<Element>> levels() const;

  const std::vector<std::string>& labels() const;
  std::string label(Element x) const;

  bool same_structure(const GradedPoset& other) const;

 private:
  struct Data;
  explicit GradedPoset(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> data_;
};

GradedPoset build_poset(std::vector<int> ranks, std::vector<Cover> covers,
                        std::vector<std::string> labels = {});

/// Subsets of [n] as bit-masks; element index == mask. Throws TooLarge above kBooleanCap.
GradedPoset boolean_algebra(int n);

/// The chain 0 < 1 < ... < n-1.
GradedPoset chain(int n);

/// n pairwise incomparable elements, all at rank 0.
GradedPoset antichain(int n);

inline bool leq(const GradedPoset& p, Element x, Element y) { return p.leq(x, y); }
inline std::vector<std::size_t> rank_vector(const GradedPoset& p) { return p.rank_vector(); }

/// Same elements, covers reversed, rank' = max_rank - rank.
GradedPoset dual(const GradedPoset& p);

enum class CombineMode { DisjointUnion, Product };

/// Disjoint union places q's elements after p's. The product indexes (a, b) as
/// a * |q| + b.
GradedPoset combine(const GradedPoset& p, const GradedPoset& q, CombineMode mode);

/// `copies` disjoint copies of p, copy c occupying indices [c*|p|, (c+1)*|p|).
GradedPoset disjoint_copies(const GradedPoset& p, int copies);

/// The l-fold cartesian product, tuples indexed in base |p| with coordinate 0
/// most significant.
GradedPoset power(const GradedPoset& p, int l);

/// True iff `map` is a rank-preserving bijection carrying the cover set of p
/// exactly onto the cover set of q.
bool verify_isomorphism(const GradedPoset& p, const GradedPoset& q,
                        std::span<const Element> map);

/// Backtracking search with colour refinement. Returns a witness map p -> q.
/// Exponential in the worst case; intended for operands up to ~2000 elements.
std::optional<std::vector<Element>> is_isomorphic(const GradedPoset& p, const GradedPoset& q);

/// A rank-preserving, order-preserving map between graded posets. Bijective
/// morphisms are not required to have order-preserving inverses.
struct PosetMorphism {
  GradedPoset source;
  GradedPoset target;
  std::vector<Element> image_of;

  /// Throws Error{InvalidMorphism} if ranks or covers are not preserved.
  static PosetMorphism make(GradedPoset source, GradedPoset target, std::vector<Element> image_of);

  static PosetMorphism identity(const GradedPoset& p);

  Element operator()(Element x) const { return image_of[static_cast<std::size_t>(x)]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  bool is_isomorphism() const;
};

/// (g o f)(x) = g(f(x)); requires f.target and g.source to have the same structure.
PosetMorphism compose(const PosetMorphism& g, const PosetMorphism& f);

}  // namespace edgeposet

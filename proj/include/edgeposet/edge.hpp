#pragma once

#include <unordered_map>
#include <vector>

#include "edgeposet/poset.hpp"

namespace edgeposet {

/// A Hasse edge low ⋖ high of a source poset.
struct EdgeElement {
  Element low;
  Element high;
  friend bool operator==(const EdgeElement&, const EdgeElement&) = default;
};

/// E(P) or H(P): the graded poset on the edges of P together with the table
/// translating each element back to its source edge. Elements are ordered by
/// (rank, low, high); the rank of (x, y) is rank(x).
class EdgePoset {
 public:
  EdgePoset() = default;
  EdgePoset(GradedPoset source, GradedPoset poset, std::vector<EdgeElement> edges);

  const GradedPoset& source() const { return source_; }
  const GradedPoset& poset() const { return poset_; }
  const std::vector<EdgeElement>& edges() const { return edges_; }
  const EdgeElement& edge(Element e) const { return edges_[static_cast<std::size_t>(e)]; }

  /// Index of the edge (low, high), or -1 when it is not a cover of the source.
  Element index_of(Element low, Element high) const;

 private:
  GradedPoset source_;
  GradedPoset poset_;
  std::vector<EdgeElement> edges_;
  std::unordered_map<std::uint64_t, Element> index_;
};

/// E(P): (x,y) ⋖ (x',y') iff x ⋖ x' and y ⋖ y'.
EdgePoset edge_poset(const GradedPoset& p);

/// H(P): the covers of E(P) with x' == y removed.
EdgePoset h_poset(const GradedPoset& p);

/// E(f): (x,y) -> (f(x), f(y)). Throws ImageNotCover if f does not send covers to covers.
PosetMorphism edge_map(const PosetMorphism& f, const EdgePoset& source_edges,
                       const EdgePoset& target_edges);
PosetMorphism edge_map(const PosetMorphism& f);

/// Builds the componentwise order (x,y) <= (a,b) iff x <= a and y <= b on the
/// edges of P, reduces it to its Hasse diagram and reports whether every Hasse
/// edge raises rank(x) by exactly one.
bool naive_edge_relation_is_graded(const GradedPoset& p);

/// The identity on edge tables, as a bijective morphism H(P) -> E(P).
PosetMorphism h_to_e_bijection(const EdgePoset& h, const EdgePoset& e);
PosetMorphism h_to_e_bijection(const GradedPoset& p);

/// Explicit isomorphism H(B_n) -> n disjoint copies of B_{n-1}.
struct HDecomposition {
  int n = 0;
  EdgePoset h;                 // H(B_n)
  GradedPoset copies;          // n disjoint copies of B_{n-1}
  std::vector<Element> witness;  // H(B_n) element -> element of `copies`
  bool verified = false;
};

/// (x, x ∪ {i}) goes to copy i at the subset of [n-1] obtained from x by
/// deleting coordinate i and closing the gap. Throws TooLarge above kBooleanCap.
HDecomposition h_bn_decomposition(int n);

/// Reverses every edge pair: E(dual P) -> dual(E(P)), (y, x) -> (x, y).
std::vector<Element> edge_dual_witness(const EdgePoset& edges_of_dual, const EdgePoset& edges);

}  // namespace edgeposet

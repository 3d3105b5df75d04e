#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "edgeposet/edge.hpp"
#include "edgeposet/perm.hpp"
#include "edgeposet/poset.hpp"

namespace edgeposet {

/// A permutation group acting on a graded poset by rank-preserving
/// automorphisms. The action is stored as one element permutation per group
/// generator; `generators[i]` is the group element whose action is `maps[i]`.
struct PosetAction {
  PermGroup group;
  GradedPoset poset;
  std::vector<Permutation> generators;
  std::vector<std::vector<Element>> maps;

  /// Checks that every map is an automorphism of `poset` and that the maps
  /// respect the group's multiplication on 100 sampled words. Throws InvalidAction.
  static PosetAction make(PermGroup group, GradedPoset poset, std::vector<Permutation> generators,
                          std::vector<std::vector<Element>> maps);
};

/// Every distinct element permutation of the poset induced by the group.
/// Throws GroupTooLarge if |image| * |P| exceeds `cell_cap`.
std::vector<std::vector<Element>> action_image(const PosetAction& action,
                                               std::size_t cell_cap = std::size_t{1} << 27);

/// Orbit index per element; orbits are numbered by their least element.
std::vector<int> orbit_ids(const PosetAction& action);

/// g·x = {g(i) : i ∈ x} on B_n, n = G.degree(). Throws TooLarge above kBooleanCap.
PosetAction induced_bn_action(const PermGroup& group);

enum class EdgeKind { E, H };

struct EdgeAction {
  EdgePoset edges;
  PosetAction action;
};

/// The same group acting on E(P) or H(P) by g·(x, y) = (gx, gy).
EdgeAction action_on_edges(const PosetAction& action, EdgeKind which);

struct QuotientPoset {
  PosetAction base;
  std::vector<int> orbit_of;
  std::vector<Element> representative;  // least element of each orbit
  std::vector<std::size_t> orbit_size;
  GradedPoset poset;
};

/// P/G: orbits ordered by representative, O ⋖ O' iff some x ∈ O, x' ∈ O' have x ⋖ x'.
QuotientPoset quotient(const PosetAction& action);

/// The comparison map q: E(P)/G -> E(P/G), G(x, y) -> (Gx, Gy), with the
/// posets it relates.
struct QMap {
  QuotientPoset base_quotient;  // P/G
  EdgePoset edges_of_quotient;  // E(P/G)
  EdgeAction edge_action;       // G on E(P)
  QuotientPoset edge_quotient;  // E(P)/G
  PosetMorphism q;
  bool bijective = false;
  bool isomorphism = false;
};

QMap q_map(const PosetAction& action);

enum class CctMethod { Direct, Dual, QBijective, RankCounts };
inline constexpr std::array<CctMethod, 4> kAllCctMethods = {
    CctMethod::Direct, CctMethod::Dual, CctMethod::QBijective, CctMethod::RankCounts};
const char* to_string(CctMethod method);

/// (x, y, z): for Direct, x and y are lower covers of z in one orbit with no
/// stabiliser element of z carrying x to y. For Dual, x and y are upper covers of z.
struct CctTriple {
  Element x, y, z;
  friend bool operator==(const CctTriple&, const CctTriple&) = default;
};

struct CctResult {
  bool cct = true;
  CctMethod method = CctMethod::Direct;
  std::optional<CctTriple> triple;
  /// QBijective: two distinct orbits of E(P)/G with the same image under q.
  std::optional<std::pair<Element, Element>> colliding_orbits;
  /// RankCounts: first rank where |(E(P)/G)_i| != |E(P/G)_i|.
  std::optional<int> rank_mismatch;
};

CctResult is_cct(const PosetAction& action, CctMethod method = CctMethod::Direct);
/// QBijective / RankCounts from an already computed q map.
CctResult is_cct(const QMap& q, CctMethod method);

/// True iff (x, y, z) violates common cover transitivity: x, y ⋖ z, y ∈ Gx and
/// no g ∈ Stab(z) has gx = y.
bool is_cct_violation(const PosetAction& action, const CctTriple& triple);

/// G × H acting coordinatewise on P × Q (element (a, b) has index a*|Q| + b).
PosetAction product_action(const PosetAction& a, const PosetAction& b,
                           std::size_t cap = kDefaultGroupCap);

/// G ≀ S_l on P^l: G acts on each coordinate, S_l permutes coordinates.
PosetAction wreath_action(const PosetAction& a, int l, std::size_t cap = kDefaultGroupCap);

/// Complement-induced self-duality witnesses for E(B_n/G) and E(B_n)/G.
struct SelfDuality {
  std::vector<Element> edges_of_quotient;  // E(B_n/G) -> dual(E(B_n/G))
  bool edges_of_quotient_ok = false;
  std::vector<Element> quotient_of_edges;  // E(B_n)/G -> dual(E(B_n)/G)
  bool quotient_of_edges_ok = false;
};

/// Requires an action on a boolean algebra; throws InvalidAction otherwise.
SelfDuality complement_self_duality(const PosetAction& action);

}  // namespace edgeposet

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgeposet/poset.hpp"

namespace edgeposet {

/// A bijection of {0, ..., n-1} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws Error{InvalidParams} unless `images` is a bijection of its index range.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// 0-indexed cycles; points not mentioned are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// Image of a subset of points encoded as a bit-mask.
  std::uint32_t apply(std::uint32_t mask) const;

  /// 1-indexed cycle notation, e.g. "(1 2 3)(4 5)"; the identity prints as "()".
  std::string cycle_string() const;

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Parses 1-indexed cycle notation such as "(1 2 3)(4 5)" or "()".
/// Throws Error{InvalidInput} on malformed text or points above `degree`.
Permutation parse_cycles(std::string_view text, int degree);

inline constexpr std::size_t kDefaultGroupCap = 2'000'000;

/// A permutation group given by generators, with its elements enumerated once
/// at construction (sorted, identity first). Immutable; copies share storage.
class PermGroup {
 public:
  PermGroup();

  /// Closure of `generators` under composition. Throws GroupTooLarge past `cap`.
  static PermGroup generate(int degree, std::vector<Permutation> generators,
                            std::size_t cap = kDefaultGroupCap);

  int degree() const;
  const std::vector<Permutation>& generators() const;
  const std::vector<Permutation>& elements() const;
  std::size_t order() const { return elements().size(); }
  bool contains(const Permutation& p) const;

  /// Generators in cycle notation joined by ", "; "()" for the trivial group.
  std::string generator_string() const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

inline PermGroup generate(int degree, std::vector<Permutation> generators,
                          std::size_t cap = kDefaultGroupCap) {
  return PermGroup::generate(degree, std::move(generators), cap);
}

PermGroup trivial_group(int degree);
PermGroup symmetric_group(int n, std::size_t cap = kDefaultGroupCap);
/// Rotations of the n-gon.
PermGroup cyclic_group(int n);
/// Rotations and reflections of the n-gon; the faithful image on n points.
PermGroup dihedral_group(int n);
/// S_2 ≀ S_n on 2n points, pairing (2i, 2i+1).
PermGroup hyperoctahedral_group(int n, std::size_t cap = kDefaultGroupCap);
/// Group generated by commuting involutions. Throws NotInvolutions / NotCommuting.
PermGroup elementary_abelian_2(int degree, std::vector<Permutation> involutions);

/// Looks up "symmetric:N", "cyclic:N", "dihedral:N", "hyperoctahedral:N",
/// "trivial:N" (or "trivial" with `default_degree`). Throws InvalidParams.
PermGroup named_group(std::string_view name, int default_degree = 0,
                      std::size_t cap = kDefaultGroupCap);

/// G ≀ H on m*l points: block b is {b*m, ..., b*m + m - 1}. The generators are
/// l block copies of G's generators followed by H's generators permuting blocks.
PermGroup wreath(const PermGroup& g, const PermGroup& h, std::size_t cap = kDefaultGroupCap);

/// G on the first m points, H on the last l.
PermGroup direct_product(const PermGroup& g, const PermGroup& h, std::size_t cap = kDefaultGroupCap);

/// Left-regular representation x -> a*x of the group with multiplication
/// table `table[a][b] = a*b`. Throws NotAGroup.
PermGroup left_regular(const std::vector<std::vector<int>>& table);

/// All g with g(S) = S, where S is a point set.
std::vector<Permutation> stabilizer_of_set(const PermGroup& g, std::span<const int> points);
std::vector<Permutation> stabilizer_of_set(const PermGroup& g, std::uint32_t mask);

/// A graded poset with a unique maximal element in which every other element
/// has exactly one upper cover. Leaves are the elements without lower covers.
class RootedTree {
 public:
  /// Throws NotARootedTree.
  explicit RootedTree(GradedPoset poset);

  const GradedPoset& poset() const { return poset_; }
  Element root() const { return root_; }
  /// Leaves in increasing element order; leaf k is point k of the leaf action.
  const std::vector<Element>& leaves() const { return leaves_; }
  std::vector<Element> children(Element x) const;

 private:
  GradedPoset poset_;
  Element root_ = -1;
  std::vector<Element> leaves_;
};

/// Builds a tree from nested child counts: leaves receive indices 0..L-1 in
/// depth-first order, internal nodes follow in post-order.
struct TreeShape {
  std::vector<TreeShape> children;
};
RootedTree rooted_tree(const TreeShape& shape);

struct TreeAutomorphisms {
  PermGroup group;               // acting on leaf points
  std::size_t formula_order = 0;  // product of |G_k|^{i_k} * i_k! over all levels
};

/// Aut(T) restricted to the leaves; leaves may sit at different ranks.
TreeAutomorphisms tree_automorphisms(const RootedTree& tree, std::size_t cap = kDefaultGroupCap);

/// One representative per conjugacy class of subgroups of S_n (n <= 5), sorted
/// by (order, generator_string()).
std::vector<PermGroup> subgroup_sweep(int n);

}  // namespace edgeposet

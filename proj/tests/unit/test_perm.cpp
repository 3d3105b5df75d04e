#include <set>

#include "doctest.h"
#include "edgeposet/error.hpp"
#include "edgeposet/figures.hpp"
#include "edgeposet/perm.hpp"
#include "oracles.hpp"

using namespace edgeposet;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no edgeposet::Error thrown");
  return ErrorKind::Internal;
}

std::set<std::vector<int>> element_set(const PermGroup& g) {
  const auto v = oracle::images_of(g);
  return {v.begin(), v.end()};
}

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

}  // namespace

TEST_SUITE("perm") {

TEST_CASE("permutation basics") {
  const auto a = Permutation::from_cycles(4, {{0, 1, 2}});
  const auto b = Permutation::from_cycles(4, {{2, 3}});
  CHECK((a * b)(3) == a(b(3)));
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.cycle_string() == "(1 2 3)");
  CHECK(Permutation::identity(3).cycle_string() == "()");
  CHECK(parse_cycles("(1 2 3)", 4) == a);
  CHECK(parse_cycles("()", 4).is_identity());
  CHECK(a.apply(0b0011) == 0b0110);
  CHECK(kind_of([] { Permutation({0, 0}); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { parse_cycles("(1 5)", 4); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_cycles("(1 2", 4); }) == ErrorKind::InvalidInput);
}

TEST_CASE("cycle strings round trip") {
  const auto s5 = symmetric_group(5);
  for (const auto& g : s5.elements()) CHECK(parse_cycles(g.cycle_string(), 5) == g);
}

TEST_CASE("family orders") {
  const std::size_t factorial[] = {1, 1, 2, 6, 24, 120, 720};
  for (int n = 1; n <= 6; ++n) {
    CHECK(symmetric_group(n).order() == factorial[n]);
    CHECK(cyclic_group(n).order() == static_cast<std::size_t>(n));
    CHECK(hyperoctahedral_group(n).order() == factorial[n] << n);
    CHECK(trivial_group(n).order() == 1);
  }
  CHECK(dihedral_group(1).order() == 1);
  CHECK(dihedral_group(2).order() == 2);
  for (int n = 3; n <= 12; ++n) CHECK(dihedral_group(n).order() == 2 * static_cast<std::size_t>(n));
}

TEST_CASE("generated groups match a naive closure") {
  const std::vector<PermGroup> groups = {dihedral_group(6), hyperoctahedral_group(3), cyclic_group(7),
                                         symmetric_group(4)};
  for (const auto& g : groups) {
    std::vector<std::vector<int>> gens;
    for (const auto& s : g.generators()) gens.emplace_back(s.images().begin(), s.images().end());
    CHECK(element_set(g) == oracle::group_closure(g.degree(), gens));
    CHECK(g.elements().front().is_identity());
  }
}

TEST_CASE("named groups") {
  CHECK(named_group("dihedral:5").order() == 10);
  CHECK(named_group("trivial", 4).degree() == 4);
  CHECK(named_group("hyperoctahedral:2").degree() == 4);
  CHECK(kind_of([] { named_group("nonsense:3"); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { named_group("symmetric:x"); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { symmetric_group(9, 1000); }) == ErrorKind::GroupTooLarge);
}

TEST_CASE("Klein four-group from two double transpositions") {
  const auto g = elementary_abelian_2(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                          Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  CHECK(g.order() == 4);
  int double_transpositions = 0;
  for (const auto& e : g.elements()) {
    if (e.is_identity()) continue;
    bool fixed_point_free = true;
    for (int i = 0; i < 4; ++i) fixed_point_free = fixed_point_free && e(i) != i && e(e(i)) == i;
    double_transpositions += fixed_point_free;
  }
  CHECK(double_transpositions == 3);
  CHECK(kind_of([] { elementary_abelian_2(3, {Permutation::from_cycles(3, {{0, 1, 2}})}); }) ==
        ErrorKind::NotInvolutions);
  CHECK(kind_of([] {
          elementary_abelian_2(3, {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{1, 2}})});
        }) == ErrorKind::NotCommuting);
}

TEST_CASE("wreath of S_2 by S_n is the hyperoctahedral group") {
  for (int n = 1; n <= 4; ++n)
    CHECK(element_set(wreath(symmetric_group(2), symmetric_group(n))) == element_set(hyperoctahedral_group(n)));
}

TEST_CASE("direct product orders") {
  CHECK(direct_product(symmetric_group(4), symmetric_group(4)).order() == 576);
  const auto p = direct_product(cyclic_group(3), cyclic_group(2));
  CHECK(p.degree() == 5);
  CHECK(p.order() == 6);
}

TEST_CASE("left-regular representations") {
  for (int n = 1; n <= 8; ++n) {
    const auto g = left_regular(cyclic_table(n));
    CHECK(g.order() == static_cast<std::size_t>(n));
    for (const auto& e : g.elements())
      if (!e.is_identity())
        for (int i = 0; i < n; ++i) CHECK(e(i) != i);
  }
  CHECK(kind_of([] { left_regular({{0, 1}, {0, 1}}); }) == ErrorKind::NotAGroup);
}

TEST_CASE("set stabilisers") {
  const auto d = dihedral_group(5);
  CHECK(stabilizer_of_set(d, std::uint32_t{1}).size() == 2);
  const std::vector<int> pts = {0, 1};
  CHECK(stabilizer_of_set(d, pts).size() == 2);
  CHECK(stabilizer_of_set(symmetric_group(4), std::uint32_t{0b0011}).size() == 4);
}

TEST_CASE("tree automorphisms") {
  const auto t4 = tree_automorphisms(figures::fig4_tree());
  CHECK(t4.group.order() == 128);
  CHECK(t4.formula_order == 128);
  CHECK(element_set(t4.group) ==
        element_set(wreath(wreath(symmetric_group(2), symmetric_group(2)), symmetric_group(2))));
  const auto t5 = tree_automorphisms(figures::fig5_tree());
  CHECK(t5.group.order() == 576);
  CHECK(t5.formula_order == 576);
  CHECK(figures::fig5_tree().leaves().size() == 10);
}

TEST_CASE("rooted trees from shapes") {
  const TreeShape leaf{};
  const TreeShape shape{{TreeShape{{leaf, leaf}}, TreeShape{{leaf, leaf}}, leaf}};
  const auto t = rooted_tree(shape);
  CHECK(t.leaves().size() == 5);
  CHECK(tree_automorphisms(t).group.order() == 8);
  CHECK(kind_of([] { RootedTree(antichain(2)); }) == ErrorKind::NotARootedTree);
}

TEST_CASE("subgroup classes of small symmetric groups") {
  const std::size_t classes[] = {0, 1, 2, 4, 11, 19};
  for (int n = 1; n <= 5; ++n) {
    const auto groups = subgroup_sweep(n);
    CHECK(groups.size() == classes[n]);
    for (std::size_t i = 1; i < groups.size(); ++i)
      CHECK(std::make_pair(groups[i - 1].order(), groups[i - 1].generator_string()) <=
            std::make_pair(groups[i].order(), groups[i].generator_string()));
  }
}

}  // TEST_SUITE

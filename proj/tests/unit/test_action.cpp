#include <algorithm>

#include "doctest.h"
#include "edgeposet/action.hpp"
#include "edgeposet/error.hpp"
#include "oracles.hpp"

using namespace edgeposet;

namespace {

std::uint32_t mask_of(std::initializer_list<int> points) {
  std::uint32_t m = 0;
  for (int p : points) m |= std::uint32_t{1} << p;
  return m;
}

std::vector<PermGroup> small_groups() {
  std::vector<PermGroup> out;
  for (int n = 1; n <= 5; ++n)
    for (const auto& g : subgroup_sweep(n)) out.push_back(g);
  out.push_back(dihedral_group(6));
  out.push_back(cyclic_group(6));
  out.push_back(hyperoctahedral_group(3));
  return out;
}

}  // namespace

TEST_SUITE("action") {

TEST_CASE("orbit sizes of B_n, E(B_n) and E(B_n/G) agree with brute force") {
  for (const auto& g : small_groups()) {
    const int n = g.degree();
    const auto elements = oracle::images_of(g);
    const auto action = induced_bn_action(g);
    const auto q = q_map(action);
    CAPTURE(g.generator_string());
    CHECK(q.base_quotient.poset.rank_vector() == oracle::subset_orbits_by_size(n, elements));
    if (n == 0) continue;
    CHECK(q.edge_quotient.poset.rank_vector() == oracle::edge_orbits_by_size(n, elements));
    CHECK(q.edges_of_quotient.poset().rank_vector() == oracle::quotient_edges_by_size(n, elements));
  }
}

TEST_CASE("named quotient rank vectors") {
  CHECK(quotient(induced_bn_action(dihedral_group(5))).poset.rank_vector() ==
        std::vector<std::size_t>{1, 1, 2, 2, 1, 1});
  CHECK(quotient(induced_bn_action(cyclic_group(4))).poset.rank_vector() ==
        std::vector<std::size_t>{1, 1, 2, 1, 1});
  const auto e_s3 = action_on_edges(induced_bn_action(symmetric_group(3)), EdgeKind::E);
  CHECK(quotient(e_s3.action).poset.rank_vector() == std::vector<std::size_t>{1, 1, 1});
  const auto e_c3 = action_on_edges(induced_bn_action(cyclic_group(3)), EdgeKind::E);
  CHECK(quotient(e_c3.action).poset.rank_vector() == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("orbit ids are numbered by least element") {
  const auto action = induced_bn_action(cyclic_group(4));
  const auto ids = orbit_ids(action);
  const auto q = quotient(action);
  for (std::size_t x = 0; x < ids.size(); ++x) {
    CHECK(q.orbit_of[x] == ids[x]);
    CHECK(q.representative[static_cast<std::size_t>(ids[x])] <= static_cast<Element>(x));
  }
  CHECK(std::is_sorted(q.representative.begin(), q.representative.end()));
  std::size_t total = 0;
  for (auto s : q.orbit_size) total += s;
  CHECK(total == 16);
}

TEST_CASE("action_image enumerates the faithful image") {
  CHECK(action_image(induced_bn_action(symmetric_group(4))).size() == 24);
  CHECK(action_image(induced_bn_action(trivial_group(3))).size() == 1);
}

TEST_CASE("invalid actions are rejected") {
  const auto g = cyclic_group(2);
  const auto c2 = chain(2);
  bool threw = false;
  try {
    PosetAction::make(g, c2, g.generators(), {{1, 0}});
  } catch (const Error& e) {
    threw = e.kind() == ErrorKind::InvalidAction;
  }
  CHECK(threw);
  threw = false;
  try {
    // An automorphism of order 2 assigned to a generator of order 3.
    const auto c3 = cyclic_group(3);
    PosetAction::make(c3, antichain(3), c3.generators(), {{1, 0, 2}});
  } catch (const Error& e) {
    threw = e.kind() == ErrorKind::InvalidAction;
  }
  CHECK(threw);
}

TEST_CASE("all four CCT methods agree on small groups") {
  for (const auto& g : small_groups()) {
    const auto action = induced_bn_action(g);
    const auto q = q_map(action);
    const bool direct = is_cct(action, CctMethod::Direct).cct;
    CAPTURE(g.generator_string());
    CHECK(is_cct(action, CctMethod::Dual).cct == direct);
    CHECK(is_cct(q, CctMethod::QBijective).cct == direct);
    CHECK(is_cct(q, CctMethod::RankCounts).cct == direct);
    CHECK(q.bijective == direct);
  }
}

TEST_CASE("symmetric groups are CCT and q is an isomorphism") {
  for (int n = 1; n <= 5; ++n) {
    const auto q = q_map(induced_bn_action(symmetric_group(n)));
    CHECK(q.bijective);
    CHECK(q.isomorphism);
  }
}

TEST_CASE("non-CCT witnesses are genuine violations") {
  for (int n : {9, 12}) {
    const auto action = induced_bn_action(dihedral_group(n));
    for (auto method : {CctMethod::Direct, CctMethod::Dual}) {
      const auto r = is_cct(action, method);
      REQUIRE_FALSE(r.cct);
      REQUIRE(r.triple.has_value());
      if (method == CctMethod::Direct) CHECK(is_cct_violation(action, *r.triple));
      CHECK(action.poset.is_cover(method == CctMethod::Direct ? r.triple->x : r.triple->z,
                                  method == CctMethod::Direct ? r.triple->z : r.triple->x));
    }
  }
  const auto action = induced_bn_action(dihedral_group(9));
  const CctTriple expected{static_cast<Element>(mask_of({0, 1, 3, 6})), static_cast<Element>(mask_of({0, 3, 4, 6})),
                           static_cast<Element>(mask_of({0, 1, 3, 4, 6}))};
  CHECK(is_cct(action).triple == expected);
  CHECK(is_cct_violation(action, expected));
  CHECK(is_cct_violation(induced_bn_action(cyclic_group(9)), expected));
  CHECK_FALSE(is_cct_violation(induced_bn_action(trivial_group(9)), expected));
}

TEST_CASE("D_20 on B_10: q is bijective but not an isomorphism") {
  const auto action = induced_bn_action(dihedral_group(10));
  const auto q = q_map(action);
  CHECK(q.bijective);
  CHECK_FALSE(q.isomorphism);
  const auto orbit = [&](std::initializer_list<int> pts) {
    return q.base_quotient.orbit_of[mask_of(pts)];
  };
  const Element upper_low = q.edges_of_quotient.index_of(orbit({1, 3}), orbit({0, 1, 3}));
  const Element upper_high = q.edges_of_quotient.index_of(orbit({1, 3, 6}), orbit({1, 3, 5, 6}));
  REQUIRE(upper_low >= 0);
  REQUIRE(upper_high >= 0);
  CHECK(q.edges_of_quotient.poset().is_cover(upper_low, upper_high));
  const auto& image = q.q.image_of;
  const auto lo = std::find(image.begin(), image.end(), upper_low) - image.begin();
  const auto hi = std::find(image.begin(), image.end(), upper_high) - image.begin();
  CHECK_FALSE(q.edge_quotient.poset.is_cover(static_cast<Element>(lo), static_cast<Element>(hi)));
}

TEST_CASE("H quotient of the trivial action is H itself") {
  const auto ea = action_on_edges(induced_bn_action(trivial_group(4)), EdgeKind::H);
  CHECK(quotient(ea.action).poset.same_structure(ea.edges.poset()));
}

TEST_CASE("product and wreath actions") {
  const auto c3 = PosetAction::make(cyclic_group(3), antichain(3), cyclic_group(3).generators(),
                                    {{1, 2, 0}});
  const auto s2 = induced_bn_action(symmetric_group(2));
  const auto prod = product_action(c3, s2);
  CHECK(prod.group.order() == 6);
  CHECK(prod.poset.size() == 12);
  CHECK(prod.poset.rank_vector() == std::vector<std::size_t>{3, 6, 3});
  CHECK(quotient(prod).poset.rank_vector() == std::vector<std::size_t>{1, 1, 1});
  const auto w = wreath_action(induced_bn_action(trivial_group(1)), 3);
  CHECK(w.group.order() == 6);
  CHECK(w.poset.same_structure(power(boolean_algebra(1), 3)));
  CHECK(quotient(w).poset.rank_vector() == std::vector<std::size_t>{1, 1, 1, 1});
  const auto w2 = wreath_action(induced_bn_action(symmetric_group(2)), 2);
  CHECK(w2.group.order() == 8);
  CHECK(quotient(w2).poset.rank_vector() == std::vector<std::size_t>{1, 1, 2, 1, 1});
}

TEST_CASE("complement self-duality on the small groups") {
  for (const auto& g : small_groups()) {
    const auto sd = complement_self_duality(induced_bn_action(g));
    CHECK(sd.edges_of_quotient_ok);
    CHECK(sd.quotient_of_edges_ok);
  }
  const auto c3 = PosetAction::make(cyclic_group(3), antichain(3), cyclic_group(3).generators(), {{1, 2, 0}});
  bool threw = false;
  try {
    complement_self_duality(c3);
  } catch (const Error& e) {
    threw = e.kind() == ErrorKind::InvalidAction;
  }
  CHECK(threw);
}

}  // TEST_SUITE

#include "doctest.h"
#include "edgeposet/error.hpp"
#include "edgeposet/partitions.hpp"
#include "oracles.hpp"

using namespace edgeposet;

namespace {

PosetAction block_action(int l, int m) {
  return induced_bn_action(wreath(symmetric_group(m), symmetric_group(l)));
}

}  // namespace

TEST_SUITE("partitions") {

TEST_CASE("partitions in a box") {
  CHECK(partitions_in_box(2, 2, 2) == std::vector<Partition>{{2}, {1, 1}});
  CHECK(partitions_in_box(0, 3, 3) == std::vector<Partition>{{}});
  CHECK(partitions_in_box(4, 2, 2) == std::vector<Partition>{{2, 2}});
  CHECK(partitions_in_box(5, 2, 2).empty());
  CHECK(partitions_in_box(3, 3, 3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(nu({3, 3, 1}) == 2);
  CHECK(nu({}) == 0);
}

TEST_CASE("p_count agrees with the recursive oracle") {
  for (int l = 1; l <= 5; ++l)
    for (int m = 1; m <= 5; ++m)
      for (int r = 0; r <= 3; ++r)
        for (int k = 0; k <= l * m; ++k) REQUIRE(p_count(k, l, m, r) == oracle::p_count(k, l, m, r));
}

TEST_CASE("young masks fill rows left to right") {
  CHECK(young_mask({2, 1}, 2, 3) == 0b001011);
  CHECK(young_mask({}, 2, 2) == 0);
}

TEST_CASE("block quotient orbits are Young diagrams") {
  for (auto [l, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    const auto q = quotient(block_action(l, m));
    std::size_t total = 0;
    for (std::size_t o = 0; o < q.orbit_size.size(); ++o) {
      const auto lambda = young_representative(q, static_cast<int>(o), l, m);
      const auto mask = young_mask(lambda, l, m);
      CHECK(q.orbit_of[mask] == static_cast<int>(o));
      CHECK(q.poset.lower_covers(static_cast<Element>(o)).size() == static_cast<std::size_t>(nu(lambda)));
      ++total;
    }
    std::size_t boxes = 0;
    for (int k = 0; k <= l * m; ++k) boxes += partitions_in_box(k, l, m).size();
    CHECK(total == boxes);
  }
}

TEST_CASE("young_representative checks the group") {
  const auto q = quotient(induced_bn_action(symmetric_group(4)));
  bool threw = false;
  try {
    young_representative(q, 0, 2, 2);
  } catch (const Error& e) {
    threw = e.kind() == ErrorKind::WrongGroup;
  }
  CHECK(threw);
}

TEST_CASE("pak sequences") {
  const auto s = pak_sequence_check(2, 2, 1);
  CHECK(s.sequence == std::vector<std::uint64_t>{1, 2, 2, 1});
  CHECK(s.symmetric);
  CHECK(s.unimodal);
  for (int r = 1; r <= 3; ++r)
    for (int l = 1; l <= 5; ++l)
      for (int m = 1; m <= 5; ++m) {
        const auto p = pak_sequence_check(l, m, r);
        CHECK(p.sequence.size() == static_cast<std::size_t>(std::max(0, l * m - r + 1)));
      }
}

}  // TEST_SUITE

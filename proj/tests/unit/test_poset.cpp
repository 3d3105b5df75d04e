#include <random>
#include <set>

#include "doctest.h"
#include "edgeposet/error.hpp"
#include "edgeposet/figures.hpp"
#include "edgeposet/poset.hpp"
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

}  // namespace

TEST_SUITE("poset") {

TEST_CASE("boolean algebra rank vectors and cover count") {
  const auto b3 = boolean_algebra(3);
  CHECK(b3.rank_vector() == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(b3.covers().size() == 12);
  CHECK(b3.leq(0b001, 0b011));
  CHECK_FALSE(b3.leq(0b001, 0b110));
  const auto b0 = boolean_algebra(0);
  CHECK(b0.size() == 1);
  CHECK(b0.rank_vector() == std::vector<std::size_t>{1});
  for (int n = 0; n <= 6; ++n) CHECK(boolean_algebra(n).covers().size() == static_cast<std::size_t>(n) << (n > 0 ? n - 1 : 0));
  CHECK(kind_of([] { boolean_algebra(kBooleanCap + 1); }) == ErrorKind::TooLarge);
}

TEST_CASE("chain, antichain and empty posets") {
  CHECK(chain(4).rank_vector() == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(antichain(3).rank_vector() == std::vector<std::size_t>{3});
  CHECK(antichain(3).covers().empty());
  const GradedPoset empty;
  CHECK(empty.empty());
  CHECK(empty.max_rank() == -1);
  CHECK(empty.rank_vector().empty());
}

TEST_CASE("build rejects malformed input") {
  CHECK(kind_of([] { GradedPoset::build({0, 1}, {{0, 2}}); }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] { GradedPoset::build({0, 1}, {{0, 1}, {0, 1}}); }) == ErrorKind::DuplicateCover);
  CHECK(kind_of([] { GradedPoset::build({0, 2}, {{0, 1}}); }) == ErrorKind::NotGraded);
  CHECK(kind_of([] { GradedPoset::build({0, -1}, {}); }) != ErrorKind::Internal);
}

TEST_CASE("components may start above rank zero") {
  const auto p = GradedPoset::build({1, 2}, {{0, 1}});
  CHECK(p.rank_vector() == std::vector<std::size_t>{0, 1, 1});
}

TEST_CASE("product of two 3-chains") {
  const auto p = combine(chain(3), chain(3), CombineMode::Product);
  CHECK(p.rank_vector() == std::vector<std::size_t>{1, 2, 3, 2, 1});
  CHECK(p.covers().size() == 12);
  CHECK(power(chain(3), 2).same_structure(p));
}

TEST_CASE("power of the 2-chain is the boolean algebra") {
  for (int n = 1; n <= 5; ++n) CHECK(is_isomorphic(power(chain(2), n), boolean_algebra(n)).has_value());
}

TEST_CASE("disjoint union and copies") {
  const auto u = combine(chain(2), antichain(2), CombineMode::DisjointUnion);
  CHECK(u.size() == 4);
  CHECK(u.rank_vector() == std::vector<std::size_t>{3, 1});
  const auto c = disjoint_copies(boolean_algebra(2), 3);
  CHECK(c.size() == 12);
  CHECK(c.rank_vector() == std::vector<std::size_t>{3, 6, 3});
  CHECK(c.is_cover(4, 5));
}

TEST_CASE("dual is an involution and B_n is self-dual") {
  const auto b4 = boolean_algebra(4);
  CHECK(dual(dual(b4)).same_structure(b4));
  std::vector<Element> complement(b4.size());
  for (std::size_t x = 0; x < b4.size(); ++x) complement[x] = static_cast<Element>(x ^ 0xF);
  CHECK(verify_isomorphism(b4, dual(b4), complement));
}

TEST_CASE("leq matches the transitive closure of covers on random posets") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = oracle::random_poset(rng, 14, 4, 0.4);
    const auto le = oracle::closure(p);
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y)
        REQUIRE(p.leq(static_cast<Element>(x), static_cast<Element>(y)) == static_cast<bool>(le[x][y]));
  }
}

TEST_CASE("is_isomorphic agrees with brute force on tiny posets") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const auto p = oracle::random_poset(rng, 7, 3, 0.5);
    const auto q = oracle::random_poset(rng, 7, 3, 0.5);
    const auto found = is_isomorphic(p, q);
    REQUIRE(found.has_value() == oracle::isomorphic(p, q));
    if (found) CHECK(verify_isomorphism(p, q, *found));
    CHECK(is_isomorphic(p, p).has_value());
  }
}

TEST_CASE("morphisms") {
  const auto f = figures::diamond_onto_chain();
  CHECK(f.is_surjective());
  CHECK_FALSE(f.is_injective());
  CHECK_FALSE(f.is_isomorphism());
  const auto id = PosetMorphism::identity(figures::diamond());
  CHECK(id.is_isomorphism());
  const auto g = compose(f, id);
  CHECK(g.image_of == f.image_of);
  CHECK(kind_of([] { PosetMorphism::make(chain(2), chain(2), {1, 0}); }) == ErrorKind::InvalidMorphism);
}

TEST_CASE("bijective morphism need not be an isomorphism") {
  const auto p = GradedPoset::build({0, 0, 1, 1}, {{0, 2}});
  const auto q = GradedPoset::build({0, 0, 1, 1}, {{0, 2}, {1, 3}});
  const auto f = PosetMorphism::make(p, q, {0, 1, 2, 3});
  CHECK(f.is_bijective());
  CHECK_FALSE(f.is_isomorphism());
}

}  // TEST_SUITE

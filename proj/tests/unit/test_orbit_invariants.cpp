#include <doctest.h>

#include "nilorb/error.hpp"
#include "nilorb/orbit_invariants.hpp"

using namespace nilorb;

namespace {

FiniteGroup z(Family f, int rank, std::vector<int> j) { return center_fiber(LieType(f, rank), SubsetJ(std::move(j), rank)); }

Partition p_of(Family f, int rank, std::vector<int> j) {
  return orbit_partition(LieType(f, rank), SubsetJ(std::move(j), rank)).partition;
}

}  // namespace

TEST_SUITE("orbit-invariants") {

TEST_CASE("finite group orders match kinds") {
  CHECK(FiniteGroup::cyclic(5).order() == 5);
  CHECK(FiniteGroup::cyclic(1) == FiniteGroup::trivial());
  CHECK(FiniteGroup::elementary_abelian_2(0) == FiniteGroup::trivial());
  CHECK(FiniteGroup::elementary_abelian_2(3).order() == 8);
  CHECK(FiniteGroup::central_extension_2(0).order() == 2);
  CHECK(FiniteGroup::central_extension_2(2).order() == 8);
  CHECK(FiniteGroup::klein_four().order() == 4);
  CHECK(FiniteGroup::symmetric_2().order() == 2);
  CHECK(FiniteGroup::trivial().order() == 1);
  CHECK(FiniteGroup::cyclic(3).kind_name() == "cyclic(3)");
  CHECK(FiniteGroup::cyclic(3).label() == "Z/3Z");
  CHECK_THROWS_AS(FiniteGroup::cyclic(0), InputError);
  CHECK_THROWS_AS(FiniteGroup::elementary_abelian_2(-1), InputError);
}

TEST_CASE("center fiber examples") {
  CHECK(z(Family::A, 5, {2, 4}) == FiniteGroup::cyclic(2));
  CHECK(center_fiber(LieType::exceptional(Family::E6), SubsetJ({2, 4}, 6)) == FiniteGroup::cyclic(3));
  CHECK(z(Family::D, 4, {2}) == FiniteGroup::klein_four());
  CHECK(z(Family::C, 3, {1}).order() == 2);
  CHECK(z(Family::A, 4, {}) == FiniteGroup::cyclic(5));
}

TEST_CASE("center fiber case rules") {
  // B: Z/2 iff every j is even.
  CHECK(z(Family::B, 4, {2, 4}).order() == 2);
  CHECK(z(Family::B, 4, {1, 4}).order() == 1);
  CHECK(z(Family::B, 4, {}).order() == 2);
  // C: Z/2 iff n is not in J.
  CHECK(z(Family::C, 3, {3}).order() == 1);
  CHECK(z(Family::C, 3, {}).order() == 2);
  // D: full center, then the three Z/2 rows, else trivial.
  CHECK(z(Family::D, 5, {}) == FiniteGroup::cyclic(4));
  CHECK(z(Family::D, 5, {2}) == FiniteGroup::cyclic(4));
  CHECK(z(Family::D, 4, {4}).order() == 2);
  CHECK(z(Family::D, 4, {3}).order() == 2);
  CHECK(z(Family::D, 5, {5}).order() == 1);
  CHECK(z(Family::D, 4, {1}).order() == 2);
  CHECK(z(Family::D, 4, {1, 4}).order() == 1);
  CHECK(z(Family::D, 4, {3, 4}).order() == 1);
  CHECK(z(Family::D, 4, {2, 3, 4}).order() == 1);
  // E6 and E7 membership rules.
  const auto e6 = LieType::exceptional(Family::E6);
  const auto e7 = LieType::exceptional(Family::E7);
  CHECK(center_fiber(e6, SubsetJ({2, 4}, 6)).order() == 3);
  CHECK(center_fiber(e6, SubsetJ({1}, 6)).order() == 1);
  CHECK(center_fiber(e6, SubsetJ(6)).order() == 3);
  CHECK(center_fiber(e7, SubsetJ({1, 3, 4, 6}, 7)).order() == 2);
  CHECK(center_fiber(e7, SubsetJ({5}, 7)).order() == 1);
  CHECK(center_fiber(e7, SubsetJ(7)).order() == 2);
  for (Family f : {Family::E8, Family::F4, Family::G2}) {
    const auto t = LieType::exceptional(f);
    CHECK(center_fiber(t, SubsetJ({1}, t.rank())) == FiniteGroup::trivial());
    CHECK(center_fiber_is_extension(t));
  }
  CHECK_FALSE(center_fiber_is_extension(e7));
  CHECK_THROWS_AS(center_fiber(LieType(Family::A, 3), SubsetJ({1}, 4)), InputError);
}

TEST_CASE("center orders") {
  CHECK(center_order(LieType(Family::A, 6)) == 7);
  CHECK(center_order(LieType(Family::B, 3)) == 2);
  CHECK(center_order(LieType(Family::C, 3)) == 2);
  CHECK(center_order(LieType(Family::D, 5)) == 4);
  CHECK(center_order(LieType::exceptional(Family::E6)) == 3);
  CHECK(center_order(LieType::exceptional(Family::E7)) == 2);
  CHECK(center_order(LieType::exceptional(Family::E8)) == 1);
}

TEST_CASE("orbit partition examples") {
  CHECK(p_of(Family::A, 4, {1, 3}) == Partition({2, 2, 1}));
  CHECK(p_of(Family::B, 3, {2}) == Partition({3, 2, 2}));
  CHECK(p_of(Family::C, 3, {1}) == Partition({4, 1, 1}));
  const auto d = orbit_partition(LieType(Family::D, 4), SubsetJ({4}, 4));
  CHECK(d.partition == Partition({4, 4}));
  CHECK(d.very_even);
  CHECK(d.orbit_label_ambiguous);
  CHECK(p_of(Family::D, 4, {3, 4}) == Partition({3, 3, 1, 1}));
}

TEST_CASE("principal and zero orbits") {
  CHECK(p_of(Family::A, 4, {}) == Partition({5}));
  CHECK(p_of(Family::B, 3, {}) == Partition({7}));
  CHECK(p_of(Family::C, 3, {}) == Partition({6}));
  CHECK(p_of(Family::D, 4, {}) == Partition({7, 1}));
  CHECK(p_of(Family::D, 5, {5}) == Partition({5, 5}));
  CHECK(p_of(Family::A, 3, {1, 2, 3}) == Partition({1, 1, 1, 1}));
  CHECK(p_of(Family::D, 4, {1, 2, 3, 4}) == Partition(std::vector<int>(8, 1)));
  CHECK_THROWS_AS(orbit_partition(LieType::exceptional(Family::E6), SubsetJ(6)), UnsupportedFamilyError);
}

TEST_CASE("type A orbit dimension") {
  CHECK(orbit_dimension_typeA(6, Partition({3, 3, 1})) == 32);
  CHECK(orbit_dimension_typeA(6, Partition({7})) == 42);
  CHECK(orbit_dimension_typeA(6, Partition(std::vector<int>(7, 1))) == 0);
  CHECK_THROWS_AS(orbit_dimension_typeA(6, Partition({3, 3})), InputError);
}

TEST_CASE("fundamental groups") {
  auto fg = fundamental_groups(LieType(Family::A, 5), Partition({3, 3}));
  CHECK(fg.pi1 == FiniteGroup::cyclic(3));
  CHECK(fg.a == FiniteGroup::trivial());

  fg = fundamental_groups(LieType(Family::C, 3), Partition({4, 1, 1}));
  CHECK(fg.pi1 == FiniteGroup::elementary_abelian_2(1));
  CHECK(fg.a == FiniteGroup::trivial());

  fg = fundamental_groups(LieType(Family::B, 3), Partition({3, 2, 2}));
  CHECK(fg.pi1 == FiniteGroup::central_extension_2(0));
  CHECK(fg.pi1.order() == 2);
  CHECK(fg.a == FiniteGroup::trivial());

  fg = fundamental_groups(LieType(Family::D, 4), Partition({3, 3, 1, 1}));
  CHECK(fg.pi1 == FiniteGroup::elementary_abelian_2(1));
  CHECK(fg.a == FiniteGroup::elementary_abelian_2(1));
}

TEST_CASE("invalid orbit partitions are named") {
  CHECK_THROWS_WITH_AS(require_orbit_partition(LieType(Family::B, 3), Partition({4, 2, 1})),
                       doctest::Contains("even part"), InputError);
  CHECK_THROWS_WITH_AS(require_orbit_partition(LieType(Family::C, 3), Partition({3, 2, 1})),
                       doctest::Contains("odd part"), InputError);
  CHECK_THROWS_WITH_AS(require_orbit_partition(LieType(Family::D, 4), Partition({4, 2, 1, 1})),
                       doctest::Contains("even part"), InputError);
  CHECK_THROWS_AS(require_orbit_partition(LieType(Family::C, 3), Partition({4, 1})), InputError);
  CHECK_NOTHROW(require_orbit_partition(LieType(Family::C, 3), Partition({2, 2, 1, 1})));
}

TEST_CASE("kernel identity examples") {
  auto k = kernel_check(LieType(Family::A, 5), SubsetJ({2, 4}, 5));
  CHECK(k.zj_order == 2);
  CHECK(k.pi1_order == 2);
  CHECK(k.a_order == 1);
  CHECK(k.holds);

  k = kernel_check(LieType(Family::C, 3), SubsetJ({1}, 3));
  CHECK(k.zj_order == 2);
  CHECK(k.pi1_order == 2);
  CHECK(k.a_order == 1);
  CHECK(k.holds);

  k = kernel_check(LieType(Family::D, 4), SubsetJ({3, 4}, 4));
  CHECK(k.zj_order == 1);
  CHECK(k.pi1_order == 2);
  CHECK(k.a_order == 2);
  CHECK(k.holds);
}

TEST_CASE("witness J for a partition") {
  const auto j = find_subset_for_partition(LieType(Family::A, 6), Partition({3, 3, 1}));
  REQUIRE(j);
  CHECK(p_of(Family::A, 6, {j->elements().begin(), j->elements().end()}) == Partition({3, 3, 1}));
  const auto d = find_subset_for_partition(LieType(Family::D, 4), Partition({3, 3, 1, 1}));
  REQUIRE(d);
  CHECK(orbit_partition(LieType(Family::D, 4), *d).partition == Partition({3, 3, 1, 1}));
  // [4,2] in C_3 is a genuine orbit no torus stratum reaches.
  CHECK_NOTHROW(require_orbit_partition(LieType(Family::C, 3), Partition({4, 2})));
  CHECK_FALSE(find_subset_for_partition(LieType(Family::C, 3), Partition({4, 2})));
}

}  // TEST_SUITE

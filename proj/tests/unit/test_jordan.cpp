#include <doctest.h>

#include "nilorb/error.hpp"
#include "nilorb/jordan.hpp"

using namespace nilorb;

namespace {

IntMatrix jordan_block(std::size_t m) {
  IntMatrix x(m);
  for (std::size_t i = 1; i < m; ++i) x.add_unit(i, i + 1);
  return x;
}

}  // namespace

TEST_SUITE("jordan-oracle") {

TEST_CASE("unit matrices and arithmetic") {
  const auto e12 = IntMatrix::unit(3, 1, 2);
  const auto e23 = IntMatrix::unit(3, 2, 3);
  CHECK(e12 * e23 == IntMatrix::unit(3, 1, 3));
  CHECK((e23 * e12).is_zero());
  CHECK((e12 + e23 - e12) == e23);
  CHECK(IntMatrix::identity(3) * e12 == e12);
  CHECK(e12.is_strictly_upper_triangular());
  CHECK_FALSE(IntMatrix::unit(3, 2, 1).is_strictly_upper_triangular());
  CHECK((e12 - IntMatrix::unit(3, 3, 1)).to_unit_sum() == "E_{1,2} - E_{3,1}");
}

TEST_CASE("relabeling rows and columns") {
  const auto x = IntMatrix::unit(3, 1, 2);
  // 0-based p sends index 0 to 2 and 1 to 0: E_{1,2} becomes E_{3,1}.
  CHECK(x.permuted({2, 0, 1}) == IntMatrix::unit(3, 3, 1));
}

TEST_CASE("exact rank") {
  CHECK(exact_rank(IntMatrix(4)) == 0);
  CHECK(exact_rank(IntMatrix::identity(4)) == 4);
  CHECK(exact_rank(jordan_block(5)) == 4);
  IntMatrix m(3);
  m(0, 0) = 2; m(0, 1) = 4; m(0, 2) = 6;
  m(1, 0) = 1; m(1, 1) = 2; m(1, 2) = 3;
  m(2, 0) = 0; m(2, 1) = 1; m(2, 2) = 5;
  CHECK(exact_rank(m) == 2);
  // A zero leading column must be skipped rather than stop elimination.
  IntMatrix z(3);
  z(0, 1) = 1;
  z(1, 2) = 1;
  CHECK(exact_rank(z) == 2);
}

TEST_CASE("representative matrices") {
  const LieType a3(Family::A, 3);
  CHECK(representative_matrix(a3, SubsetJ(3)) ==
        IntMatrix::unit(4, 1, 2) + IntMatrix::unit(4, 2, 3) + IntMatrix::unit(4, 3, 4));

  const LieType c3(Family::C, 3);
  CHECK(representative_matrix(c3, SubsetJ({1}, 3)) ==
        IntMatrix::unit(6, 2, 3) - IntMatrix::unit(6, 6, 5) + IntMatrix::unit(6, 3, 6));

  const LieType a4(Family::A, 4);
  CHECK(representative_matrix(a4, SubsetJ({1, 3}, 4)) == IntMatrix::unit(5, 2, 3) + IntMatrix::unit(5, 4, 5));

  const LieType b2(Family::B, 2);
  CHECK(simple_root_vector(b2, 1) == IntMatrix::unit(5, 2, 3) - IntMatrix::unit(5, 5, 4));
  CHECK(simple_root_vector(b2, 2) == IntMatrix::unit(5, 1, 5) - IntMatrix::unit(5, 3, 1));

  const LieType d4(Family::D, 4);
  CHECK(simple_root_vector(d4, 4) == IntMatrix::unit(8, 3, 8) - IntMatrix::unit(8, 4, 7));
  CHECK(simple_root_vector(d4, 1) == IntMatrix::unit(8, 1, 2) - IntMatrix::unit(8, 6, 5));

  CHECK_THROWS_AS(simple_root_vector(a3, 4), InputError);
  CHECK_THROWS_AS(representative_matrix(LieType::exceptional(Family::E6), SubsetJ(6)), UnsupportedFamilyError);
}

TEST_CASE("jordan type extraction") {
  CHECK(jordan_partition(IntMatrix(5)) == Partition({1, 1, 1, 1, 1}));
  CHECK(jordan_partition(jordan_block(6)) == Partition({6}));
  const auto x = representative_matrix(LieType(Family::C, 3), SubsetJ({1}, 3));
  CHECK(power_ranks(x) == std::vector<std::size_t>{6, 3, 2, 1, 0});
  CHECK(jordan_partition(x) == Partition({4, 1, 1}));
  CHECK_THROWS_AS(power_ranks(IntMatrix::identity(3)), InputError);
}

TEST_CASE("very even D_4 strata have two blocks of four") {
  const LieType d4(Family::D, 4);
  CHECK(jordan_partition(representative_matrix(d4, SubsetJ({4}, 4))) == Partition({4, 4}));
  CHECK(jordan_partition(representative_matrix(d4, SubsetJ({3}, 4))) == Partition({4, 4}));
}

}  // TEST_SUITE

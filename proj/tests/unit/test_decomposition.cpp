#include <doctest.h>

#include <algorithm>

#include "nilorb/decomposition.hpp"
#include "nilorb/error.hpp"

using namespace nilorb;

TEST_SUITE("graham-decomposition") {

TEST_CASE("rank 3 report") {
  const auto r = summand_report(3);
  REQUIRE(r.size() == 5);
  const std::vector<Partition> order{Partition({4}), Partition({3, 1}), Partition({2, 2}), Partition({2, 1, 1}),
                                     Partition({1, 1, 1, 1})};
  const std::vector<int> c{4, 1, 2, 1, 1};
  std::size_t total = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    CHECK(r[i].partition == order[i]);
    CHECK(r[i].c == c[i]);
    CHECK(r[i].characters.size() == static_cast<std::size_t>(c[i]));
    CHECK_FALSE(r[i].multiplicity_known);
    total += r[i].characters.size();
  }
  CHECK(total == 9);
  CHECK(r[0].orbit_dimension == 12);
  CHECK(r[0].fiber_dimension == 0);
  CHECK(r[4].fiber_dimension == 6);
  CHECK(r[2].characters == std::vector<int>{0, 1});
}

TEST_CASE("small ranks") {
  const auto r1 = summand_report(1);
  REQUIRE(r1.size() == 2);
  CHECK(r1[0].partition == Partition({2}));
  CHECK(r1[0].characters.size() == 2);
  CHECK(r1[1].characters.size() == 1);

  const auto r2 = summand_report(2);
  std::size_t total = 0;
  for (const auto& rec : r2) total += rec.characters.size();
  CHECK(r2.size() == 3);
  CHECK(total == 5);
}

TEST_CASE("ties keep partition order") {
  // [3,1,1,1] and [2,2,2] both have orbit dimension 18 in sl_6.
  const auto r = summand_report(5);
  auto pos = [&](const Partition& p) {
    return std::find_if(r.begin(), r.end(), [&](const auto& rec) { return rec.partition == p; }) - r.begin();
  };
  CHECK(pos(Partition({3, 1, 1, 1})) + 1 == pos(Partition({2, 2, 2})));
}

TEST_CASE("bounds") {
  CHECK_THROWS_AS(summand_report(0), InputError);
  CHECK_THROWS_AS(summand_report(21), ResourceError);
  CHECK_NOTHROW(summand_report(8, 8));
  CHECK_THROWS_AS(summand_report(9, 8), ResourceError);
}

}  // TEST_SUITE

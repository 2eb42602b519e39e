#include <doctest.h>

#include <numeric>

#include "nilorb/combinatorics.hpp"
#include "nilorb/decomposition.hpp"
#include "nilorb/jordan.hpp"
#include "nilorb/orbit_invariants.hpp"
#include "nilorb/springer.hpp"
#include "nilorb/verify.hpp"

using namespace nilorb;

// Exhaustive sweeps over the invariants; the acceptance binary pins the
// timed ranges, these cover the wider ones.
TEST_SUITE("properties") {

TEST_CASE("flags agree with recomputation from parts") {
  for (int m = 1; m <= 12; ++m) {
    for (const auto& p : partitions_of(m)) {
      bool very_even = true, rather_odd = true;
      for (int d : p.distinct_parts()) {
        if (d % 2 == 1 || p.multiplicity(d) % 2 == 1) very_even = false;
        if (d % 2 == 1 && p.multiplicity(d) > 1) rather_odd = false;
      }
      REQUIRE(p.very_even() == very_even);
      REQUIRE(p.rather_odd() == rather_odd);
      REQUIRE(p.conjugate().conjugate() == p);
    }
  }
}

TEST_CASE("type A exactness and partition totals up to rank 10") {
  for (const Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int n = f == Family::D ? 3 : (f == Family::A ? 1 : 2); n <= 10; ++n) {
      const LieType t(f, n);
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const auto j = SubsetJ::from_mask(mask, n);
        const auto orbit = orbit_partition(t, j);
        REQUIRE(orbit.partition.total() == t.matrix_size());
        REQUIRE_NOTHROW(require_orbit_partition(t, orbit.partition));
        const auto k = kernel_check(t, j);
        REQUIRE(k.holds);
        if (f == Family::A) {
          REQUIRE(k.zj_order == k.pi1_order);
          REQUIRE(k.a_order == 1);
        }
        REQUIRE_FALSE((orbit.orbit_label_ambiguous && f != Family::D));
      }
    }
  }
}

TEST_CASE("formula matches the Jordan oracle on rank 8 samples") {
  // Full sweeps to rank 7 run in the acceptance suite; here every J of D_8.
  const LieType t(Family::D, 8);
  for (std::uint32_t mask = 0; mask < (1u << 8); ++mask) {
    const auto j = SubsetJ::from_mask(mask, 8);
    REQUIRE(jordan_partition(representative_matrix(t, j)) == orbit_partition(t, j).partition);
  }
}

TEST_CASE("dimension identity up to total 10") {
  for (int m = 1; m <= 10; ++m) {
    for (const auto& p : partitions_of(m)) {
      const int n = m - 1;
      const int d = max_cell_dimension(p);
      REQUIRE(std::int64_t{n} * (n + 1) - 2 * d == orbit_dimension_typeA(n, p));
      const auto d_sigma = labeled_diagrams(p);
      REQUIRE(cell_dimension(d_sigma.sigma, p) == d);
      for (const auto& r : phi_w_x(d_sigma.sigma, p)) REQUIRE(phi_w(d_sigma.sigma).count(r) == 1);
    }
  }
}

TEST_CASE("every cell dimension is bounded by the fiber dimension") {
  for (int m = 1; m <= 7; ++m) {
    for (const auto& p : partitions_of(m)) {
      const auto pv = enumerate_cells(p);
      const int d = max_cell_dimension(p);
      std::uint64_t sum = 0;
      for (const auto& c : pv.cells) {
        REQUIRE(c.dimension <= d);
        REQUIRE(c.dimension == static_cast<int>(phi_w(c.w).size() - phi_w_x(c.w, p).size()));
        REQUIRE(is_nonempty_cell(c.w, p));
      }
      for (auto c : pv.poincare) sum += c;
      REQUIRE(sum == pv.cells.size());
      // Euler characteristic of the fiber is the number of cells.
      REQUIRE(BigInt(sum) == multinomial(p));
    }
  }
}

TEST_CASE("decomposition sum identity up to rank 12") {
  for (int n = 1; n <= 12; ++n) {
    const auto r = summand_report(n);
    std::int64_t total = 0;
    for (const auto& rec : r) {
      REQUIRE(rec.c == gcd_of_parts(rec.partition));
      REQUIRE(rec.characters.front() == 0);
      total += 2 * rec.fiber_dimension + rec.orbit_dimension;
    }
    REQUIRE(total == static_cast<std::int64_t>(r.size()) * n * (n + 1));
  }
}

TEST_CASE("verify suites pass and count their checks") {
  VerifyOptions o;
  o.max_rank = 5;
  o.paving_bound = 6;
  const auto report = verify_all(o);
  REQUIRE(report.suites.size() == 6);
  for (const auto& s : report.suites) {
    CAPTURE(s.name);
    CHECK(s.passed());
    CHECK(s.checks > 0);
  }
  CHECK(report.ok());
  o.workers = 1;
  const auto serial = verify_all(o);
  CHECK(serial.total_checks() == report.total_checks());

  // A wider sweep reports more checks in the sweeping suites.
  VerifyOptions wider = o;
  wider.max_rank = 6;
  CHECK(verify_formula_oracle(wider).checks > verify_formula_oracle(o).checks);
  CHECK(verify_orbit_invariants(wider).checks > verify_orbit_invariants(o).checks);
}

}  // TEST_SUITE

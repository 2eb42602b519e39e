#ifndef NILORB_ORBIT_INVARIANTS_HPP
#define NILORB_ORBIT_INVARIANTS_HPP

#include <cstdint>
#include <optional>

#include "nilorb/finite_group.hpp"
#include "nilorb/lie_type.hpp"
#include "nilorb/partition.hpp"
#include "nilorb/subset.hpp"

namespace nilorb {

/// Fiber group Z(J) of the toric covering over the torus orbit indexed by J.
///
/// Empty J follows each case rule vacuously. E8, F4 and G2 have trivial
/// center and always give the trivial group; see center_fiber_is_extension().
FiniteGroup center_fiber(const LieType& type, const SubsetJ& j);

/// True for the families whose rule is a convention rather than a tabulated case.
bool center_fiber_is_extension(const LieType& type) noexcept;

/// Order of the center of the simply connected group.
int center_order(const LieType& type) noexcept;

struct OrbitPartitionResult {
  Partition partition;
  bool very_even = false;
  /// Type D very even partitions label two orbits and are not separated here.
  bool orbit_label_ambiguous = false;
};

/// Partition of the adjoint orbit containing the torus orbit of J (types A-D).
OrbitPartitionResult orbit_partition(const LieType& type, const SubsetJ& j);

/// (n+1)^2 - sum of squared column heights.
std::int64_t orbit_dimension_typeA(int rank, const Partition& p);

struct FundamentalGroups {
  FiniteGroup pi1;
  FiniteGroup a;
};

/// Throws InputError naming the violated condition if p cannot label an
/// orbit of the given classical type.
void require_orbit_partition(const LieType& type, const Partition& p);

/// pi_1(O_P) and the adjoint-group component group A(O_P), classical types.
FundamentalGroups fundamental_groups(const LieType& type, const Partition& p);

struct KernelReport {
  std::uint64_t zj_order = 0;
  std::uint64_t pi1_order = 0;
  std::uint64_t a_order = 0;
  bool holds = false;
};

/// Checks |Z(J)| * |A(O)| == |pi_1(O)| for the orbit containing J.
KernelReport kernel_check(const LieType& type, const SubsetJ& j);

/// Some J with orbit_partition(type, J) == p, the first in mask order, if the
/// orbit meets the torus-orbit stratification at all.
std::optional<SubsetJ> find_subset_for_partition(const LieType& type, const Partition& p);

}  // namespace nilorb

#endif  // NILORB_ORBIT_INVARIANTS_HPP

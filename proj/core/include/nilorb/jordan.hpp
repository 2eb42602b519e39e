#ifndef NILORB_JORDAN_HPP
#define NILORB_JORDAN_HPP

#include <cstddef>
#include <vector>

#include "nilorb/int_matrix.hpp"
#include "nilorb/lie_type.hpp"
#include "nilorb/partition.hpp"
#include "nilorb/subset.hpp"

namespace nilorb {

/// Root vector X_{alpha_i} of the classical matrix realization (1 <= i <= rank).
IntMatrix simple_root_vector(const LieType& type, int i);

/// X_J: sum of X_{alpha_i} over i not in J.
IntMatrix representative_matrix(const LieType& type, const SubsetJ& j);

/// r_k = rank(m^k) for k = 0, 1, ... up to the first zero power.
/// Throws InputError if m^dim != 0.
std::vector<std::size_t> power_ranks(const IntMatrix& m);

/// Jordan type of a nilpotent matrix: #blocks of size >= k is r_{k-1} - r_k.
Partition jordan_partition(const IntMatrix& m);

}  // namespace nilorb

#endif  // NILORB_JORDAN_HPP

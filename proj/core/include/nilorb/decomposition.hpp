#ifndef NILORB_DECOMPOSITION_HPP
#define NILORB_DECOMPOSITION_HPP

#include <cstdint>
#include <vector>

#include "nilorb/partition.hpp"

namespace nilorb {

/// One orbit of sl_{n+1} with the local systems certified to occur in the
/// pushforward from Graham's variety.
struct SummandRecord {
  Partition partition;
  std::int64_t orbit_dimension = 0;
  /// Springer fiber dimension d_x; 2 d_x = n(n+1) - orbit_dimension.
  int fiber_dimension = 0;
  /// |pi_1(O)| = gcd of the parts.
  int c = 1;
  /// Characters k = 0..c-1 of Z/c (k sends the generator to exp(2 pi i k / c)).
  std::vector<int> characters;
  /// Only a lower bound of one is certified for each multiplicity.
  bool multiplicity_known = false;
};

inline constexpr int kDefaultSummandBound = 20;

/// One record per partition of n+1, sorted by orbit dimension descending
/// (ties in reverse lexicographic partition order). Throws ResourceError if
/// rank exceeds bound.
std::vector<SummandRecord> summand_report(int rank, int bound = kDefaultSummandBound);

}  // namespace nilorb

#endif  // NILORB_DECOMPOSITION_HPP

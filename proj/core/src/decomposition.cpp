#include "nilorb/decomposition.hpp"

#include <algorithm>
#include <numeric>

#include "nilorb/combinatorics.hpp"
#include "nilorb/error.hpp"
#include "nilorb/orbit_invariants.hpp"
#include "nilorb/springer.hpp"

namespace nilorb {

std::vector<SummandRecord> summand_report(int rank, int bound) {
  if (rank < 1) throw InputError("summand_report: rank must be >= 1");
  if (rank > bound) {
    throw ResourceError("rank " + std::to_string(rank) + " exceeds the partition enumeration bound " +
                        std::to_string(bound));
  }
  std::vector<SummandRecord> out;
  for (auto& p : partitions_of(rank + 1)) {
    SummandRecord rec;
    rec.orbit_dimension = orbit_dimension_typeA(rank, p);
    rec.fiber_dimension = max_cell_dimension(p);
    rec.c = graham_cover_components(p).count;
    rec.characters.resize(static_cast<std::size_t>(rec.c));
    std::iota(rec.characters.begin(), rec.characters.end(), 0);
    rec.partition = std::move(p);
    out.push_back(std::move(rec));
  }
  std::stable_sort(out.begin(), out.end(), [](const SummandRecord& a, const SummandRecord& b) {
    return a.orbit_dimension > b.orbit_dimension;
  });
  return out;
}

}  // namespace nilorb

#ifndef NILORB_EXCEPTIONAL_HPP
#define NILORB_EXCEPTIONAL_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nilorb/dynkin.hpp"
#include "nilorb/finite_group.hpp"
#include "nilorb/lie_type.hpp"
#include "nilorb/subset.hpp"

namespace nilorb {

/// One nilpotent orbit of E6/E7 meeting the toric stratification.
struct OrbitRecord {
  /// Printed label, possibly with a prime decoration: "(3A_1)''".
  std::string bala_carter;
  /// The label without decoration, as a sub-diagram type.
  ComponentLabel base_label;
  std::vector<SubsetJ> j_sets;
  FiniteGroup z_orbit;
  FiniteGroup pi1;

  /// pi_1 modulo its Z/2 or Z/3 factor when Z(O) is nontrivial, pi_1 otherwise.
  FiniteGroup a_group() const;
};

/// The orbit tables exist in two editions. as_printed reproduces the source
/// transcription entry for entry. corrected applies table_errata() on top.
enum class TableEdition { corrected, as_printed };

/// A single misplaced J in the printed tables. An empty printed_in means J
/// is missing from the printed table; an empty belongs_to means the printed
/// entry is a duplicate to drop.
struct TableErratum {
  /// Node digits of J, e.g. "1256".
  std::string_view j;
  std::string_view printed_in;
  std::string_view belongs_to;
};

std::span<const TableErratum> table_errata(Family family);

SubsetJ erratum_subset(const TableErratum& e, int rank);

/// E6 or E7 only; anything else throws UnsupportedFamilyError.
const std::vector<OrbitRecord>& orbit_table(const LieType& type,
                                            TableEdition edition = TableEdition::corrected);

/// The unique record listing J. Throws DataIntegrityError if J is absent or listed twice.
const OrbitRecord& table_lookup(const LieType& type, const SubsetJ& j,
                                TableEdition edition = TableEdition::corrected);

/// "(3A_1)''" -> "3A_1"
std::string strip_decorations(std::string_view label);

struct TableCheck {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool passed() const noexcept { return failures.empty(); }
};

struct TableValidation {
  std::string type;
  std::size_t records = 0;
  std::size_t subsets = 0;
  /// partition, center-fiber, sub-diagram, quotient order, in that order.
  std::vector<TableCheck> checks;
  /// Masks of every J named by some failure.
  std::set<std::uint32_t> flagged_subsets;

  bool ok() const noexcept;
  std::vector<std::string> failures() const;
};

TableValidation validate_tables(const LieType& type, TableEdition edition = TableEdition::corrected);

/// Validation over caller-supplied records (fault injection, external diffs).
TableValidation validate_records(const LieType& type, std::span<const OrbitRecord> records);

/// One record per line: label, j-sets as "{1,5};{2,3}", |Z|, |pi_1|, tab separated.
std::string dump_tsv(std::span<const OrbitRecord> records);

}  // namespace nilorb

#endif  // NILORB_EXCEPTIONAL_HPP

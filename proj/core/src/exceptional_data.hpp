#ifndef NILORB_EXCEPTIONAL_DATA_HPP
#define NILORB_EXCEPTIONAL_DATA_HPP

#include <span>
#include <string_view>

namespace nilorb::detail {

enum class GroupTag { one, z2, z3, s2 };

/// J-sets are written as digit strings ("1346"); "-" is the empty set.
struct RawRecord {
  std::string_view label;
  std::string_view j_sets;
  GroupTag z;
  GroupTag pi1;
};

std::span<const RawRecord> printed_e6();
std::span<const RawRecord> printed_e7();

}  // namespace nilorb::detail

#endif  // NILORB_EXCEPTIONAL_DATA_HPP

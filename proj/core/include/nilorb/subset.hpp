#ifndef NILORB_SUBSET_HPP
#define NILORB_SUBSET_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nilorb {

/// A subset J of the simple-root indices {1..rank}, kept strictly ascending.
class SubsetJ {
 public:
  static constexpr int kMaxRank = 31;

  explicit SubsetJ(int rank = 0);
  SubsetJ(std::vector<int> elements, int rank);

  static SubsetJ from_mask(std::uint32_t mask, int rank);
  static SubsetJ full(int rank);

  /// "2,4" or "{2,4}"; the empty string and "{}" give the empty set.
  static SubsetJ parse(std::string_view text, int rank);

  int rank() const noexcept { return rank_; }
  std::span<const int> elements() const noexcept { return elements_; }
  int size() const noexcept { return static_cast<int>(elements_.size()); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(int i) const noexcept;
  std::uint32_t mask() const noexcept;

  /// Indices of {1..rank} not in J, ascending.
  std::vector<int> complement() const;

  /// "{2,4}", "{}" for the empty set.
  std::string to_string() const;

  friend bool operator==(const SubsetJ&, const SubsetJ&) = default;

 private:
  std::vector<int> elements_;
  int rank_ = 0;
};

}  // namespace nilorb

#endif  // NILORB_SUBSET_HPP

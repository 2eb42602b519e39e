#ifndef NILORB_PARTITION_HPP
#define NILORB_PARTITION_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nilorb {

/// A partition stored reduced: parts sorted weakly decreasing, zeros dropped.
///
/// Unreduced input (any order, like parts scattered, zero parts) is accepted
/// and normalized, since an orbit label only depends on the multiset of parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Strict parser for "3,3,1": positive, weakly decreasing, comma separated.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const noexcept { return parts_; }
  int total() const noexcept { return total_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  bool empty() const noexcept { return parts_.empty(); }

  int multiplicity(int part) const noexcept;
  std::vector<int> distinct_parts() const;

  /// Only even parts, each with even multiplicity.
  bool very_even() const noexcept { return very_even_; }
  /// Every odd part has multiplicity one.
  bool rather_odd() const noexcept { return rather_odd_; }

  Partition conjugate() const;

  /// "[3,3,1]"
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int total_ = 0;
  bool very_even_ = true;
  bool rather_odd_ = true;
};

/// All partitions of m, in reverse lexicographic order ([m] first, [1^m] last).
std::vector<Partition> partitions_of(int m);

}  // namespace nilorb

#endif  // NILORB_PARTITION_HPP

#ifndef NILORB_LIE_TYPE_HPP
#define NILORB_LIE_TYPE_HPP

#include <optional>
#include <string>
#include <string_view>

namespace nilorb {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

std::string_view family_name(Family f);

/// A Cartan type: family plus rank. Exceptional families carry their fixed rank.
class LieType {
 public:
  LieType(Family family, int rank);

  /// Exceptional families need no rank; classical ones do.
  static LieType exceptional(Family family);

  /// Accepts "A".."D", "E6", "E7", "E8", "F4", "G2" (case-insensitive).
  static LieType parse(std::string_view family, std::optional<int> rank);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }

  bool is_classical() const noexcept;
  bool is_simply_laced() const noexcept;

  /// Size of the defining matrix representation: n+1, 2n+1, 2n, 2n.
  int matrix_size() const;

  /// "A_5", "D_4", "E_6", ...
  std::string name() const;

  friend bool operator==(const LieType&, const LieType&) = default;

 private:
  Family family_;
  int rank_;
};

}  // namespace nilorb

#endif  // NILORB_LIE_TYPE_HPP

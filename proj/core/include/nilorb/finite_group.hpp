#ifndef NILORB_FINITE_GROUP_HPP
#define NILORB_FINITE_GROUP_HPP

#include <cstdint>
#include <string>

namespace nilorb {

/// Order plus structure tag for the small groups that occur as Z(J), pi_1(O), A(O).
///
/// Constructors normalize degenerate parameters to trivial: cyclic(1) and
/// elementary_abelian_2(0) are the trivial group. central_extension_2(0) is
/// kept as is (order 2) since its tag carries information.
class FiniteGroup {
 public:
  enum class Kind {
    trivial,
    cyclic,                ///< Z/c
    elementary_abelian_2,  ///< (Z/2)^k
    central_extension_2,   ///< extension by Z/2 of (Z/2)^k, order 2^(k+1)
    klein_four,            ///< Z/2 x Z/2
    symmetric_2,           ///< the tables' "S_2"
  };

  FiniteGroup() = default;

  static FiniteGroup trivial() { return {}; }
  static FiniteGroup cyclic(int c);
  static FiniteGroup elementary_abelian_2(int k);
  static FiniteGroup central_extension_2(int k);
  static FiniteGroup klein_four() { return FiniteGroup(Kind::klein_four, 0); }
  static FiniteGroup symmetric_2() { return FiniteGroup(Kind::symmetric_2, 0); }

  Kind kind() const noexcept { return kind_; }
  /// c for cyclic, k for the two 2-group families, 0 otherwise.
  int parameter() const noexcept { return parameter_; }
  std::uint64_t order() const noexcept;

  /// "cyclic(3)", "elementary_abelian_2(1)", "klein_four", ...
  std::string kind_name() const;
  /// Conventional notation: "1", "Z/3Z", "(Z/2Z)^2", "S_2", ...
  std::string label() const;

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  FiniteGroup(Kind kind, int parameter) : kind_(kind), parameter_(parameter) {}

  Kind kind_ = Kind::trivial;
  int parameter_ = 0;
};

}  // namespace nilorb

#endif  // NILORB_FINITE_GROUP_HPP

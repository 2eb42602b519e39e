#include "nilorb/finite_group.hpp"

#include "nilorb/error.hpp"

namespace nilorb {

FiniteGroup FiniteGroup::cyclic(int c) {
  if (c < 1) throw InputError("cyclic group order must be >= 1");
  if (c == 1) return trivial();
  return FiniteGroup(Kind::cyclic, c);
}

FiniteGroup FiniteGroup::elementary_abelian_2(int k) {
  if (k < 0 || k > 62) throw InputError("elementary abelian exponent out of range");
  if (k == 0) return trivial();
  return FiniteGroup(Kind::elementary_abelian_2, k);
}

FiniteGroup FiniteGroup::central_extension_2(int k) {
  if (k < 0 || k > 61) throw InputError("central extension exponent out of range");
  return FiniteGroup(Kind::central_extension_2, k);
}

std::uint64_t FiniteGroup::order() const noexcept {
  switch (kind_) {
    case Kind::trivial: return 1;
    case Kind::cyclic: return static_cast<std::uint64_t>(parameter_);
    case Kind::elementary_abelian_2: return std::uint64_t{1} << parameter_;
    case Kind::central_extension_2: return std::uint64_t{1} << (parameter_ + 1);
    case Kind::klein_four: return 4;
    case Kind::symmetric_2: return 2;
  }
  return 0;
}

std::string FiniteGroup::kind_name() const {
  switch (kind_) {
    case Kind::trivial: return "trivial";
    case Kind::cyclic: return "cyclic(" + std::to_string(parameter_) + ")";
    case Kind::elementary_abelian_2: return "elementary_abelian_2(" + std::to_string(parameter_) + ")";
    case Kind::central_extension_2: return "central_extension_2(" + std::to_string(parameter_) + ")";
    case Kind::klein_four: return "klein_four";
    case Kind::symmetric_2: return "symmetric_2";
  }
  return "?";
}

std::string FiniteGroup::label() const {
  switch (kind_) {
    case Kind::trivial: return "1";
    case Kind::cyclic: return "Z/" + std::to_string(parameter_) + "Z";
    case Kind::elementary_abelian_2:
      return parameter_ == 1 ? "Z/2Z" : "(Z/2Z)^" + std::to_string(parameter_);
    case Kind::central_extension_2:
      return parameter_ == 0 ? "Z/2Z.1" : "Z/2Z.(Z/2Z)^" + std::to_string(parameter_);
    case Kind::klein_four: return "Z/2Z x Z/2Z";
    case Kind::symmetric_2: return "S_2";
  }
  return "?";
}

}  // namespace nilorb

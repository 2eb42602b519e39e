#include "nilorb/orbit_invariants.hpp"

#include <algorithm>
#include <vector>

#include "nilorb/combinatorics.hpp"
#include "nilorb/error.hpp"

namespace nilorb {

namespace {

void require_matching_rank(const LieType& type, const SubsetJ& j) {
  if (j.rank() != type.rank()) {
    throw InputError("J is a subset of {1.." + std::to_string(j.rank()) + "} but " + type.name() +
                     " has rank " + std::to_string(type.rank()));
  }
}

void require_classical(const LieType& type, const char* what) {
  if (!type.is_classical()) {
    throw UnsupportedFamilyError(std::string(what) + " is only defined for types A-D, not " +
                                 type.name() + "; use the exceptional tables");
  }
}

bool all_even(std::span<const int> values) {
  return std::all_of(values.begin(), values.end(), [](int v) { return v % 2 == 0; });
}

FiniteGroup full_center_d(int n) {
  return n % 2 == 0 ? FiniteGroup::klein_four() : FiniteGroup::cyclic(4);
}

}  // namespace

bool center_fiber_is_extension(const LieType& type) noexcept {
  return type.family() == Family::E8 || type.family() == Family::F4 || type.family() == Family::G2;
}

int center_order(const LieType& type) noexcept {
  switch (type.family()) {
    case Family::A: return type.rank() + 1;
    case Family::B:
    case Family::C:
    case Family::E7: return 2;
    case Family::D: return 4;
    case Family::E6: return 3;
    default: return 1;
  }
}

FiniteGroup center_fiber(const LieType& type, const SubsetJ& j) {
  require_matching_rank(type, j);
  const int n = type.rank();
  const auto e = j.elements();
  switch (type.family()) {
    case Family::A:
      return FiniteGroup::cyclic(gcd_of_set(e, n + 1));
    case Family::B:
      return all_even(e) ? FiniteGroup::cyclic(2) : FiniteGroup::trivial();
    case Family::C:
      return j.contains(n) ? FiniteGroup::trivial() : FiniteGroup::cyclic(2);
    case Family::D: {
      const bool has_n1 = j.contains(n - 1);
      const bool has_n = j.contains(n);
      if (!has_n1 && !has_n) {
        return all_even(e) ? full_center_d(n) : FiniteGroup::cyclic(2);
      }
      if (has_n1 != has_n) {
        const bool low_even =
            std::all_of(e.begin(), e.end(), [n](int v) { return v >= n - 1 || v % 2 == 0; });
        if (low_even && n % 2 == 0 && n >= 4) return FiniteGroup::cyclic(2);
      }
      return FiniteGroup::trivial();
    }
    case Family::E6: {
      for (int k : {1, 3, 5, 6}) {
        if (j.contains(k)) return FiniteGroup::trivial();
      }
      return FiniteGroup::cyclic(3);
    }
    case Family::E7: {
      for (int k : {2, 5, 7}) {
        if (j.contains(k)) return FiniteGroup::trivial();
      }
      return FiniteGroup::cyclic(2);
    }
    case Family::E8:
    case Family::F4:
    case Family::G2:
      return FiniteGroup::trivial();
  }
  return FiniteGroup::trivial();
}

OrbitPartitionResult orbit_partition(const LieType& type, const SubsetJ& j) {
  require_classical(type, "orbit_partition");
  require_matching_rank(type, j);
  const int n = type.rank();

  // d[0] = 0, d[1..r] = elements of J.
  std::vector<int> d{0};
  d.insert(d.end(), j.elements().begin(), j.elements().end());
  const int r = j.size();

  std::vector<int> parts;
  auto doubled_gaps = [&](int upto) {
    for (int i = 1; i <= upto; ++i) {
      parts.push_back(d[i] - d[i - 1]);
      parts.push_back(d[i] - d[i - 1]);
    }
  };

  switch (type.family()) {
    case Family::A:
      parts.push_back(n + 1 - d[r]);
      for (int i = 1; i <= r; ++i) parts.push_back(d[i] - d[i - 1]);
      break;
    case Family::B:
      parts.push_back(2 * (n - d[r]) + 1);
      doubled_gaps(r);
      break;
    case Family::C:
      parts.push_back(2 * (n - d[r]));
      doubled_gaps(r);
      break;
    case Family::D: {
      const bool has_n1 = j.contains(n - 1);
      const bool has_n = j.contains(n);
      if (!has_n1 && !has_n) {
        parts.push_back(2 * (n - d[r]) - 1);
        doubled_gaps(r);
        parts.push_back(1);
      } else if (has_n1 && has_n) {
        doubled_gaps(r);
      } else {
        parts.push_back(n - d[r - 1]);
        parts.push_back(n - d[r - 1]);
        doubled_gaps(r - 1);
      }
      break;
    }
    default:
      break;
  }

  OrbitPartitionResult out;
  out.partition = Partition(std::move(parts));
  out.very_even = out.partition.very_even();
  out.orbit_label_ambiguous = type.family() == Family::D && out.very_even;
  return out;
}

std::int64_t orbit_dimension_typeA(int rank, const Partition& p) {
  if (p.total() != rank + 1) {
    throw InputError("partition " + p.to_string() + " has total " + std::to_string(p.total()) +
                     ", expected " + std::to_string(rank + 1) + " for A_" + std::to_string(rank));
  }
  std::int64_t dim = std::int64_t{rank + 1} * (rank + 1);
  for (int h : conjugate_heights(p)) dim -= std::int64_t{h} * h;
  return dim;
}

void require_orbit_partition(const LieType& type, const Partition& p) {
  require_classical(type, "fundamental_groups");
  const int size = type.matrix_size();
  if (p.total() != size) {
    throw InputError("partition " + p.to_string() + " has total " + std::to_string(p.total()) +
                     ", expected " + std::to_string(size) + " for " + type.name());
  }
  for (int d : p.distinct_parts()) {
    const int m = p.multiplicity(d);
    switch (type.family()) {
      case Family::B:
      case Family::D:
        if (d % 2 == 0 && m % 2 != 0) {
          throw InputError("partition " + p.to_string() + " invalid for " + type.name() +
                           ": even part " + std::to_string(d) + " must have even multiplicity");
        }
        break;
      case Family::C:
        if (d % 2 != 0 && m % 2 != 0) {
          throw InputError("partition " + p.to_string() + " invalid for " + type.name() +
                           ": odd part " + std::to_string(d) + " must have even multiplicity");
        }
        break;
      default:
        break;
    }
  }
}

FundamentalGroups fundamental_groups(const LieType& type, const Partition& p) {
  require_orbit_partition(type, p);

  int odd_distinct = 0, even_distinct = 0;
  bool odd_mult_even = true, even_mult_even = true;
  for (int d : p.distinct_parts()) {
    const bool even_mult = p.multiplicity(d) % 2 == 0;
    if (d % 2 != 0) {
      ++odd_distinct;
      odd_mult_even = odd_mult_even && even_mult;
    } else {
      ++even_distinct;
      even_mult_even = even_mult_even && even_mult;
    }
  }
  const int a = odd_distinct;
  const int b = even_distinct;

  switch (type.family()) {
    case Family::A:
      return {FiniteGroup::cyclic(gcd_of_parts(p)), FiniteGroup::trivial()};
    case Family::B: {
      // a >= 1 because the total 2n+1 is odd.
      auto quotient = FiniteGroup::elementary_abelian_2(a - 1);
      auto pi1 = p.rather_odd() ? FiniteGroup::central_extension_2(a - 1) : quotient;
      return {pi1, quotient};
    }
    case Family::C: {
      auto pi1 = FiniteGroup::elementary_abelian_2(b);
      auto ag = even_mult_even ? FiniteGroup::elementary_abelian_2(b)
                               : FiniteGroup::elementary_abelian_2(b - 1);
      return {pi1, ag};
    }
    case Family::D: {
      const int e = std::max(0, a - 1);
      auto pi1 = p.rather_odd() ? FiniteGroup::central_extension_2(e)
                                : FiniteGroup::elementary_abelian_2(e);
      auto ag = odd_mult_even ? FiniteGroup::elementary_abelian_2(e)
                              : FiniteGroup::elementary_abelian_2(std::max(0, a - 2));
      return {pi1, ag};
    }
    default:
      break;
  }
  throw UnsupportedFamilyError("fundamental_groups: unsupported family");
}

KernelReport kernel_check(const LieType& type, const SubsetJ& j) {
  const auto z = center_fiber(type, j);
  const auto orbit = orbit_partition(type, j);
  const auto groups = fundamental_groups(type, orbit.partition);
  KernelReport r;
  r.zj_order = z.order();
  r.pi1_order = groups.pi1.order();
  r.a_order = groups.a.order();
  r.holds = r.zj_order * r.a_order == r.pi1_order;
  return r;
}

std::optional<SubsetJ> find_subset_for_partition(const LieType& type, const Partition& p) {
  require_orbit_partition(type, p);
  const int n = type.rank();
  if (type.family() == Family::A) {
    // Partial sums of the parts in ascending order reproduce p.
    std::vector<int> elems;
    int sum = 0;
    auto parts = p.parts();
    for (auto it = parts.rbegin(); it + 1 != parts.rend(); ++it) {
      sum += *it;
      elems.push_back(sum);
    }
    return SubsetJ(std::move(elems), n);
  }
  constexpr int kSearchLimit = 20;
  if (n > kSearchLimit) {
    throw ResourceError("J search for " + type.name() + " exceeds rank bound " +
                        std::to_string(kSearchLimit));
  }
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    auto j = SubsetJ::from_mask(mask, n);
    if (orbit_partition(type, j).partition == p) return j;
  }
  return std::nullopt;
}

}  // namespace nilorb

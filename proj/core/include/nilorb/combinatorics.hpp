#ifndef NILORB_COMBINATORICS_HPP
#define NILORB_COMBINATORICS_HPP

#include <span>
#include <vector>

#include "nilorb/bigint.hpp"
#include "nilorb/partition.hpp"

namespace nilorb {

/// gcd of values together with extra; extra alone when values is empty.
int gcd_of_set(std::span<const int> values, int extra);

/// gcd of all parts of p.
int gcd_of_parts(const Partition& p);

/// Column heights of the Young diagram: result[j] = #parts >= j+1.
std::vector<int> conjugate_heights(const Partition& p);

/// Number of standard Young tableaux of shape p (hook-length formula).
BigInt syt_count(const Partition& p);

BigInt factorial(int m);

/// total! / prod(part!), the number of row-increasing fillings.
BigInt multinomial(const Partition& p);

}  // namespace nilorb

#endif  // NILORB_COMBINATORICS_HPP

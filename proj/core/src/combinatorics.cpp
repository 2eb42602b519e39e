#include "nilorb/combinatorics.hpp"

#include <numeric>

#include "nilorb/error.hpp"

namespace nilorb {

int gcd_of_set(std::span<const int> values, int extra) {
  if (extra < 1) throw InputError("gcd_of_set: extra must be >= 1");
  int g = extra;
  for (int v : values) g = std::gcd(g, v);
  return g;
}

int gcd_of_parts(const Partition& p) {
  int g = 0;
  for (int part : p.parts()) g = std::gcd(g, part);
  return g;
}

std::vector<int> conjugate_heights(const Partition& p) {
  std::vector<int> heights(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p.parts()) {
    for (int j = 0; j < part; ++j) ++heights[j];
  }
  return heights;
}

BigInt factorial(int m) {
  BigInt f = 1;
  for (int k = 2; k <= m; ++k) f *= k;
  return f;
}

BigInt syt_count(const Partition& p) {
  const auto heights = conjugate_heights(p);
  BigInt hooks = 1;
  const auto parts = p.parts();
  for (std::size_t row = 0; row < parts.size(); ++row) {
    for (int col = 0; col < parts[row]; ++col) {
      int arm = parts[row] - col - 1;
      int leg = heights[col] - static_cast<int>(row) - 1;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(p.total()) / hooks;
}

BigInt multinomial(const Partition& p) {
  BigInt denom = 1;
  for (int part : p.parts()) denom *= factorial(part);
  return factorial(p.total()) / denom;
}

}  // namespace nilorb

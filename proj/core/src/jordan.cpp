#include "nilorb/jordan.hpp"

#include "nilorb/error.hpp"

namespace nilorb {

IntMatrix simple_root_vector(const LieType& type, int i) {
  const int n = type.rank();
  if (i < 1 || i > n) throw InputError("simple root index " + std::to_string(i) + " out of range");
  const auto dim = static_cast<std::size_t>(type.matrix_size());
  IntMatrix x(dim);
  const auto u = [](int v) { return static_cast<std::size_t>(v); };

  switch (type.family()) {
    case Family::A:
      x.add_unit(u(i), u(i + 1));
      break;
    case Family::B:
      if (i < n) {
        x.add_unit(u(i + 1), u(i + 2));
        x.add_unit(u(n + i + 2), u(n + i + 1), -1);
      } else {
        x.add_unit(1, u(2 * n + 1));
        x.add_unit(u(n + 1), 1, -1);
      }
      break;
    case Family::C:
      if (i < n) {
        x.add_unit(u(i), u(i + 1));
        x.add_unit(u(n + i + 1), u(n + i), -1);
      } else {
        x.add_unit(u(n), u(2 * n));
      }
      break;
    case Family::D:
      if (i < n) {
        x.add_unit(u(i), u(i + 1));
        x.add_unit(u(n + i + 1), u(n + i), -1);
      } else {
        x.add_unit(u(n - 1), u(2 * n));
        x.add_unit(u(n), u(2 * n - 1), -1);
      }
      break;
    default:
      throw UnsupportedFamilyError("no matrix root vectors for " + type.name());
  }
  return x;
}

IntMatrix representative_matrix(const LieType& type, const SubsetJ& j) {
  if (!type.is_classical()) {
    throw UnsupportedFamilyError("representative_matrix is only defined for types A-D");
  }
  if (j.rank() != type.rank()) throw InputError("J rank does not match " + type.name());
  IntMatrix x(static_cast<std::size_t>(type.matrix_size()));
  for (int i : j.complement()) x = x + simple_root_vector(type, i);
  return x;
}

std::vector<std::size_t> power_ranks(const IntMatrix& m) {
  const std::size_t dim = m.dim();
  std::vector<std::size_t> ranks{dim};
  IntMatrix power = IntMatrix::identity(dim);
  for (std::size_t k = 1; ranks.back() != 0; ++k) {
    if (k > dim) throw InputError("matrix is not nilpotent");
    power = power * m;
    ranks.push_back(exact_rank(power));
  }
  return ranks;
}

Partition jordan_partition(const IntMatrix& m) {
  const auto r = power_ranks(m);
  // at_least[k] = #blocks of size >= k+1
  std::vector<std::size_t> at_least;
  for (std::size_t k = 1; k < r.size(); ++k) at_least.push_back(r[k - 1] - r[k]);
  std::vector<int> parts;
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    const std::size_t next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
    if (at_least[k] < next) throw DataIntegrityError("rank sequence is not convex");
    parts.insert(parts.end(), at_least[k] - next, static_cast<int>(k + 1));
  }
  return Partition(std::move(parts));
}

}  // namespace nilorb

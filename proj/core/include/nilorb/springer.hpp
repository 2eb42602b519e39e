#ifndef NILORB_SPRINGER_HPP
#define NILORB_SPRINGER_HPP

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nilorb/int_matrix.hpp"
#include "nilorb/partition.hpp"

namespace nilorb {

enum class LabelScheme {
  tymoczko,  ///< bottom-left upward through each column, columns left to right
  standard,  ///< top-left rightward through each row, rows top to bottom
};

/// Young diagram (rows top to bottom, longest first) with a bijective labeling by 1..total.
class LabeledDiagram {
 public:
  static LabeledDiagram tymoczko(const Partition& shape);
  static LabeledDiagram standard(const Partition& shape);

  const Partition& shape() const noexcept { return shape_; }
  LabelScheme scheme() const noexcept { return scheme_; }
  int size() const noexcept { return shape_.total(); }

  /// Labels row by row, top row first.
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

  /// Row (numbered 1.. from the top) and column (1.. from the left) of a label.
  int row_of(int label) const;
  int col_of(int label) const;

  /// Horizontally adjacent boxes (i|j), left label first, in row order.
  std::vector<std::pair<int, int>> pairs() const;

 private:
  LabeledDiagram(Partition shape, LabelScheme scheme, std::vector<std::vector<int>> rows);

  Partition shape_;
  LabelScheme scheme_;
  std::vector<std::vector<int>> rows_;
  std::vector<std::pair<int, int>> position_;  // label -> (row, col), 1-based
};

/// Permutation of {1..m} in one-line form: value(i) = w(i).
class TableauPermutation {
 public:
  TableauPermutation() = default;
  /// Validates that one_line is a permutation of 1..m.
  explicit TableauPermutation(std::vector<int> one_line);

  static TableauPermutation identity(int m);

  int size() const noexcept { return static_cast<int>(one_line_.size()); }
  int operator()(int i) const { return one_line_.at(static_cast<std::size_t>(i - 1)); }
  std::span<const int> one_line() const noexcept { return one_line_; }
  TableauPermutation inverse() const;

  /// "(1 3 2 5)"; fixed points omitted, "()" for the identity.
  std::string cycle_notation() const;

  friend bool operator==(const TableauPermutation&, const TableauPermutation&) = default;
  friend auto operator<=>(const TableauPermutation& a, const TableauPermutation& b) {
    return a.one_line_ <=> b.one_line_;
  }

 private:
  std::vector<int> one_line_;
};

/// The type-A positive root alpha_{i,j} = alpha_i + ... + alpha_{j-1}, i < j.
struct Root {
  int i;
  int j;
  friend auto operator<=>(const Root&, const Root&) = default;
};

using RootSet = std::set<Root>;

/// "{α_{2,4}, α_{3,5}}"
std::string render_roots(const RootSet& roots);

struct TableauData {
  LabeledDiagram tym;
  LabeledDiagram standard;
  /// sigma(j) is the Tym label in the box holding j in the Std labeling.
  TableauPermutation sigma;
};

TableauData labeled_diagrams(const Partition& p);

/// Sum of E_{i,j} over the pairs (i|j) of the labeling.
IntMatrix pair_matrix(const LabeledDiagram& d);

/// Roots alpha_{i,j} for the pairs (i|j) of the Tym labeling.
RootSet phi_x(const Partition& p);

/// Inversion roots: {(i,j) : i < j, w^{-1}(i) > w^{-1}(j)}.
RootSet phi_w(const TableauPermutation& w);

/// Roots of phi_w that split as alpha_{i,k} + alpha_{k,j} with one summand in
/// phi_w and the other in phi_x(p).
RootSet phi_w_x(const TableauPermutation& w, const Partition& p);

/// True iff w^{-1} takes every Tym pair (a|b) to an increasing pair.
bool is_nonempty_cell(const TableauPermutation& w, const Partition& p);

/// |phi_w| - |phi_{w,x}|.
int cell_dimension(const TableauPermutation& w, const Partition& p);

/// Dimension of the Springer fiber: sum over columns of binom(height, 2).
/// Throws DataIntegrityError if the sigma-cell dimension or the orbit
/// codimension disagree with it.
int max_cell_dimension(const Partition& p);

struct PavingCell {
  TableauPermutation w;
  int dimension;
};

struct EnumerationOptions {
  /// Largest partition total the enumerator accepts.
  int bound = 9;
  /// 0 picks NILORB_WORKERS or the hardware concurrency.
  unsigned workers = 0;
  /// When false only the Poincare coefficients are collected.
  bool keep_cells = true;
};

struct Paving {
  /// Sorted by dimension, then by the one-line form of w.
  std::vector<PavingCell> cells;
  /// poincare[d] = number of cells of dimension d.
  std::vector<std::uint64_t> poincare;

  std::uint64_t cell_count() const noexcept;
  int max_dimension() const noexcept { return static_cast<int>(poincare.size()) - 1; }
  std::uint64_t top_cell_count() const noexcept { return poincare.empty() ? 0 : poincare.back(); }
};

inline constexpr int kMaxEnumerationBound = 12;

/// All nonempty Schubert-cell intersections of the Springer fiber for p.
/// Throws ResourceError if p.total() exceeds options.bound.
Paving enumerate_cells(const Partition& p, const EnumerationOptions& options = {});

/// Worker count from NILORB_WORKERS, falling back to the hardware concurrency.
unsigned default_worker_count();

/// Components of the preimage of the sigma-cell under Graham's map: one per
/// element of pi_1 = Z/c, c = gcd of the parts.
struct CoverComponents {
  int count = 1;
  std::vector<int> component_ids;
  /// Deck transformation g in Z/c applied to a component; free and transitive.
  int deck_action(int g, int component) const;
};

CoverComponents graham_cover_components(const Partition& p);

}  // namespace nilorb

#endif  // NILORB_SPRINGER_HPP

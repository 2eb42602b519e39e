#ifndef NILORB_DYNKIN_HPP
#define NILORB_DYNKIN_HPP

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilorb/lie_type.hpp"

namespace nilorb {

/// Simply-laced Dynkin diagram, nodes numbered 1..n as in Humphreys.
class DynkinDiagram {
 public:
  using Edge = std::pair<int, int>;

  /// Rejects graphs that are not trees or have a node of degree > 3.
  DynkinDiagram(int nodes, std::vector<Edge> edges);

  /// A_n, D_n, E_6, E_7, E_8; other families are not simply laced.
  static DynkinDiagram of(const LieType& type);

  int node_count() const noexcept { return nodes_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const std::vector<int>& neighbors(int node) const;
  bool adjacent(int a, int b) const;

 private:
  int nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;  // index 0 unused
};

enum class ComponentFamily { A, D, E };

struct SimpleComponent {
  ComponentFamily family;
  int rank;
  friend bool operator==(const SimpleComponent&, const SimpleComponent&) = default;
};

/// Multiset of simple components of a sub-diagram, e.g. "A_3 + A_2 + A_1".
class ComponentLabel {
 public:
  ComponentLabel() = default;
  explicit ComponentLabel(std::vector<SimpleComponent> components);

  /// Inverse of render(); "Triv." is the empty label.
  static ComponentLabel parse(std::string_view text);

  std::span<const SimpleComponent> components() const noexcept { return components_; }
  bool empty() const noexcept { return components_.empty(); }
  int total_rank() const noexcept;

  /// Rank descending, then family E, D, A; repeats collapse to "2A_2".
  std::string render() const;

  friend bool operator==(const ComponentLabel&, const ComponentLabel&) = default;

 private:
  std::vector<SimpleComponent> components_;  // canonical order
};

/// Classify the induced sub-diagram on kept_nodes into ADE components.
/// Throws DataIntegrityError if a component is not of ADE shape.
ComponentLabel classify_subdiagram(const DynkinDiagram& diagram, std::span<const int> kept_nodes);

}  // namespace nilorb

#endif  // NILORB_DYNKIN_HPP

#include "nilorb/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "nilorb/error.hpp"

namespace nilorb {

DynkinDiagram::DynkinDiagram(int nodes, std::vector<Edge> edges)
    : nodes_(nodes), edges_(std::move(edges)), adjacency_(static_cast<std::size_t>(nodes) + 1) {
  if (nodes < 1) throw InputError("Dynkin diagram needs at least one node");
  if (static_cast<int>(edges_.size()) != nodes - 1) {
    throw DataIntegrityError("Dynkin diagram on " + std::to_string(nodes) + " nodes must have " +
                             std::to_string(nodes - 1) + " edges");
  }
  for (auto& [a, b] : edges_) {
    if (a < 1 || a > nodes || b < 1 || b > nodes || a == b) {
      throw DataIntegrityError("bad Dynkin edge " + std::to_string(a) + "-" + std::to_string(b));
    }
    if (a > b) std::swap(a, b);
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());

  // n-1 edges plus connectivity makes a tree.
  std::vector<int> parent(static_cast<std::size_t>(nodes) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges_) {
    int ra = find(a), rb = find(b);
    if (ra == rb) throw DataIntegrityError("Dynkin diagram has a cycle");
    parent[ra] = rb;
  }
  for (int v = 1; v <= nodes; ++v) {
    if (adjacency_[v].size() > 3) {
      throw DataIntegrityError("Dynkin node " + std::to_string(v) + " has degree > 3");
    }
  }
}

DynkinDiagram DynkinDiagram::of(const LieType& type) {
  const int n = type.rank();
  std::vector<Edge> edges;
  switch (type.family()) {
    case Family::A:
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 2, n);
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8:
      edges = {{1, 3}, {3, 4}, {4, 5}, {2, 4}};
      for (int i = 5; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    default:
      throw UnsupportedFamilyError(type.name() + " is not simply laced");
  }
  return DynkinDiagram(n, std::move(edges));
}

const std::vector<int>& DynkinDiagram::neighbors(int node) const {
  if (node < 1 || node > nodes_) throw InputError("node " + std::to_string(node) + " out of range");
  return adjacency_[node];
}

bool DynkinDiagram::adjacent(int a, int b) const {
  const auto& adj = neighbors(a);
  return std::binary_search(adj.begin(), adj.end(), b);
}

namespace {

int family_order(ComponentFamily f) {
  switch (f) {
    case ComponentFamily::E: return 0;
    case ComponentFamily::D: return 1;
    case ComponentFamily::A: return 2;
  }
  return 3;
}

char family_letter(ComponentFamily f) {
  switch (f) {
    case ComponentFamily::A: return 'A';
    case ComponentFamily::D: return 'D';
    case ComponentFamily::E: return 'E';
  }
  return '?';
}

}  // namespace

ComponentLabel::ComponentLabel(std::vector<SimpleComponent> components)
    : components_(std::move(components)) {
  std::sort(components_.begin(), components_.end(), [](const auto& a, const auto& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    return family_order(a.family) < family_order(b.family);
  });
}

ComponentLabel ComponentLabel::parse(std::string_view text) {
  if (text == "Triv." || text.empty()) return {};
  std::vector<SimpleComponent> out;
  std::string s(text);
  std::erase(s, ' ');
  std::stringstream ss(s);
  std::string term;
  while (std::getline(ss, term, '+')) {
    std::size_t i = 0;
    int coeff = 0;
    while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) {
      coeff = coeff * 10 + (term[i++] - '0');
    }
    if (coeff == 0) coeff = 1;
    if (i + 2 >= term.size()) throw InputError("bad component '" + term + "'");
    ComponentFamily fam;
    switch (term[i]) {
      case 'A': fam = ComponentFamily::A; break;
      case 'D': fam = ComponentFamily::D; break;
      case 'E': fam = ComponentFamily::E; break;
      default: throw InputError("bad component family in '" + term + "'");
    }
    if (term[i + 1] != '_') throw InputError("expected '_' in '" + term + "'");
    int rank = 0;
    for (std::size_t k = i + 2; k < term.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(term[k]))) {
        throw InputError("bad component rank in '" + term + "'");
      }
      rank = rank * 10 + (term[k] - '0');
    }
    if (rank < 1) throw InputError("bad component rank in '" + term + "'");
    for (int c = 0; c < coeff; ++c) out.push_back({fam, rank});
  }
  return ComponentLabel(std::move(out));
}

int ComponentLabel::total_rank() const noexcept {
  int r = 0;
  for (const auto& c : components_) r += c.rank;
  return r;
}

std::string ComponentLabel::render() const {
  if (components_.empty()) return "Triv.";
  std::string out;
  for (std::size_t i = 0; i < components_.size();) {
    std::size_t j = i;
    while (j < components_.size() && components_[j] == components_[i]) ++j;
    if (!out.empty()) out += " + ";
    if (j - i > 1) out += std::to_string(j - i);
    out += family_letter(components_[i].family);
    out += '_';
    out += std::to_string(components_[i].rank);
    i = j;
  }
  return out;
}

namespace {

SimpleComponent classify_tree(const DynkinDiagram& d, const std::vector<int>& nodes,
                              const std::vector<char>& kept) {
  const int k = static_cast<int>(nodes.size());
  auto degree = [&](int v) {
    int deg = 0;
    for (int u : d.neighbors(v)) deg += kept[u];
    return deg;
  };

  int branch = 0;
  for (int v : nodes) {
    int deg = degree(v);
    if (deg > 3) throw DataIntegrityError("sub-diagram node of degree > 3");
    if (deg == 3) {
      if (branch != 0) throw DataIntegrityError("sub-diagram has two branch nodes; not of ADE type");
      branch = v;
    }
  }
  if (branch == 0) return {ComponentFamily::A, k};

  std::vector<int> arms;
  for (int start : d.neighbors(branch)) {
    if (!kept[start]) continue;
    int len = 1, prev = branch, cur = start;
    for (;;) {
      int next = 0;
      for (int u : d.neighbors(cur)) {
        if (kept[u] && u != prev) next = u;
      }
      if (next == 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {ComponentFamily::D, arms[2] + 3};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
    return {ComponentFamily::E, arms[2] + 4};
  }
  throw DataIntegrityError("sub-diagram arms (" + std::to_string(arms[0]) + "," +
                           std::to_string(arms[1]) + "," + std::to_string(arms[2]) +
                           ") are not of ADE type");
}

}  // namespace

ComponentLabel classify_subdiagram(const DynkinDiagram& diagram, std::span<const int> kept_nodes) {
  const int n = diagram.node_count();
  std::vector<char> kept(static_cast<std::size_t>(n) + 1, 0);
  for (int v : kept_nodes) {
    if (v < 1 || v > n) throw InputError("kept node " + std::to_string(v) + " not in diagram");
    kept[v] = 1;
  }

  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<SimpleComponent> components;
  for (int v = 1; v <= n; ++v) {
    if (!kept[v] || seen[v]) continue;
    std::vector<int> nodes, stack{v};
    seen[v] = 1;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      nodes.push_back(cur);
      for (int u : diagram.neighbors(cur)) {
        if (kept[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    components.push_back(classify_tree(diagram, nodes, kept));
  }
  return ComponentLabel(std::move(components));
}

}  // namespace nilorb

#include "nilorb/springer.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <future>
#include <numeric>
#include <thread>

#include "nilorb/combinatorics.hpp"
#include "nilorb/error.hpp"
#include "nilorb/orbit_invariants.hpp"

namespace nilorb {

// ---------------------------------------------------------------------------
// Labeled diagrams

LabeledDiagram::LabeledDiagram(Partition shape, LabelScheme scheme, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), scheme_(scheme), rows_(std::move(rows)) {
  position_.assign(static_cast<std::size_t>(shape_.total()) + 1, {0, 0});
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      position_[rows_[r][c]] = {static_cast<int>(r) + 1, static_cast<int>(c) + 1};
    }
  }
}

LabeledDiagram LabeledDiagram::tymoczko(const Partition& shape) {
  const auto parts = shape.parts();
  std::vector<std::vector<int>> rows(parts.size());
  for (std::size_t r = 0; r < parts.size(); ++r) rows[r].resize(static_cast<std::size_t>(parts[r]));
  int label = 1;
  for (int col = 0; col < shape.largest(); ++col) {
    for (std::size_t r = parts.size(); r-- > 0;) {
      if (parts[r] > col) rows[r][col] = label++;
    }
  }
  return LabeledDiagram(shape, LabelScheme::tymoczko, std::move(rows));
}

LabeledDiagram LabeledDiagram::standard(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  int label = 1;
  for (int len : shape.parts()) {
    std::vector<int> row(static_cast<std::size_t>(len));
    std::iota(row.begin(), row.end(), label);
    label += len;
    rows.push_back(std::move(row));
  }
  return LabeledDiagram(shape, LabelScheme::standard, std::move(rows));
}

int LabeledDiagram::row_of(int label) const {
  if (label < 1 || label > size()) throw InputError("label out of range");
  return position_[label].first;
}

int LabeledDiagram::col_of(int label) const {
  if (label < 1 || label > size()) throw InputError("label out of range");
  return position_[label].second;
}

std::vector<std::pair<int, int>> LabeledDiagram::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c + 1 < row.size(); ++c) out.emplace_back(row[c], row[c + 1]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Permutations and roots

TableauPermutation::TableauPermutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  std::vector<char> seen(one_line_.size() + 1, 0);
  for (int v : one_line_) {
    if (v < 1 || v > size() || seen[v]) throw InputError("not a permutation of 1..m");
    seen[v] = 1;
  }
}

TableauPermutation TableauPermutation::identity(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  return TableauPermutation(std::move(v));
}

TableauPermutation TableauPermutation::inverse() const {
  std::vector<int> inv(one_line_.size());
  for (std::size_t i = 0; i < one_line_.size(); ++i) inv[one_line_[i] - 1] = static_cast<int>(i) + 1;
  return TableauPermutation(std::move(inv));
}

std::string TableauPermutation::cycle_notation() const {
  std::string out;
  std::vector<char> seen(one_line_.size() + 1, 0);
  for (int start = 1; start <= size(); ++start) {
    if (seen[start] || (*this)(start) == start) continue;
    out += '(';
    for (int cur = start; !seen[cur]; cur = (*this)(cur)) {
      if (cur != start) out += ' ';
      out += std::to_string(cur);
      seen[cur] = 1;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string render_roots(const RootSet& roots) {
  std::string s = "{";
  bool first = true;
  for (const auto& r : roots) {
    if (!first) s += ", ";
    first = false;
    s += "α_{" + std::to_string(r.i) + "," + std::to_string(r.j) + "}";
  }
  return s + "}";
}

namespace {

// Root sets on at most 31 letters as bit rows: bit j of row[i] marks alpha_{i,j}.
struct RootMask {
  std::array<std::uint32_t, 32> row{};

  int count() const {
    int n = 0;
    for (auto r : row) n += std::popcount(r);
    return n;
  }

  RootSet to_set() const {
    RootSet s;
    for (int i = 1; i < 32; ++i) {
      for (int j = i + 1; j < 32; ++j) {
        if (row[i] & (1u << j)) s.insert({i, j});
      }
    }
    return s;
  }
};

RootMask tym_pair_mask(const Partition& p) {
  RootMask x;
  for (auto [a, b] : LabeledDiagram::tymoczko(p).pairs()) x.row[a] |= 1u << b;
  return x;
}

// inv[k] = w^{-1}(k), 1-based; inv[0] unused.
RootMask inversion_mask(std::span<const int> inv, int m) {
  RootMask w;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      if (inv[i] > inv[j]) w.row[i] |= 1u << j;
    }
  }
  return w;
}

RootMask split_mask(const RootMask& w, const RootMask& x, int m) {
  RootMask out;
  for (int i = 1; i <= m; ++i) {
    std::uint32_t reach = 0;
    for (int k = i + 1; k <= m; ++k) {
      if (w.row[i] & (1u << k)) reach |= x.row[k];
      if (x.row[i] & (1u << k)) reach |= w.row[k];
    }
    out.row[i] = w.row[i] & reach;
  }
  return out;
}

void require_letters(int m) {
  if (m > 31) throw InputError("root sets are limited to 31 letters");
}

std::vector<int> padded_inverse(const TableauPermutation& w) {
  std::vector<int> inv(static_cast<std::size_t>(w.size()) + 1, 0);
  for (int i = 1; i <= w.size(); ++i) inv[w(i)] = i;
  return inv;
}

}  // namespace

TableauData labeled_diagrams(const Partition& p) {
  if (p.empty()) throw InputError("labeled_diagrams needs a nonempty partition");
  auto tym = LabeledDiagram::tymoczko(p);
  auto standard = LabeledDiagram::standard(p);
  std::vector<int> sigma(static_cast<std::size_t>(p.total()));
  for (std::size_t r = 0; r < standard.rows().size(); ++r) {
    for (std::size_t c = 0; c < standard.rows()[r].size(); ++c) {
      sigma[standard.rows()[r][c] - 1] = tym.rows()[r][c];
    }
  }
  return {std::move(tym), std::move(standard), TableauPermutation(std::move(sigma))};
}

IntMatrix pair_matrix(const LabeledDiagram& d) {
  IntMatrix m(static_cast<std::size_t>(d.size()));
  for (auto [a, b] : d.pairs()) m.add_unit(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  return m;
}

RootSet phi_x(const Partition& p) {
  require_letters(p.total());
  return tym_pair_mask(p).to_set();
}

RootSet phi_w(const TableauPermutation& w) {
  require_letters(w.size());
  return inversion_mask(padded_inverse(w), w.size()).to_set();
}

RootSet phi_w_x(const TableauPermutation& w, const Partition& p) {
  if (w.size() != p.total()) throw InputError("permutation size does not match partition total");
  require_letters(w.size());
  const auto inv = padded_inverse(w);
  return split_mask(inversion_mask(inv, w.size()), tym_pair_mask(p), w.size()).to_set();
}

bool is_nonempty_cell(const TableauPermutation& w, const Partition& p) {
  if (w.size() != p.total()) throw InputError("permutation size does not match partition total");
  const auto inv = padded_inverse(w);
  for (auto [a, b] : LabeledDiagram::tymoczko(p).pairs()) {
    if (inv[a] > inv[b]) return false;
  }
  return true;
}

int cell_dimension(const TableauPermutation& w, const Partition& p) {
  if (w.size() != p.total()) throw InputError("permutation size does not match partition total");
  require_letters(w.size());
  const auto inv = padded_inverse(w);
  const auto wm = inversion_mask(inv, w.size());
  return wm.count() - split_mask(wm, tym_pair_mask(p), w.size()).count();
}

int max_cell_dimension(const Partition& p) {
  int dim = 0;
  for (int h : conjugate_heights(p)) dim += h * (h - 1) / 2;
  if (p.empty()) return dim;

  const auto sigma = labeled_diagrams(p).sigma;
  if (const int at_sigma = cell_dimension(sigma, p); at_sigma != dim) {
    throw DataIntegrityError("sigma-cell of " + p.to_string() + " has dimension " +
                             std::to_string(at_sigma) + ", expected " + std::to_string(dim));
  }
  const int n = p.total() - 1;
  const std::int64_t codim = std::int64_t{n} * (n + 1) - orbit_dimension_typeA(n, p);
  if (codim != 2 * dim) {
    throw DataIntegrityError("orbit codimension of " + p.to_string() + " is " + std::to_string(codim) +
                             ", expected " + std::to_string(2 * dim));
  }
  return dim;
}

std::uint64_t Paving::cell_count() const noexcept {
  return std::accumulate(poincare.begin(), poincare.end(), std::uint64_t{0});
}

unsigned default_worker_count() {
  if (const char* env = std::getenv("NILORB_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 256) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct WorkerResult {
  std::vector<PavingCell> cells;
  std::vector<std::uint64_t> poincare;
};

// Cells whose w^{-1}(1) equals one of the given leading values.
WorkerResult enumerate_slice(const Partition& p, const std::vector<int>& leading, bool keep_cells) {
  const int m = p.total();
  const auto x = tym_pair_mask(p);
  const auto pairs = LabeledDiagram::tymoczko(p).pairs();

  WorkerResult out;
  out.poincare.assign(static_cast<std::size_t>(m) * (m - 1) / 2 + 1, 0);

  std::vector<int> inv(static_cast<std::size_t>(m) + 1);
  for (int lead : leading) {
    inv[1] = lead;
    std::vector<int> rest;
    for (int v = 1; v <= m; ++v) {
      if (v != lead) rest.push_back(v);
    }
    do {
      std::copy(rest.begin(), rest.end(), inv.begin() + 2);
      bool ok = true;
      for (auto [a, b] : pairs) {
        if (inv[a] > inv[b]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const auto wm = inversion_mask(inv, m);
      const int dim = wm.count() - split_mask(wm, x, m).count();
      ++out.poincare[static_cast<std::size_t>(dim)];
      if (keep_cells) {
        std::vector<int> w(static_cast<std::size_t>(m));
        for (int k = 1; k <= m; ++k) w[inv[k] - 1] = k;
        out.cells.push_back({TableauPermutation(std::move(w)), dim});
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return out;
}

}  // namespace

Paving enumerate_cells(const Partition& p, const EnumerationOptions& options) {
  if (options.bound < 1 || options.bound > kMaxEnumerationBound) {
    throw InputError("enumeration bound must be in [1, " + std::to_string(kMaxEnumerationBound) + "]");
  }
  if (p.total() > options.bound) {
    throw ResourceError("partition total " + std::to_string(p.total()) +
                        " exceeds the enumeration bound " + std::to_string(options.bound));
  }
  Paving paving;
  const int m = p.total();
  if (m == 0) {
    paving.poincare = {1};
    if (options.keep_cells) paving.cells.push_back({TableauPermutation::identity(0), 0});
    return paving;
  }

  const unsigned workers =
      std::min<unsigned>(options.workers ? options.workers : default_worker_count(),
                         static_cast<unsigned>(m));
  std::vector<std::vector<int>> slices(workers);
  for (int lead = 1; lead <= m; ++lead) slices[static_cast<std::size_t>(lead - 1) % workers].push_back(lead);

  std::vector<WorkerResult> results;
  if (workers == 1) {
    results.push_back(enumerate_slice(p, slices[0], options.keep_cells));
  } else {
    std::vector<std::future<WorkerResult>> futures;
    for (const auto& slice : slices) {
      futures.push_back(std::async(std::launch::async, enumerate_slice, std::cref(p), std::cref(slice),
                                   options.keep_cells));
    }
    for (auto& f : futures) results.push_back(f.get());
  }

  paving.poincare.assign(results.front().poincare.size(), 0);
  for (auto& r : results) {
    for (std::size_t d = 0; d < r.poincare.size(); ++d) paving.poincare[d] += r.poincare[d];
    std::move(r.cells.begin(), r.cells.end(), std::back_inserter(paving.cells));
  }
  while (paving.poincare.size() > 1 && paving.poincare.back() == 0) paving.poincare.pop_back();
  std::sort(paving.cells.begin(), paving.cells.end(), [](const PavingCell& a, const PavingCell& b) {
    if (a.dimension != b.dimension) return a.dimension < b.dimension;
    return a.w < b.w;
  });
  return paving;
}

int CoverComponents::deck_action(int g, int component) const {
  if (component < 0 || component >= count) throw InputError("component id out of range");
  return ((component + g) % count + count) % count;
}

CoverComponents graham_cover_components(const Partition& p) {
  if (p.empty()) throw InputError("graham_cover_components needs a nonempty partition");
  CoverComponents out;
  out.count = gcd_of_parts(p);
  out.component_ids.resize(static_cast<std::size_t>(out.count));
  std::iota(out.component_ids.begin(), out.component_ids.end(), 0);
  return out;
}

}  // namespace nilorb

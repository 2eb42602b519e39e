#include "nilorb/subset.hpp"

#include <algorithm>
#include <charconv>

#include "nilorb/error.hpp"

namespace nilorb {

namespace {

void check_rank(int rank) {
  if (rank < 0 || rank > SubsetJ::kMaxRank) {
    throw InputError("subset universe rank must be in [0, " + std::to_string(SubsetJ::kMaxRank) +
                     "], got " + std::to_string(rank));
  }
}

}  // namespace

SubsetJ::SubsetJ(int rank) : rank_(rank) { check_rank(rank); }

SubsetJ::SubsetJ(std::vector<int> elements, int rank) : elements_(std::move(elements)), rank_(rank) {
  check_rank(rank);
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw InputError("J has a repeated element");
  }
  for (int e : elements_) {
    if (e < 1 || e > rank) {
      throw InputError("J element " + std::to_string(e) + " out of range [1, " + std::to_string(rank) +
                       "]");
    }
  }
}

SubsetJ SubsetJ::from_mask(std::uint32_t mask, int rank) {
  check_rank(rank);
  std::vector<int> e;
  for (int i = 1; i <= rank; ++i) {
    if (mask & (1u << (i - 1))) e.push_back(i);
  }
  if (rank < 32 && (mask >> rank) != 0) throw InputError("mask has bits beyond rank");
  return SubsetJ(std::move(e), rank);
}

SubsetJ SubsetJ::full(int rank) {
  std::vector<int> e(rank);
  for (int i = 0; i < rank; ++i) e[i] = i + 1;
  return SubsetJ(std::move(e), rank);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

SubsetJ SubsetJ::parse(std::string_view text, int rank) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '{' && text.back() == '}') {
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<int> e;
  if (text.empty()) return SubsetJ(std::move(e), rank);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = trim(text.substr(pos, comma - pos));
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InputError("J: '" + std::string(tok) + "' is not an integer");
    }
    if (!e.empty() && value <= e.back()) {
      throw InputError("J: elements must be strictly ascending (" + std::to_string(e.back()) + " then " +
                       std::to_string(value) + ")");
    }
    e.push_back(value);
    pos = comma + 1;
  }
  return SubsetJ(std::move(e), rank);
}

bool SubsetJ::contains(int i) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), i);
}

std::uint32_t SubsetJ::mask() const noexcept {
  std::uint32_t m = 0;
  for (int e : elements_) m |= 1u << (e - 1);
  return m;
}

std::vector<int> SubsetJ::complement() const {
  std::vector<int> out;
  for (int i = 1; i <= rank_; ++i) {
    if (!contains(i)) out.push_back(i);
  }
  return out;
}

std::string SubsetJ::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(elements_[i]);
  }
  return s + "}";
}

}  // namespace nilorb

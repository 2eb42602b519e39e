#include "nilorb/partition.hpp"

#include <algorithm>
#include <charconv>

#include "nilorb/error.hpp"

namespace nilorb {

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw InputError("partition parts must be nonnegative, got " + std::to_string(p));
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  parts_ = std::move(parts);
  for (int p : parts_) total_ += p;

  for (int d : distinct_parts()) {
    int m = multiplicity(d);
    if (d % 2 != 0 || m % 2 != 0) very_even_ = false;
    if (d % 2 != 0 && m != 1) rather_odd_ = false;
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = trim(text.substr(pos, comma - pos));
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InputError("partition: '" + std::string(tok) + "' is not an integer");
    }
    if (value <= 0) throw InputError("partition: parts must be positive, got " + std::to_string(value));
    if (!parts.empty() && value > parts.back()) {
      throw InputError("partition: parts must be weakly decreasing (" + std::to_string(parts.back()) +
                       " then " + std::to_string(value) + ")");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int part) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::vector<int> Partition::distinct_parts() const {
  std::vector<int> out;
  std::unique_copy(parts_.begin(), parts_.end(), std::back_inserter(out));
  return out;
}

Partition Partition::conjugate() const {
  std::vector<int> cols;
  for (int j = 1; j <= largest(); ++j) {
    cols.push_back(static_cast<int>(
        std::count_if(parts_.begin(), parts_.end(), [j](int p) { return p >= j; })));
  }
  return Partition(std::move(cols));
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

namespace {

void extend(int remaining, int cap, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(remaining, cap); k >= 1; --k) {
    prefix.push_back(k);
    extend(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int m) {
  if (m < 0) throw InputError("cannot partition a negative integer");
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend(m, m, prefix, out);
  return out;
}

}  // namespace nilorb

#include "nilorb/lie_type.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "nilorb/error.hpp"

namespace nilorb {

namespace {

int fixed_rank(Family f) {
  switch (f) {
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::G2: return 2;
    default: return 0;
  }
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return "?";
}

LieType::LieType(Family family, int rank) : family_(family), rank_(rank) {
  if (int fixed = fixed_rank(family); fixed != 0) {
    if (rank != fixed) {
      throw InputError("type " + std::string(family_name(family)) + " has rank " +
                       std::to_string(fixed) + ", got " + std::to_string(rank));
    }
    return;
  }
  if (rank < 1) throw InputError("rank must be >= 1, got " + std::to_string(rank));
  if ((family == Family::B || family == Family::C) && rank < 2) {
    throw InputError("types B and C require rank >= 2");
  }
  if (family == Family::D && rank < 3) throw InputError("type D requires rank >= 3");
}

LieType LieType::exceptional(Family family) {
  int fixed = fixed_rank(family);
  if (fixed == 0) throw InputError("classical family needs an explicit rank");
  return LieType(family, fixed);
}

LieType LieType::parse(std::string_view family, std::optional<int> rank) {
  std::string key(family);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  key.erase(std::remove(key.begin(), key.end(), '_'), key.end());

  static constexpr Family all[] = {Family::A,  Family::B,  Family::C,  Family::D, Family::E6,
                                   Family::E7, Family::E8, Family::F4, Family::G2};
  for (Family f : all) {
    if (key != family_name(f)) continue;
    if (int fixed = fixed_rank(f); fixed != 0) return LieType(f, rank.value_or(fixed));
    if (!rank) throw InputError("type " + key + " requires --rank");
    return LieType(f, *rank);
  }
  throw InputError("unknown Lie type '" + std::string(family) + "'");
}

bool LieType::is_classical() const noexcept {
  return family_ == Family::A || family_ == Family::B || family_ == Family::C ||
         family_ == Family::D;
}

bool LieType::is_simply_laced() const noexcept {
  return family_ == Family::A || family_ == Family::D || family_ == Family::E6 ||
         family_ == Family::E7 || family_ == Family::E8;
}

int LieType::matrix_size() const {
  switch (family_) {
    case Family::A: return rank_ + 1;
    case Family::B: return 2 * rank_ + 1;
    case Family::C:
    case Family::D: return 2 * rank_;
    default:
      throw UnsupportedFamilyError("no classical matrix representation for " + name());
  }
}

std::string LieType::name() const {
  switch (family_) {
    case Family::E6: return "E_6";
    case Family::E7: return "E_7";
    case Family::E8: return "E_8";
    case Family::F4: return "F_4";
    case Family::G2: return "G_2";
    default: return std::string(family_name(family_)) + "_" + std::to_string(rank_);
  }
}

}  // namespace nilorb

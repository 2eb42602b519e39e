#include "exceptional_data.hpp"

#include <array>

namespace nilorb::detail {

namespace {

using enum GroupTag;

constexpr std::array<RawRecord, 17> kE6{{
    {"Triv.", "123456", one, one},
    {"A_1", "12345 12346 12356 12456 13456 23456", one, one},
    {"2A_1", "1235 1245 1246 1256 1345 1346 1456 2345 2346 2356 3456", one, one},
    {"3A_1", "145 146 235 345 346", one, one},
    {"A_2", "1234 1236 1356 2456", one, s2},
    {"A_2 + A_1", "124 125 134 135 234 236 245 246 356 456", one, one},
    {"2A_2", "24", z3, z3},
    {"A_2 + 2A_1", "14 34 35 45 46", one, one},
    {"A_3", "123 126 136 156 256", one, one},
    {"2A_2 + A_1", "4", z3, z3},
    {"A_3 + A_1", "15 23 25 36", one, one},
    {"A_4", "12 13 26 56", one, one},
    {"D_4", "16", one, one},
    {"A_4 + A_1", "3 5", one, one},
    {"A_5", "2", z3, z3},
    {"D_5", "1 6", one, one},
    {"E_6", "-", z3, z3},
}};

constexpr std::array<RawRecord, 32> kE7{{
    {"Triv.", "1234567", one, one},
    {"A_1", "123456 123457 123467 123567 124567 134567 234567", one, one},
    {"2A_1",
     "12346 12356 12357 12456 12457 12467 13456 13457 13467 14567 23456 23457 23467 24567 34567",
     one, one},
    {"(3A_1)''", "1346", z2, z2},
    {"(3A_1)'", "1246 1456 1457 1467 2346 2356 2357 3456 3457 3467", one, one},
    {"A_2", "12345 12347 12367 12567 13567", one, s2},
    {"4A_1", "146 346", z2, z2},
    {"A_2 + A_1",
     "1235 1236 1245 1247 1256 1257 1345 1347 1356 1357 1567 2345 2347 2367 2456 2457 2467 3467 "
     "4567",
     one, s2},
    {"A_2 + 2A_1", "145 147 235 236 246 345 347 356 357 456 457 467", one, one},
    {"2A_2", "245 135 247 125", one, one},
    {"A_2 + 3A_1", "46", z2, z2},
    {"A_3", "1234 1237 1267 1367 2567", one, one},
    {"(A_3 + A_1)''", "134 136", z2, z2},
    {"2A_2 + A_1", "35 45 47", one, one},
    {"(A_3 + A_1)'", "156 157 234 237 256 257 367 124 126", one, one},
    {"A_3 + 2A_1", "14 34 36", z2, z2},
    {"D_4", "167", one, one},
    {"A_3 + A_2", "15 24 25", one, s2},
    {"A_3 + A_2 + A_1", "4", z2, z2},
    {"A_4", "127 137 267 567 123", one, s2},
    {"(A_5)''", "13", z2, z2},
    {"D_4 + A_1", "16", z2, z2},
    {"A_4 + A_1", "23 26 37 56 57", one, s2},
    {"A_4 + A_2", "5", one, one},
    {"(A_5)'", "12 27", one, one},
    {"A_5 + A_1", "3", z2, z2},
    {"D_5", "17 67", one, one},
    {"A_6", "2", one, one},
    {"D_5 + A_1", "6", z2, z2},
    {"D_6", "1", z2, z2},
    {"E_6", "7", one, one},
    {"E_7", "-", z2, z2},
}};

}  // namespace

std::span<const RawRecord> printed_e6() { return kE6; }
std::span<const RawRecord> printed_e7() { return kE7; }

}  // namespace nilorb::detail

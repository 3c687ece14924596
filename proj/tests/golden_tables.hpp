#pragma once

// Reference values: the I_k lists for n = 13 and n = 14, and the
// J_1 / J_3 tables for M = 9, k = 3 (m = 26).

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shuffleworks::testing {

inline constexpr std::array<std::string_view, 13> kCircularInvolutions13 = {
    "(0)(1,12)(2,11)(3,10)(4,9)(5,8)(6,7)",  "(0,1)(2,12)(3,11)(4,10)(5,9)(6,8)(7)",
    "(0,2)(1)(3,12)(4,11)(5,10)(6,9)(7,8)",  "(0,3)(1,2)(4,12)(5,11)(6,10)(7,9)(8)",
    "(0,4)(1,3)(2)(5,12)(6,11)(7,10)(8,9)",  "(0,5)(1,4)(2,3)(6,12)(7,11)(8,10)(9)",
    "(0,6)(1,5)(2,4)(3)(7,12)(8,11)(9,10)",  "(0,7)(1,6)(2,5)(3,4)(8,12)(9,11)(10)",
    "(0,8)(1,7)(2,6)(3,5)(4)(9,12)(10,11)",  "(0,9)(1,8)(2,7)(3,6)(4,5)(10,12)(11)",
    "(0,10)(1,9)(2,8)(3,7)(4,6)(5)(11,12)",  "(0,11)(1,10)(2,9)(3,8)(4,7)(5,6)(12)",
    "(0,12)(1,11)(2,10)(3,9)(4,8)(5,7)(6)",
};

inline constexpr std::array<std::string_view, 14> kCircularInvolutions14 = {
    "(0)(1,13)(2,12)(3,11)(4,10)(5,9)(6,8)(7)",  "(0,1)(2,13)(3,12)(4,11)(5,10)(6,9)(7,8)",
    "(0,2)(1)(3,13)(4,12)(5,11)(6,10)(7,9)(8)",  "(0,3)(1,2)(4,13)(5,12)(6,11)(7,10)(8,9)",
    "(0,4)(1,3)(2)(5,13)(6,12)(7,11)(8,10)(9)",  "(0,5)(1,4)(2,3)(6,13)(7,12)(8,11)(9,10)",
    "(0,6)(1,5)(2,4)(3)(7,13)(8,12)(9,11)(10)",  "(0,7)(1,6)(2,5)(3,4)(8,13)(9,12)(10,11)",
    "(0,8)(1,7)(2,6)(3,5)(4)(9,13)(10,12)(11)",  "(0,9)(1,8)(2,7)(3,6)(4,5)(10,13)(11,12)",
    "(0,10)(1,9)(2,8)(3,7)(4,6)(5)(11,13)(12)",  "(0,11)(1,10)(2,9)(3,8)(4,7)(5,6)(12,13)",
    "(0,12)(1,11)(2,10)(3,9)(4,8)(5,7)(6)(13)",  "(0,13)(1,12)(2,11)(3,10)(4,9)(5,8)(6,7)",
};

/// [x, J_1(x)] for x = 1..25, m = 26.
inline constexpr std::array<std::pair<unsigned, unsigned>, 25> kJ1Table = {{
    {1, 1},   {2, 2},   {3, 9},   {4, 14},  {5, 21},  {6, 18},  {7, 15},  {8, 20},  {9, 3},
    {10, 16}, {11, 19}, {12, 22}, {13, 13}, {14, 4},  {15, 7},  {16, 10}, {17, 23}, {18, 6},
    {19, 11}, {20, 8},  {21, 5},  {22, 12}, {23, 17}, {24, 24}, {25, 25},
}};

/// [x, J_3(x)] for x = 1..25, m = 26.
inline constexpr std::array<std::pair<unsigned, unsigned>, 25> kJ3Table = {{
    {1, 3},   {2, 6},   {3, 1},   {4, 16},  {5, 11},  {6, 2},   {7, 19},  {8, 8},   {9, 9},
    {10, 22}, {11, 5},  {12, 14}, {13, 13}, {14, 12}, {15, 21}, {16, 4},  {17, 17}, {18, 18},
    {19, 7},  {20, 24}, {21, 15}, {22, 10}, {23, 25}, {24, 20}, {25, 23},
}};

/// Parses "(0)(1,12)(2,11)" into cycles {{0},{1,12},{2,11}}.
inline std::vector<std::vector<std::size_t>> parse_cycle_list(std::string_view text) {
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<std::size_t> current;
  std::size_t value = 0;
  bool in_number = false;
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      value = value * 10 + static_cast<std::size_t>(c - '0');
      in_number = true;
      continue;
    }
    if (in_number) {
      current.push_back(value);
      value = 0;
      in_number = false;
    }
    if (c == ')') {
      cycles.push_back(current);
      current.clear();
    }
  }
  return cycles;
}

}  // namespace shuffleworks::testing

// Copyright 2026 The qsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <array>
#include <cstdint>

// Reference gate counts, indexed [l - 3][n - 4]; 0 marks an empty cell.
namespace qsynth::testing {

inline constexpr std::array<std::array<std::int64_t, 9>, 10> kCnotTable{{
    {112, 480, 2000, 8176, 33072, 133040, 533680, 2137776, 8557232},
    {118, 480, 1976, 8056, 32568, 131000, 525496, 2105016, 8426168},
    {0, 494, 1984, 8040, 32456, 130504, 523464, 2096840, 8393416},
    {0, 0, 2014, 8064, 32456, 130408, 522984, 2094824, 8385256},
    {0, 0, 0, 8126, 32512, 130440, 522920, 2094376, 8383272},
    {0, 0, 0, 0, 32638, 130560, 523016, 2094376, 8382888},
    {0, 0, 0, 0, 0, 130814, 523264, 2094600, 8383016},
    {0, 0, 0, 0, 0, 0, 523774, 2095104, 8383496},
    {0, 0, 0, 0, 0, 0, 0, 2096126, 8384512},
    {0, 0, 0, 0, 0, 0, 0, 0, 8386558},
}};

inline constexpr std::array<std::array<std::int64_t, 9>, 10> kOneQubitTable{{
    {138, 586, 2426, 9882, 39898, 160346, 642906, 2574682, 10304858},
    {131, 537, 2209, 8993, 36321, 146017, 585569, 2345313, 9387361},
    {0, 522, 2104, 8528, 34416, 138352, 554864, 2222448, 8895856},
    {0, 0, 2073, 8311, 33455, 134415, 539023, 2158991, 8641935},
    {0, 0, 0, 8248, 33014, 132462, 531022, 2126798, 8512974},
    {0, 0, 0, 0, 32887, 131573, 527085, 2110669, 8448077},
    {0, 0, 0, 0, 0, 131318, 525300, 2102764, 8415692},
    {0, 0, 0, 0, 0, 0, 524789, 2099187, 8399851},
    {0, 0, 0, 0, 0, 0, 0, 2098164, 8392690},
    {0, 0, 0, 0, 0, 0, 0, 0, 8390643},
}};

inline constexpr std::array<std::array<std::int64_t, 9>, 10> kTotalTable{{
    {250, 1066, 4426, 18058, 72970, 293386, 1176586, 4712458, 18862090},
    {249, 1017, 4185, 17049, 68889, 277017, 1111065, 4450329, 17813529},
    {0, 1016, 4088, 16568, 66872, 268856, 1078328, 4319288, 17289272},
    {0, 0, 4087, 16375, 65911, 264823, 1062007, 4253815, 17027191},
    {0, 0, 0, 16374, 65526, 262902, 1053942, 4221174, 16896246},
    {0, 0, 0, 0, 65525, 262133, 1050101, 4205045, 16830965},
    {0, 0, 0, 0, 0, 262132, 1048564, 4197364, 16798708},
    {0, 0, 0, 0, 0, 0, 1048563, 4194291, 16783347},
    {0, 0, 0, 0, 0, 0, 0, 4194290, 16777202},
    {0, 0, 0, 0, 0, 0, 0, 0, 16777201},
}};

// QSD rows for n = 4..12.
inline constexpr std::array<std::int64_t, 9> kQsdCnot{100, 444, 1868, 7660, 31020,
                                                      124844, 500908, 2006700, 8032940};
inline constexpr std::array<std::int64_t, 9> kQsdOneQubit{157, 677, 2805, 11413, 46037,
                                                          184917, 741205, 2967893, 11877717};
inline constexpr std::array<std::int64_t, 9> kQsdTotal{257, 1121, 4673, 19073, 77057,
                                                       309761, 1242113, 4974593, 19910657};

// Comparison rows for n = 2..10.
inline constexpr std::array<std::int64_t, 9> kCsdOriginalCnot{8, 48, 224, 960, 3968,
                                                              16128, 65024, 261120, 1046528};
inline constexpr std::array<std::int64_t, 9> kCsdImprovedCnot{4, 26, 118, 494, 2014,
                                                              8126, 32638, 130814, 523774};
inline constexpr std::array<std::int64_t, 9> kCsdImprovedOneQubit{7, 32, 131, 522, 2073,
                                                                  8248, 32887, 131318, 524789};
inline constexpr std::array<std::int64_t, 9> kQsdCitedCnot{3, 20, 100, 444, 1868,
                                                           7660, 31020, 124844, 500908};
inline constexpr std::array<std::int64_t, 9> kQsdCitedOneQubit{7, 33, 157, 677, 2805,
                                                               11413, 46037, 184917, 741205};
inline constexpr std::array<std::int64_t, 9> kLowerBound{3, 14, 61, 252, 1020,
                                                         4091, 16378, 65529, 262137};
// BQD at the chosen level, n = 4..10.
inline constexpr std::array<std::int64_t, 7> kBqdBestCnot{112, 480, 1976, 8040, 32456,
                                                          130408, 522920};
inline constexpr std::array<std::int64_t, 7> kBqdBestOneQubit{138, 537, 2209, 8528, 33455,
                                                              134415, 531022};

}  // namespace qsynth::testing

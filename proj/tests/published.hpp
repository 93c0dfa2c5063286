#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Published values for the instance (5, 2, 2): the first five rows of the triangle and
// the first-appearance rows a(x) for every x in 2..99 that is not a multiple of 5.
namespace chutes::published {

inline const std::vector<std::vector<const char*>> kFirstFiveRows{
    {"2"},
    {"49"},
    {"7", "2916"},
    {"54", "144", "8532241"},
    {"12", "2921", "3481", "22201", "72799221804516"},
};

inline const std::vector<std::pair<std::uint64_t, std::uint64_t>> kFirstAppearances{
    {2, 1},   {3, 104}, {4, 122}, {6, 130}, {7, 3},   {8, 9},   {9, 103}, {11, 119},
    {12, 5},  {13, 11}, {14, 105}, {16, 121}, {17, 7},  {18, 13}, {19, 107}, {21, 123},
    {22, 9},  {23, 15}, {24, 109}, {26, 125}, {27, 11}, {28, 17}, {29, 111}, {31, 127},
    {32, 13}, {33, 19}, {34, 113}, {36, 129}, {37, 15}, {38, 21}, {39, 115}, {41, 131},
    {42, 17}, {43, 23}, {44, 117}, {46, 133}, {47, 19}, {48, 25}, {49, 2},  {51, 135},
    {52, 21}, {53, 27}, {54, 4},  {56, 92},  {57, 23}, {58, 29}, {59, 6},  {61, 94},
    {62, 25}, {63, 31}, {64, 8},  {66, 96},  {67, 27}, {68, 33}, {69, 10}, {71, 98},
    {72, 29}, {73, 35}, {74, 12}, {76, 100}, {77, 31}, {78, 37}, {79, 14}, {81, 102},
    {82, 33}, {83, 39}, {84, 16}, {86, 104}, {87, 35}, {88, 41}, {89, 18}, {91, 106},
    {92, 37}, {93, 43}, {94, 20}, {96, 108}, {97, 39}, {98, 45}, {99, 22},
};

}  // namespace chutes::published

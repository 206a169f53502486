#pragma once

// Golden values for the Peres ray structure, computed independently with
// exact Fraction-pair arithmetic and frozen here. Ray strings are sorted
// canonical serializations; bases are index triples into the sorted
// 57-ray list, each triple sorted, triples sorted lexicographically.

#include <array>
#include <string_view>

namespace golden {

inline constexpr int kOrthogonalEdges57 = 120;
inline constexpr int kOrthogonalEdges33 = 72;

inline constexpr std::array<std::string_view, 33> kPeres33Sorted = {
    "0/1+0/1√2 0/1+0/1√2 1/1+0/1√2",
    "0/1+0/1√2 1/1+0/1√2 -1/1+0/1√2",
    "0/1+0/1√2 1/1+0/1√2 0/1+0/1√2",
    "0/1+0/1√2 1/1+0/1√2 0/1+1/1√2",
    "0/1+0/1√2 1/1+0/1√2 0/1+1/2√2",
    "0/1+0/1√2 1/1+0/1√2 0/1-1/1√2",
    "0/1+0/1√2 1/1+0/1√2 0/1-1/2√2",
    "0/1+0/1√2 1/1+0/1√2 1/1+0/1√2",
    "1/1+0/1√2 -1/1+0/1√2 0/1+0/1√2",
    "1/1+0/1√2 -1/1+0/1√2 0/1+1/1√2",
    "1/1+0/1√2 -1/1+0/1√2 0/1-1/1√2",
    "1/1+0/1√2 0/1+0/1√2 -1/1+0/1√2",
    "1/1+0/1√2 0/1+0/1√2 0/1+0/1√2",
    "1/1+0/1√2 0/1+0/1√2 0/1+1/1√2",
    "1/1+0/1√2 0/1+0/1√2 0/1+1/2√2",
    "1/1+0/1√2 0/1+0/1√2 0/1-1/1√2",
    "1/1+0/1√2 0/1+0/1√2 0/1-1/2√2",
    "1/1+0/1√2 0/1+0/1√2 1/1+0/1√2",
    "1/1+0/1√2 0/1+1/1√2 -1/1+0/1√2",
    "1/1+0/1√2 0/1+1/1√2 0/1+0/1√2",
    "1/1+0/1√2 0/1+1/1√2 1/1+0/1√2",
    "1/1+0/1√2 0/1+1/2√2 0/1+0/1√2",
    "1/1+0/1√2 0/1+1/2√2 0/1+1/2√2",
    "1/1+0/1√2 0/1+1/2√2 0/1-1/2√2",
    "1/1+0/1√2 0/1-1/1√2 -1/1+0/1√2",
    "1/1+0/1√2 0/1-1/1√2 0/1+0/1√2",
    "1/1+0/1√2 0/1-1/1√2 1/1+0/1√2",
    "1/1+0/1√2 0/1-1/2√2 0/1+0/1√2",
    "1/1+0/1√2 0/1-1/2√2 0/1+1/2√2",
    "1/1+0/1√2 0/1-1/2√2 0/1-1/2√2",
    "1/1+0/1√2 1/1+0/1√2 0/1+0/1√2",
    "1/1+0/1√2 1/1+0/1√2 0/1+1/1√2",
    "1/1+0/1√2 1/1+0/1√2 0/1-1/1√2",
};

inline constexpr std::array<std::string_view, 57> kPeres57Sorted = {
    "0/1+0/1√2 0/1+0/1√2 1/1+0/1√2",
    "0/1+0/1√2 1/1+0/1√2 -1/1+0/1√2",
    "0/1+0/1√2 1/1+0/1√2 0/1+0/1√2",
    "0/1+0/1√2 1/1+0/1√2 0/1+1/1√2",
    "0/1+0/1√2 1/1+0/1√2 0/1+1/2√2",
    "0/1+0/1√2 1/1+0/1√2 0/1-1/1√2",
    "0/1+0/1√2 1/1+0/1√2 0/1-1/2√2",
    "0/1+0/1√2 1/1+0/1√2 1/1+0/1√2",
    "1/1+0/1√2 -1/1+0/1√2 0/1+0/1√2",
    "1/1+0/1√2 -1/1+0/1√2 0/1+1/1√2",
    "1/1+0/1√2 -1/1+0/1√2 0/1-1/1√2",
    "1/1+0/1√2 -1/3+0/1√2 0/1+1/3√2",
    "1/1+0/1√2 -1/3+0/1√2 0/1-1/3√2",
    "1/1+0/1√2 -3/1+0/1√2 0/1+1/1√2",
    "1/1+0/1√2 -3/1+0/1√2 0/1-1/1√2",
    "1/1+0/1√2 0/1+0/1√2 -1/1+0/1√2",
    "1/1+0/1√2 0/1+0/1√2 0/1+0/1√2",
    "1/1+0/1√2 0/1+0/1√2 0/1+1/1√2",
    "1/1+0/1√2 0/1+0/1√2 0/1+1/2√2",
    "1/1+0/1√2 0/1+0/1√2 0/1-1/1√2",
    "1/1+0/1√2 0/1+0/1√2 0/1-1/2√2",
    "1/1+0/1√2 0/1+0/1√2 1/1+0/1√2",
    "1/1+0/1√2 0/1+1/1√2 -1/1+0/1√2",
    "1/1+0/1√2 0/1+1/1√2 -3/1+0/1√2",
    "1/1+0/1√2 0/1+1/1√2 0/1+0/1√2",
    "1/1+0/1√2 0/1+1/1√2 1/1+0/1√2",
    "1/1+0/1√2 0/1+1/1√2 3/1+0/1√2",
    "1/1+0/1√2 0/1+1/2√2 0/1+0/1√2",
    "1/1+0/1√2 0/1+1/2√2 0/1+1/2√2",
    "1/1+0/1√2 0/1+1/2√2 0/1+3/2√2",
    "1/1+0/1√2 0/1+1/2√2 0/1-1/2√2",
    "1/1+0/1√2 0/1+1/2√2 0/1-3/2√2",
    "1/1+0/1√2 0/1+1/3√2 -1/3+0/1√2",
    "1/1+0/1√2 0/1+1/3√2 1/3+0/1√2",
    "1/1+0/1√2 0/1+3/2√2 0/1+1/2√2",
    "1/1+0/1√2 0/1+3/2√2 0/1-1/2√2",
    "1/1+0/1√2 0/1-1/1√2 -1/1+0/1√2",
    "1/1+0/1√2 0/1-1/1√2 -3/1+0/1√2",
    "1/1+0/1√2 0/1-1/1√2 0/1+0/1√2",
    "1/1+0/1√2 0/1-1/1√2 1/1+0/1√2",
    "1/1+0/1√2 0/1-1/1√2 3/1+0/1√2",
    "1/1+0/1√2 0/1-1/2√2 0/1+0/1√2",
    "1/1+0/1√2 0/1-1/2√2 0/1+1/2√2",
    "1/1+0/1√2 0/1-1/2√2 0/1+3/2√2",
    "1/1+0/1√2 0/1-1/2√2 0/1-1/2√2",
    "1/1+0/1√2 0/1-1/2√2 0/1-3/2√2",
    "1/1+0/1√2 0/1-1/3√2 -1/3+0/1√2",
    "1/1+0/1√2 0/1-1/3√2 1/3+0/1√2",
    "1/1+0/1√2 0/1-3/2√2 0/1+1/2√2",
    "1/1+0/1√2 0/1-3/2√2 0/1-1/2√2",
    "1/1+0/1√2 1/1+0/1√2 0/1+0/1√2",
    "1/1+0/1√2 1/1+0/1√2 0/1+1/1√2",
    "1/1+0/1√2 1/1+0/1√2 0/1-1/1√2",
    "1/1+0/1√2 1/3+0/1√2 0/1+1/3√2",
    "1/1+0/1√2 1/3+0/1√2 0/1-1/3√2",
    "1/1+0/1√2 3/1+0/1√2 0/1+1/1√2",
    "1/1+0/1√2 3/1+0/1√2 0/1-1/1√2",
};

inline constexpr std::array<std::array<int, 3>, 40> kBasesSorted = {{
    {{0, 2, 16}},
    {{0, 8, 50}},
    {{0, 24, 41}},
    {{0, 27, 38}},
    {{1, 7, 16}},
    {{1, 28, 44}},
    {{2, 15, 21}},
    {{2, 17, 20}},
    {{2, 18, 19}},
    {{3, 6, 16}},
    {{3, 22, 47}},
    {{3, 32, 39}},
    {{4, 5, 16}},
    {{4, 9, 54}},
    {{4, 11, 52}},
    {{5, 25, 46}},
    {{5, 33, 36}},
    {{6, 10, 53}},
    {{6, 12, 51}},
    {{7, 30, 42}},
    {{8, 51, 52}},
    {{9, 10, 50}},
    {{9, 20, 55}},
    {{10, 18, 56}},
    {{13, 20, 51}},
    {{14, 18, 52}},
    {{15, 25, 39}},
    {{17, 30, 49}},
    {{17, 35, 44}},
    {{19, 28, 48}},
    {{19, 34, 42}},
    {{21, 22, 36}},
    {{22, 26, 41}},
    {{23, 25, 41}},
    {{24, 42, 45}},
    {{24, 43, 44}},
    {{27, 36, 40}},
    {{27, 37, 39}},
    {{28, 31, 38}},
    {{29, 30, 38}},
}};

}  // namespace golden

// Published values of cp(n, n, k), n = 1..10, k = 0..n-1.
#pragma once

#include <array>
#include <string_view>

namespace parking::published {

inline constexpr std::array<std::array<std::string_view, 10>, 10> kSquareDefectCounts{{
    {"1"},
    {"3", "1"},
    {"16", "10", "1"},
    {"125", "107", "23", "1"},
    {"1296", "1346", "436", "46", "1"},
    {"16807", "19917", "8402", "1442", "87", "1"},
    {"262144", "341986", "173860", "41070", "4320", "162", "1"},
    {"4782969", "6713975", "3924685", "1166083", "176843", "12357", "303", "1"},
    {"100000000", "148717762", "96920092", "34268902", "6768184", "710314", "34660", "574", "1"},
    {"2357947691", "3674435393", "2612981360", "1059688652", "256059854", "36046214", "2743112",
     "96620", "1103", "1"},
}};

}  // namespace parking::published

#include "flagjac/appendix.hpp"

namespace flagjac {

namespace {

// Printed entries, upper triangle, in reading order.
constexpr AppendixEntry kEntries[] = {
    {2, 1, 1,
     "-3/4 (x4^2 (x2^2 + x3^2 + x5^2 + x6^2) - 2 (x2 x6 + x3 x5)^2)"},
    {2, 1, 2,
     "3/8 (x4 x5 (x1^2 + x2^2 + x4^2 + x5^2) - 2 (x2 x6 + x3 x5) (x1 x6 + x3 x4))"},
    {2, 1, 3,
     "3/8 (x4 x6 (x1^2 + x3^2 + x4^2 + x6^2) - 2 (x2 x6 + x3 x5) (x1 x5 + x2 x4))"},
    {2, 1, 4,
     "3/4 (x1 x4 (x2^2 + x3^2 + x5^2 + x6^2) + 2 (x2 x6 + x3 x5) (x2 x3 - x5 x6))"},
    {2, 1, 5,
     "-3/8 (x2 x4 (x1^2 + x2^2 + x4^2 + x5^2) + 2 (x2 x6 + x3 x5) (x1 x3 - x4 x6))"},
    {2, 1, 6,
     "-3/8 (x3 x4 (x1^2 + x3^2 + x4^2 + x6^2) + 2 (x2 x6 + x3 x5) (x1 x2 - x4 x5))"},
    {2, 2, 2,
     "-3/4 (x5^2 (x1^2 + x3^2 + x4^2 + x6^2) - 2 (x1 x6 + x3 x4)^2)"},
    {2, 2, 3,
     "3/8 (x5 x6 (x2^2 + x3^2 + x5^2 + x6^2) - 2 (x1 x6 + x3 x4) (x1 x5 + x2 x4))"},
    {2, 2, 4,
     "-3/8 (x1 x5 (x1^2 + x2^2 + x4^2 + x5^2) + 2 (x1 x6 + x3 x4) (x2 x3 - x5 x6))"},
    {2, 2, 5,
     "3/4 (x2 x5 (x1^2 + x3^2 + x4^2 + x6^2) + 2 (x1 x6 + x3 x4) (x1 x3 - x4 x6))"},
    {2, 2, 6,
     "-3/8 (x3 x5 (x2^2 + x3^2 + x5^2 + x6^2) + 2 (x1 x6 + x3 x4) (x1 x2 - x4 x5))"},
    {2, 3, 3,
     "-3/4 (x6^2 (x1^2 + x2^2 + x4^2 + x5^2) - 2 (x1 x5 + x2 x4)^2)"},
    {2, 3, 4,
     "-3/8 (x1 x6 (x1^2 + x3^2 + x4^2 + x6^2) + 2 (x1 x5 + x2 x4) (x2 x3 - x5 x6))"},
    {2, 3, 5,
     "-3/8 (x2 x6 (x2^2 + x3^2 + x5^2 + x6^2) + 2 (x1 x5 + x2 x4) (x1 x3 - x4 x6))"},
    {2, 3, 6,
     "3/4 (x3 x6 (x1^2 + x2^2 + x4^2 + x5^2) + 2 (x1 x5 + x2 x4) (x1 x2 - x4 x5))"},
    {2, 4, 4,
     "-3/4 (x1^2 (x2^2 + x3^2 + x5^2 + x6^2) - 2 (x2 x3 - x5 x6)^2)"},
    {2, 4, 5,
     "3/8 (x1 x2 (x1^2 + x2^2 + x4^2 + x5^2) - 2 (x2 x3 - x5 x6) (x1 x3 - x4 x6))"},
    {2, 4, 6,
     "3/8 (x1 x3 (x1^2 + x3^2 + x4^2 + x6^2) - 2 (x2 x3 - x5 x6) (x1 x2 - x4 x5))"},
    {2, 5, 5,
     "-3/4 (x2^2 (x1^2 + x3^2 + x4^2 + x6^2) - 2 (x1 x3 - x4 x6)^2)"},
    {2, 5, 6,
     "3/8 (x2 x3 (x2^2 + x3^2 + x5^2 + x6^2) - 2 (x1 x3 - x4 x6) (x1 x2 - x4 x5))"},
    {2, 6, 6,
     "-3/4 (x3^2 (x1^2 + x2^2 + x4^2 + x5^2) - 2 (x1 x2 - x4 x5)^2)"},
    {3, 1, 1,
     "9/(8 sqrt2) x4 (x2^2 - x3^2 + x5^2 - x6^2) (x2 x6 + x3 x5)"},
    {3, 1, 2,
     "3/(16 sqrt2) (x3 (x1^2 (x4^2 - 4 x5^2) + x2^2 (4 x4^2 - x5^2) + (x4^2 - x5^2) (7 x3^2 +"
     " x4^2 + x5^2 + 7 x6^2)) + x1 x4 x6 (x1^2 + 4 x2^2 + 7 x3^2 + x4^2 + 4 x5^2 + 7 x6^2) - x2"
     " x5 x6 (4 x1^2 + x2^2 + 7 x3^2 + 4 x4^2 + x5^2 + 7 x6^2))"},
    {3, 1, 3,
     "3/(16 sqrt2) (-x4 (x1 x5 + x2 x4) (x1^2 + 7 x2^2 + 4 x3^2 + x4^2 + 7 x5^2 + 4 x6^2) + x6"
     " (x2 x6 + x3 x5) (4 x1^2 + 7 x2^2 + x3^2 + 4 x4^2 + 7 x5^2 + x6^2))"},
    {3, 1, 4,
     "9/(16 sqrt2) (x2^2 - x3^2 + x5^2 - x6^2) (x1 (x2 x6 - x3 x5) + x4 (x2 x3 - x5 x6))"},
    {3, 1, 5,
     "3/(16 sqrt2) (x4 (x1 x3 - x4 x6) (x1^2 + 4 x2^2 + 7 x3^2 + x4^2 + 4 x5^2 + 7 x6^2) + x2"
     " (x2 x6 + x3 x5) (4 x1^2 + x2^2 + 7 x3^2 + 4 x4^2 + x5^2 + 7 x6^2))"},
    {3, 1, 6,
     "3/(16 sqrt2) (x5 (x1^2 (x4^2 - 4 x3^2) + x6^2 (4 x4^2 - x3^2) + (x4^2 - x3^2) (7 x2^2 +"
     " x3^2 + x4^2 + 7 x5^2)) - x1 x2 x4 (x1^2 + 7 x2^2 + 4 x3^2 + x4^2 + 7 x5^2 + 4 x6^2) - x6"
     " x2 x3 (4 x1^2 + 7 x2^2 + x3^2 + 4 x4^2 + 7 x5^2 + x6^2))"},
    {3, 2, 2,
     "9/(8 sqrt2) x5 (x1^2 - x3^2 + x4^2 - x6^2) (x1 x6 + x3 x4)"},
    {3, 2, 3,
     "3/(16 sqrt2) (x5 (x1 x5 + x2 x4) (7 x1^2 + x2^2 + 4 x3^2 + 7 x4^2 + x5^2 + 4 x6^2) - x6"
     " (x1 x6 + x3 x4) (7 x1^2 + 4 x2^2 + x3^2 + 7 x4^2 + 4 x5^2 + x6^2))"},
    {3, 2, 4,
     "3/(16 sqrt2) (x6 (x2^2 (4 x1^2 - x5^2) + x4^2 (x1^2 - 4 x5^2) + (x1^2 - x5^2) (x1^2 + 7"
     " x3^2 + x5^2 + 7 x6^2)) - x2 x3 x5 (4 x1^2 + x2^2 + 7 x3^2 + 4 x4^2 + x5^2 + 7 x6^2) - x4"
     " x1 x3 (x1^2 + 4 x2^2 + 7 x3^2 + x4^2 + 4 x5^2 + 7 x6^2))"},
    {3, 2, 5,
     "9/(16 sqrt2) (x1^2 - x3^2 + x4^2 - x6^2) (x2 (x1 x6 + x3 x4) - x5 (x1 x3 + x4 x6))"},
    {3, 2, 6,
     "3/(16 sqrt2) (x4 (x2^2 (4 x3^2 - x5^2) + x6^2 (x3^2 - 4 x5^2) + (x3^2 - x5^2) (7 x1^2 +"
     " x3^2 + 7 x4^2 + x5^2)) + x2 x1 x5 (7 x1^2 + x2^2 + 4 x3^2 + 7 x4^2 + x5^2 + 4 x6^2) + x6"
     " x1 x3 (7 x1^2 + 4 x2^2 + x3^2 + 7 x4^2 + 4 x5^2 + x6^2))"},
    {3, 3, 3,
     "9/(8 sqrt2) x6 (x1^2 - x2^2 + x4^2 - x5^2) (x1 x5 + x2 x4)"},
    {3, 3, 4,
     "3/(16 sqrt2) (x6 (x2 x3 - x5 x6) (4 x1^2 + 7 x2^2 + x3^2 + 4 x4^2 + 7 x5^2 + x6^2) + x1"
     " (x1 x5 + x2 x4) (x1^2 + 7 x2^2 + 4 x3^2 + x4^2 + 7 x5^2 + 4 x6^2))"},
    {3, 3, 5,
     "3/(16 sqrt2) (x6 (-x1 x3 + x4 x6) (7 x1^2 + 4 x2^2 + x3^2 + 7 x4^2 + 4 x5^2 + x6^2) - x2"
     " (x1 x5 + x2 x4) (7 x1^2 + x2^2 + 4 x3^2 + 7 x4^2 + x5^2 + 4 x6^2))"},
    {3, 3, 6,
     "9/(16 sqrt2) (x1^2 - x2^2 + x4^2 - x5^2) (-x3 (x1 x5 + x2 x4) + x6 (x1 x2 - x4 x5))"},
    {3, 4, 4,
     "9/(8 sqrt2) x1 (x2^2 - x3^2 + x5^2 - x6^2) (-x2 x3 + x5 x6)"},
    {3, 4, 5,
     "3/(16 sqrt2) (x3 (-x1^2 (x4^2 + 4 x5^2) + x2^2 (4 x4^2 + x5^2) - (x1^2 - x2^2) (x1^2 +"
     " x2^2 + 7 x3^2 + 7 x6^2)) + x4 x1 x6 (x1^2 + 4 x2^2 + 7 x3^2 + x4^2 + 4 x5^2 + 7 x6^2) +"
     " x5 x2 x6 (4 x1^2 + x2^2 + 7 x3^2 + 4 x4^2 + x5^2 + 7 x6^2))"},
    {3, 4, 6,
     "3/(16 sqrt2) (x1 (x1 x2 - x4 x5) (x1^2 + 7 x2^2 + 4 x3^2 + x4^2 + 7 x5^2 + 4 x6^2) - x3"
     " (x2 x3 - x5 x6) (4 x1^2 + 7 x2^2 + x3^2 + 4 x4^2 + 7 x5^2 + x6^2))"},
    {3, 5, 5,
     "9/(8 sqrt2) x2 (x1^2 - x3^2 + x4^2 - x6^2) (x1 x3 - x4 x6)"},
    {3, 5, 6,
     "3/(16 sqrt2) (x1 (-x2^2 (x5^2 + 4 x6^2) + x3^2 (4 x5^2 + x6^2) - (x2^2 - x3^2) (7 x1^2 +"
     " x2^2 + x3^2 + 7 x4^2)) + x5 x2 x4 (7 x1^2 + x2^2 + 4 x3^2 + 7 x4^2 + x5^2 + 4 x6^2) - x6"
     " x3 x4 (7 x1^2 + 4 x2^2 + x3^2 + 7 x4^2 + 4 x5^2 + x6^2))"},
    {3, 6, 6,
     "9/(8 sqrt2) x3 (x1^2 - x2^2 + x4^2 - x5^2) (-x1 x2 + x4 x5)"},
    {4, 1, 1,
     "3/32 (-8 N (x2 x6 + x3 x5)^2 + x4^2 ((x1^2 + 7 x2^2 + 7 x3^2 + x4^2 + 7 x5^2 + 7 x6^2)"
     " (x2^2 + x3^2 + x5^2 + x6^2) - 6 (x2^2 + x5^2) (x3^2 + x6^2)))"},
    {4, 1, 2,
     "3/64 (8 x6 N (x1 x2 x6 + x1 x3 x5 + x2 x3 x4) - x4 x5 (N^2 - N (3 x3^2 - 5 x6^2) + 12"
     " ((x1^2 + x4^2) (x2^2 + x5^2) - (x3^2 + x6^2)^2)))"},
    {4, 1, 3,
     "3/64 (8 x5 N (x1 x2 x6 + x1 x3 x5 + x2 x3 x4) - x4 x6 (N^2 + N (-3 x2^2 + 5 x5^2) + 12"
     " ((x1^2 + x4^2) (x3^2 + x6^2) - (x2^2 + x5^2)^2)))"},
    {4, 1, 4,
     "3/32 (8 N (-x2 x3 + x5 x6) (x2 x6 + x3 x5) - x1 x4 ((x1^2 + x4^2) (x2^2 + x3^2 + x5^2 +"
     " x6^2) - 6 (x2^2 + x5^2) (x3^2 + x6^2) + 7 (x2^2 + x3^2 + x5^2 + x6^2)^2))"},
    {4, 1, 5,
     "3/64 (8 x3 N (x1 x2 x6 + x1 x3 x5 - x4 x5 x6) + x2 x4 (N^2 + N (5 x3^2 - 3 x6^2) + 12"
     " ((x1^2 + x4^2) (x2^2 + x5^2) - (x3^2 + x6^2)^2)))"},
    {4, 1, 6,
     "3/64 (8 x2 N (x1 x2 x6 + x1 x3 x5 - x4 x5 x6) + x3 x4 (N^2 + N (5 x2^2 - 3 x5^2) + 12"
     " ((x1^2 + x4^2) (x3^2 + x6^2) - (x2^2 + x5^2)^2)))"},
    {4, 2, 2,
     "3/32 (-8 N (x1 x6 + x3 x4)^2 + x5^2 ((7 x1^2 + x2^2 + 7 x3^2 + 7 x4^2 + x5^2 + 7 x6^2)"
     " (x1^2 + x3^2 + x4^2 + x6^2) - 6 (x1^2 + x4^2) (x3^2 + x6^2)))"},
    {4, 2, 3,
     "3/64 (8 x4 N (x1 x2 x6 + x1 x3 x5 + x2 x3 x4) - x5 x6 (N^2 - N (3 x1^2 - 5 x4^2) + 12"
     " ((x2^2 + x5^2) (x3^2 + x6^2) - (x1^2 + x4^2)^2)))"},
    {4, 2, 4,
     "3/64 (8 x3 N (x1 x2 x6 + x2 x3 x4 - x4 x5 x6) + x1 x5 (N^2 + N (5 x3^2 - 3 x6^2) + 12"
     " ((x1^2 + x4^2) (x2^2 + x5^2) - (x3^2 + x6^2)^2)))"},
    {4, 2, 5,
     "3/32 (8 N (-x1 x3 + x4 x6) (x1 x6 + x3 x4) - x2 x5 ((x2^2 + x5^2) (x1^2 + x3^2 + x4^2 +"
     " x6^2) - 6 (x1^2 + x4^2) (x3^2 + x6^2) + 7 (x1^2 + x3^2 + x4^2 + x6^2)^2))"},
    {4, 2, 6,
     "3/64 (8 x1 N (x1 x2 x6 + x2 x3 x4 - x4 x5 x6) + x3 x5 (N^2 + N (5 x1^2 - 3 x4^2) + 12"
     " ((x2^2 + x5^2) (x3^2 + x6^2) - (x1^2 + x4^2)^2)))"},
    {4, 3, 3,
     "3/32 (8 N (x1 x5 + x2 x4)^2 - x6^2 ((7 x1^2 + 7 x2^2 + x3^2 + 7 x4^2 + 7 x5^2 + x6^2)"
     " (x1^2 + x2^2 + x4^2 + x5^2) - 6 (x1^2 + x4^2) (x2^2 + x5^2)))"},
    {4, 3, 4,
     "3/64 (8 x2 N (x1 x3 x5 + x2 x3 x4 - x4 x5 x6) + x1 x6 (N^2 + N (5 x2^2 - 3 x5^2) + 12"
     " ((x1^2 + x4^2) (x3^2 + x6^2) - (x2^2 + x5^2)^2)))"},
    {4, 3, 5,
     "3/64 (8 x1 N (x1 x3 x5 + x2 x3 x4 - x4 x5 x6) + x2 x6 (N^2 + N (5 x1^2 - 3 x4^2) + 12"
     " ((x2^2 + x5^2) (x3^2 + x6^2) - (x1^2 + x4^2)^2)))"},
    {4, 3, 6,
     "3/32 (8 N (-x1 x2 + x4 x5) (x1 x5 + x2 x4) - x3 x6 ((x3^2 + x6^2) (x1^2 + x2^2 + x4^2 +"
     " x5^2) - 6 (x1^2 + x4^2) (x2^2 + x5^2) + 7 (x1^2 + x2^2 + x4^2 + x5^2)^2))"},
    {4, 4, 4,
     "3/32 (-8 N (x2 x3 - x5 x6)^2 + x1^2 ((x1^2 + 7 x2^2 + 7 x3^2 + x4^2 + 7 x5^2 + 7 x6^2)"
     " (x2^2 + x3^2 + x5^2 + x6^2) - 6 (x2^2 + x5^2) (x3^2 + x6^2)))"},
    {4, 4, 5,
     "3/64 (8 x6 N (-x1 x3 x5 - x2 x3 x4 + x4 x5 x6) - x1 x2 (N^2 + N (3 x3^2 - 5 x6^2) + 12"
     " ((x1^2 + x4^2) (x2^2 + x5^2) - (x3^2 + x6^2)^2)))"},
    {4, 4, 6,
     "3/64 (8 x5 N (-x1 x2 x6 - x2 x3 x4 + x4 x5 x6) - x1 x3 (N^2 - N (3 x2^2 - 5 x5^2) + 12"
     " ((x1^2 + x4^2) (x3^2 + x6^2) - (x2^2 + x5^2)^2)))"},
    {4, 5, 5,
     "3/32 (-8 N (x1 x3 - x4 x6)^2 + x2^2 ((7 x1^2 + x2^2 + 7 x3^2 + 7 x4^2 + x5^2 + 7 x6^2)"
     " (x1^2 + x3^2 + x4^2 + x6^2) - 6 (x1^2 + x4^2) (x3^2 + x6^2)))"},
    {4, 5, 6,
     "3/64 (8 x4 N (-x1 x2 x6 - x1 x3 x5 + x4 x5 x6) - x2 x3 (N^2 - N (3 x1^2 - 5 x4^2) + 12"
     " ((x2^2 + x5^2) (x3^2 + x6^2) - (x1^2 + x4^2)^2)))"},
    {4, 6, 6,
     "3/32 (-8 N (x1 x2 - x4 x5)^2 + x3^2 ((7 x1^2 + 7 x2^2 + x3^2 + 7 x4^2 + 7 x5^2 + x6^2)"
     " (x1^2 + x2^2 + x4^2 + x5^2) - 6 (x1^2 + x4^2) (x2^2 + x5^2)))"},
    {5, 1, 1,
     "-45/(64 sqrt2) x4 N (x2^2 - x3^2 + x5^2 - x6^2) (x2 x6 + x3 x5)"},
    {5, 1, 2,
     "3/(32 sqrt2) N^2 (x3 (x4^2 - x5^2) + x6 (x1 x4 - x2 x5)) - 15/(128 sqrt2) N (x3 (x1^2"
     " (x4^2 - 4 x5^2) + x2^2 (4 x4^2 - x5^2) + (x4^2 - x5^2) (7 x3^2 + x4^2 + x5^2 + 7 x6^2))"
     " + x1 x4 x6 (x1^2 + 4 x2^2 + 7 x3^2 + x4^2 + 4 x5^2 + 7 x6^2) - x2 x5 x6 (4 x1^2 + x2^2 +"
     " 7 x3^2 + 4 x4^2 + x5^2 + 7 x6^2))"},
    {5, 1, 3,
     "-3/(32 sqrt2) N^2 (x2 (x4^2 - x6^2) + x5 (x1 x4 - x3 x6)) - 15/(128 sqrt2) N (-x4 (x1 x5"
     " + x2 x4) (x1^2 + 7 x2^2 + 4 x3^2 + x4^2 + 7 x5^2 + 4 x6^2) + x6 (x2 x6 + x3 x5) (4 x1^2"
     " + 7 x2^2 + x3^2 + 4 x4^2 + 7 x5^2 + x6^2))"},
    {5, 1, 4,
     "-45/(128 sqrt2) N (x2^2 - x3^2 + x5^2 - x6^2) (x1 (x2 x6 - x3 x5) + x4 (x2 x3 - x5 x6))"},
    {5, 1, 5,
     "3/(32 sqrt2) N^2 (x6 (x2^2 - x4^2) + x3 (x1 x4 + x2 x5)) - 15/(128 sqrt2) N (x4 (x1 x3 -"
     " x4 x6) (x1^2 + 4 x2^2 + 7 x3^2 + x4^2 + 4 x5^2 + 7 x6^2) + x2 (x2 x6 + x3 x5) (4 x1^2 +"
     " x2^2 + 7 x3^2 + 4 x4^2 + x5^2 + 7 x6^2))"},
    {5, 1, 6,
     "-3/(32 sqrt2) N^2 (x5 (x3^2 - x4^2) + x2 (x1 x4 + x3 x6)) - 15/(128 sqrt2) N (x5 (x1^2"
     " (x4^2 - 4 x3^2) + x6^2 (4 x4^2 - x3^2) + (x4^2 - x3^2) (7 x2^2 + x3^2 + x4^2 + 7 x5^2))"
     " - x1 x2 x4 (x1^2 + 7 x2^2 + 4 x3^2 + x4^2 + 7 x5^2 + 4 x6^2) - x6 x2 x3 (4 x1^2 + 7 x2^2"
     " + x3^2 + 4 x4^2 + 7 x5^2 + x6^2))"},
    {5, 2, 2,
     "-45/(64 sqrt2) x5 N (x1^2 - x3^2 + x4^2 - x6^2) (x1 x6 + x3 x4)"},
    {5, 2, 3,
     "3/(32 sqrt2) N^2 (x1 (x5^2 - x6^2) + x4 (x2 x5 - x3 x6)) - 15/(128 sqrt2) N (x5 (x1 x5 +"
     " x2 x4) (7 x1^2 + x2^2 + 4 x3^2 + 7 x4^2 + x5^2 + 4 x6^2) - x6 (x1 x6 + x3 x4) (7 x1^2 +"
     " 4 x2^2 + x3^2 + 7 x4^2 + 4 x5^2 + x6^2))"},
    {5, 2, 4,
     "-3/(32 sqrt2) N^2 (x6 (x1^2 - x5^2) + x3 (x1 x4 + x2 x5)) - 15/(128 sqrt2) N (x6 (x2^2 (4"
     " x1^2 - x5^2) + x4^2 (x1^2 - 4 x5^2) + (x1^2 - x5^2) (x1^2 + 7 x3^2 + x5^2 + 7 x6^2)) -"
     " x2 x3 x5 (4 x1^2 + x2^2 + 7 x3^2 + 4 x4^2 + x5^2 + 7 x6^2) - x4 x1 x3 (x1^2 + 4 x2^2 + 7"
     " x3^2 + x4^2 + 4 x5^2 + 7 x6^2))"},
    {5, 2, 5,
     "-45/(128 sqrt2) N (x1^2 - x3^2 + x4^2 - x6^2) (x2 (x1 x6 + x3 x4) - x5 (x1 x3 + x4 x6))"},
    {5, 2, 6,
     "3/(32 sqrt2) N^2 (x4 (x3^2 - x5^2) + x1 (x2 x5 + x3 x6)) - 15/(128 sqrt2) N (x4 (x2^2 (4"
     " x3^2 - x5^2) + x6^2 (x3^2 - 4 x5^2) + (x3^2 - x5^2) (7 x1^2 + x3^2 + 7 x4^2 + x5^2)) +"
     " x2 x1 x5 (7 x1^2 + x2^2 + 4 x3^2 + 7 x4^2 + x5^2 + 4 x6^2) + x6 x1 x3 (7 x1^2 + 4 x2^2 +"
     " x3^2 + 7 x4^2 + 4 x5^2 + x6^2))"},
    {5, 3, 3,
     "-45/(64 sqrt2) x6 N (x1^2 - x2^2 + x4^2 - x5^2) (x1 x5 + x2 x4)"},
    {5, 3, 4,
     "3/(32 sqrt2) N^2 (x5 (x1^2 - x6^2) + x2 (x1 x4 + x3 x6)) - 15/(128 sqrt2) N (x6 (x2 x3 -"
     " x5 x6) (4 x1^2 + 7 x2^2 + x3^2 + 4 x4^2 + 7 x5^2 + x6^2) + x1 (x1 x5 + x2 x4) (x1^2 + 7"
     " x2^2 + 4 x3^2 + x4^2 + 7 x5^2 + 4 x6^2))"},
    {5, 3, 5,
     "-3/(32 sqrt2) N^2 (x4 (x2^2 - x6^2) + x1 (x2 x5 + x3 x6)) - 15/(128 sqrt2) N (x6 (-x1 x3"
     " + x4 x6) (7 x1^2 + 4 x2^2 + x3^2 + 7 x4^2 + 4 x5^2 + x6^2) - x2 (x1 x5 + x2 x4) (7 x1^2"
     " + x2^2 + 4 x3^2 + 7 x4^2 + x5^2 + 4 x6^2))"},
    {5, 3, 6,
     "-45/(128 sqrt2) N (x1^2 - x2^2 + x4^2 - x5^2) (-x3 (x1 x5 + x2 x4) + x6 (x1 x2 - x4 x5))"},
    {5, 4, 4,
     "-45/(64 sqrt2) x1 N (x2^2 - x3^2 + x5^2 - x6^2) (-x2 x3 + x5 x6)"},
    {5, 4, 5,
     "3/(32 sqrt2) N^2 (x3 (x2^2 - x1^2) + x6 (x1 x4 - x2 x5)) - 15/(128 sqrt2) N (x3 (-x1^2"
     " (x4^2 + 4 x5^2) + x2^2 (4 x4^2 + x5^2) - (x1^2 - x2^2) (x1^2 + x2^2 + 7 x3^2 + 7 x6^2))"
     " + x4 x1 x6 (x1^2 + 4 x2^2 + 7 x3^2 + x4^2 + 4 x5^2 + 7 x6^2) + x5 x2 x6 (4 x1^2 + x2^2 +"
     " 7 x3^2 + 4 x4^2 + x5^2 + 7 x6^2))"},
    {5, 4, 6,
     "-3/(32 sqrt2) N^2 (x2 (x3^2 - x1^2) + x5 (x1 x4 - x3 x6)) - 15/(128 sqrt2) N (x1 (x1 x2 -"
     " x4 x5) (x1^2 + 7 x2^2 + 4 x3^2 + x4^2 + 7 x5^2 + 4 x6^2) - x3 (x2 x3 - x5 x6) (4 x1^2 +"
     " 7 x2^2 + x3^2 + 4 x4^2 + 7 x5^2 + x6^2))"},
    {5, 5, 5,
     "-45/(64 sqrt2) x2 N (x1^2 - x3^2 + x4^2 - x6^2) (x1 x3 - x4 x6)"},
    {5, 5, 6,
     "3/(32 sqrt2) N^2 (x1 (x3^2 - x2^2) + x4 (x2 x5 - x3 x6)) - 15/(128 sqrt2) N (x1 (-x2^2"
     " (x5^2 + 4 x6^2) + x3^2 (4 x5^2 + x6^2) - (x2^2 - x3^2) (7 x1^2 + x2^2 + x3^2 + 7 x4^2))"
     " + x5 x2 x4 (7 x1^2 + x2^2 + 4 x3^2 + 7 x4^2 + x5^2 + 4 x6^2) - x6 x3 x4 (7 x1^2 + 4 x2^2"
     " + x3^2 + 7 x4^2 + 4 x5^2 + x6^2))"},
    {5, 6, 6,
     "-45/(64 sqrt2) x3 N (x1^2 - x2^2 + x4^2 - x5^2) (-x1 x2 + x4 x5)"},
};

}  // namespace

std::span<const AppendixEntry> appendix_entries() { return kEntries; }

}  // namespace flagjac

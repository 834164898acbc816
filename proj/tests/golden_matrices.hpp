#pragma once

#include <array>
#include <vector>

// Reference listings of pi(a_1 + a_2 e_1 + ... + a_N e_1...e_n) for the twelve signatures with
// n <= 4. Entry +-k stands for +-a_k, row-major.

namespace golden {

struct Listing {
  unsigned p;
  unsigned q;
  std::vector<int> cells;
};

inline const std::vector<Listing>& listings() {
  static const std::vector<Listing> all = {
      {2, 0, {
            1,   2,   3,   4,
            2,   1,   4,   3,
            3,  -4,   1,  -2,
           -4,   3,  -2,   1,
      }},
      {1, 1, {
            1,   2,   3,   4,
            2,   1,   4,   3,
           -3,   4,   1,  -2,
            4,  -3,  -2,   1,
      }},
      {0, 2, {
            1,   2,   3,   4,
           -2,   1,  -4,   3,
           -3,   4,   1,  -2,
           -4,  -3,   2,   1,
      }},
      {3, 0, {
            1,   2,   3,   4,   5,   6,   7,   8,
            2,   1,   5,   6,   3,   4,   8,   7,
            3,  -5,   1,   7,  -2,  -8,   4,  -6,
            4,  -6,  -7,   1,   8,  -2,  -3,   5,
           -5,   3,  -2,  -8,   1,   7,  -6,   4,
           -6,   4,   8,  -2,  -7,   1,   5,  -3,
           -7,  -8,   4,  -3,   6,  -5,   1,   2,
           -8,  -7,   6,  -5,   4,  -3,   2,   1,
      }},
      {2, 1, {
            1,   2,   3,   4,   5,   6,   7,   8,
            2,   1,   5,   6,   3,   4,   8,   7,
            3,  -5,   1,   7,  -2,  -8,   4,  -6,
           -4,   6,   7,   1,  -8,  -2,  -3,   5,
           -5,   3,  -2,  -8,   1,   7,  -6,   4,
            6,  -4,  -8,  -2,   7,   1,   5,  -3,
            7,   8,  -4,  -3,  -6,  -5,   1,   2,
            8,   7,  -6,  -5,  -4,  -3,   2,   1,
      }},
      {1, 2, {
            1,   2,   3,   4,   5,   6,   7,   8,
            2,   1,   5,   6,   3,   4,   8,   7,
           -3,   5,   1,  -7,  -2,   8,   4,  -6,
           -4,   6,   7,   1,  -8,  -2,  -3,   5,
            5,  -3,  -2,   8,   1,  -7,  -6,   4,
            6,  -4,  -8,  -2,   7,   1,   5,  -3,
           -7,  -8,  -4,   3,  -6,   5,   1,   2,
           -8,  -7,  -6,   5,  -4,   3,   2,   1,
      }},
      {0, 3, {
            1,   2,   3,   4,   5,   6,   7,   8,
           -2,   1,  -5,  -6,   3,   4,  -8,   7,
           -3,   5,   1,  -7,  -2,   8,   4,  -6,
           -4,   6,   7,   1,  -8,  -2,  -3,   5,
           -5,  -3,   2,  -8,   1,  -7,   6,   4,
           -6,  -4,   8,   2,   7,   1,  -5,  -3,
           -7,  -8,  -4,   3,  -6,   5,   1,   2,
            8,  -7,   6,  -5,  -4,   3,  -2,   1,
      }},
      {4, 0, {
            1,   2,   3,   4,   5,   6,   7,   8,   9,  10,  11,  12,  13,  14,  15,  16,
            2,   1,   6,   7,   8,   3,   4,   5,  12,  13,  14,   9,  10,  11,  16,  15,
            3,  -6,   1,   9,  10,  -2, -12, -13,   4,   5,  15,  -7,  -8, -16,  11, -14,
            4,  -7,  -9,   1,  11,  12,  -2, -14,  -3, -15,   5,   6,  16,  -8, -10,  13,
            5,  -8, -10, -11,   1,  13,  14,  -2,  15,  -3,  -4, -16,   6,   7,   9, -12,
           -6,   3,  -2, -12, -13,   1,   9,  10,  -7,  -8, -16,   4,   5,  15, -14,  11,
           -7,   4,  12,  -2, -14,  -9,   1,  11,   6,  16,  -8,  -3, -15,   5,  13, -10,
           -8,   5,  13,  14,  -2, -10, -11,   1, -16,   6,   7,  15,  -3,  -4, -12,   9,
           -9, -12,   4,  -3, -15,   7,  -6, -16,   1,  11, -10,   2,  14, -13,   5,   8,
          -10, -13,   5,  15,  -3,   8,  16,  -6, -11,   1,   9, -14,   2,  12,  -4,  -7,
          -11, -14, -15,   5,  -4, -16,   8,  -7,  10,  -9,   1,  13, -12,   2,   3,   6,
          -12,  -9,   7,  -6, -16,   4,  -3, -15,   2,  14, -13,   1,  11, -10,   8,   5,
          -13, -10,   8,  16,  -6,   5,  15,  -3, -14,   2,  12, -11,   1,   9,  -7,  -4,
          -14, -11, -16,   8,  -7, -15,   5,  -4,  13, -12,   2,  10,  -9,   1,   6,   3,
          -15,  16, -11,  10,  -9,  14, -13,  12,   5,  -4,   3,  -8,   7,  -6,   1,  -2,
           16, -15,  14, -13,  12, -11,  10,  -9,  -8,   7,  -6,   5,  -4,   3,  -2,   1,
      }},
      {3, 1, {
            1,   2,   3,   4,   5,   6,   7,   8,   9,  10,  11,  12,  13,  14,  15,  16,
            2,   1,   6,   7,   8,   3,   4,   5,  12,  13,  14,   9,  10,  11,  16,  15,
            3,  -6,   1,   9,  10,  -2, -12, -13,   4,   5,  15,  -7,  -8, -16,  11, -14,
            4,  -7,  -9,   1,  11,  12,  -2, -14,  -3, -15,   5,   6,  16,  -8, -10,  13,
            5,  -8, -10, -11,   1,  13,  14,  -2,  15,  -3,  -4, -16,   6,   7,   9, -12,
           -6,   3,  -2, -12, -13,   1,   9,  10,  -7,  -8, -16,   4,   5,  15, -14,  11,
           -7,   4,  12,  -2, -14,  -9,   1,  11,   6,  16,  -8,  -3, -15,   5,  13, -10,
           -8,   5,  13,  14,  -2, -10, -11,   1, -16,   6,   7,  15,  -3,  -4, -12,   9,
           -9, -12,   4,  -3, -15,   7,  -6, -16,   1,  11, -10,   2,  14, -13,   5,   8,
          -10, -13,   5,  15,  -3,   8,  16,  -6, -11,   1,   9, -14,   2,  12,  -4,  -7,
          -11, -14, -15,   5,  -4, -16,   8,  -7,  10,  -9,   1,  13, -12,   2,   3,   6,
          -12,  -9,   7,  -6, -16,   4,  -3, -15,   2,  14, -13,   1,  11, -10,   8,   5,
          -13, -10,   8,  16,  -6,   5,  15,  -3, -14,   2,  12, -11,   1,   9,  -7,  -4,
          -14, -11, -16,   8,  -7, -15,   5,  -4,  13, -12,   2,  10,  -9,   1,   6,   3,
          -15,  16, -11,  10,  -9,  14, -13,  12,   5,  -4,   3,  -8,   7,  -6,   1,  -2,
           16, -15,  14, -13,  12, -11,  10,  -9,  -8,   7,  -6,   5,  -4,   3,  -2,   1,
      }},
      {2, 2, {
            1,   2,   3,   4,   5,   6,   7,   8,   9,  10,  11,  12,  13,  14,  15,  16,
            2,   1,   6,   7,   8,   3,   4,   5,  12,  13,  14,   9,  10,  11,  16,  15,
            3,  -6,   1,   9,  10,  -2, -12, -13,   4,   5,  15,  -7,  -8, -16,  11, -14,
           -4,   7,   9,   1, -11, -12,  -2,  14,  -3,  15,   5,   6, -16,  -8, -10,  13,
           -5,   8,  10,  11,   1, -13, -14,  -2, -15,  -3,  -4,  16,   6,   7,   9, -12,
           -6,   3,  -2, -12, -13,   1,   9,  10,  -7,  -8, -16,   4,   5,  15, -14,  11,
            7,  -4, -12,  -2,  14,   9,   1, -11,   6, -16,  -8,  -3,  15,   5,  13, -10,
            8,  -5, -13, -14,  -2,  10,  11,   1,  16,   6,   7, -15,  -3,  -4, -12,   9,
            9,  12,  -4,  -3,  15,  -7,  -6,  16,   1, -11, -10,   2, -14, -13,   5,   8,
           10,  13,  -5, -15,  -3,  -8, -16,  -6,  11,   1,   9,  14,   2,  12,  -4,  -7,
          -11, -14, -15,  -5,   4, -16,  -8,   7, -10,   9,   1, -13,  12,   2,   3,   6,
           12,   9,  -7,  -6,  16,  -4,  -3,  15,   2, -14, -13,   1, -11, -10,   8,   5,
           13,  10,  -8, -16,  -6,  -5, -15,  -3,  14,   2,  12,  11,   1,   9,  -7,  -4,
          -14, -11, -16,  -8,   7, -15,  -5,   4, -13,  12,   2, -10,   9,   1,   6,   3,
          -15,  16, -11, -10,   9,  14,  13, -12,  -5,   4,   3,   8,  -7,  -6,   1,  -2,
           16, -15,  14,  13, -12, -11, -10,   9,   8,  -7,  -6,  -5,   4,   3,  -2,   1,
      }},
      {1, 3, {
            1,   2,   3,   4,   5,   6,   7,   8,   9,  10,  11,  12,  13,  14,  15,  16,
            2,   1,   6,   7,   8,   3,   4,   5,  12,  13,  14,   9,  10,  11,  16,  15,
           -3,   6,   1,  -9, -10,  -2,  12,  13,   4,   5, -15,  -7,  -8,  16,  11, -14,
           -4,   7,   9,   1, -11, -12,  -2,  14,  -3,  15,   5,   6, -16,  -8, -10,  13,
           -5,   8,  10,  11,   1, -13, -14,  -2, -15,  -3,  -4,  16,   6,   7,   9, -12,
            6,  -3,  -2,  12,  13,   1,  -9, -10,  -7,  -8,  16,   4,   5, -15, -14,  11,
            7,  -4, -12,  -2,  14,   9,   1, -11,   6, -16,  -8,  -3,  15,   5,  13, -10,
            8,  -5, -13, -14,  -2,  10,  11,   1,  16,   6,   7, -15,  -3,  -4, -12,   9,
           -9, -12,  -4,   3, -15,  -7,   6, -16,   1, -11,  10,   2, -14,  13,   5,   8,
          -10, -13,  -5,  15,   3,  -8,  16,   6,  11,   1,  -9,  14,   2, -12,  -4,  -7,
          -11, -14, -15,  -5,   4, -16,  -8,   7, -10,   9,   1, -13,  12,   2,   3,   6,
          -12,  -9,  -7,   6, -16,  -4,   3, -15,   2, -14,  13,   1, -11,  10,   8,   5,
          -13, -10,  -8,  16,   6,  -5,  15,   3,  14,   2, -12,  11,   1,  -9,  -7,  -4,
          -14, -11, -16,  -8,   7, -15,  -5,   4, -13,  12,   2, -10,   9,   1,   6,   3,
           15, -16, -11,  10,  -9,  14, -13,  12,  -5,   4,  -3,   8,  -7,   6,   1,  -2,
          -16,  15,  14, -13,  12, -11,  10,  -9,   8,  -7,   6,  -5,   4,  -3,  -2,   1,
      }},
      {0, 4, {
            1,   2,   3,   4,   5,   6,   7,   8,   9,  10,  11,  12,  13,  14,  15,  16,
           -2,   1,  -6,  -7,  -8,   3,   4,   5, -12, -13, -14,   9,  10,  11, -16,  15,
           -3,   6,   1,  -9, -10,  -2,  12,  13,   4,   5, -15,  -7,  -8,  16,  11, -14,
           -4,   7,   9,   1, -11, -12,  -2,  14,  -3,  15,   5,   6, -16,  -8, -10,  13,
           -5,   8,  10,  11,   1, -13, -14,  -2, -15,  -3,  -4,  16,   6,   7,   9, -12,
           -6,  -3,   2, -12, -13,   1,  -9, -10,   7,   8, -16,   4,   5, -15,  14,  11,
           -7,  -4,  12,   2, -14,   9,   1, -11,  -6,  16,   8,  -3,  15,   5, -13, -10,
           -8,  -5,  13,  14,   2,  10,  11,   1, -16,  -6,  -7, -15,  -3,  -4,  12,   9,
           -9, -12,  -4,   3, -15,  -7,   6, -16,   1, -11,  10,   2, -14,  13,   5,   8,
          -10, -13,  -5,  15,   3,  -8,  16,   6,  11,   1,  -9,  14,   2, -12,  -4,  -7,
          -11, -14, -15,  -5,   4, -16,  -8,   7, -10,   9,   1, -13,  12,   2,   3,   6,
           12,  -9,   7,  -6,  16,  -4,   3, -15,  -2,  14, -13,   1, -11,  10,  -8,   5,
           13, -10,   8, -16,  -6,  -5,  15,   3, -14,  -2,  12,  11,   1,  -9,   7,  -4,
           14, -11,  16,   8,  -7, -15,  -5,   4,  13, -12,  -2, -10,   9,   1,  -6,   3,
           15, -16, -11,  10,  -9,  14, -13,  12,  -5,   4,  -3,   8,  -7,   6,   1,  -2,
           16,  15, -14,  13, -12, -11,  10,  -9,  -8,   7,  -6,  -5,   4,  -3,   2,   1,
      }},
  };
  return all;
}

}  // namespace golden

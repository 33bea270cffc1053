#ifndef SECMAT_TESTS_GOLDEN_HPP
#define SECMAT_TESTS_GOLDEN_HPP

// Sectional matrices and rgins as printed in the literature, columns 0.. as far
// as they are printed.

#include <string>
#include <vector>

#include "support.hpp"

namespace secmat::test {

struct GoldenMatrix {
  std::string fixture;
  /// Truncation degree, or -1 for the ideal itself.
  int truncate;
  Rows rows;
};

inline std::vector<GoldenMatrix> golden_matrices() {
  return {
      {"ex_first", -1, {{1, 1, 1, 0, 0, 0, 0, 0}, {1, 2, 3, 3, 2, 1, 0, 0}, {1, 3, 6, 9, 11, 12, 12, 12}}},
      {"ex_conca", -1, {{1, 1, 1, 0, 0, 0, 0, 0}, {1, 2, 3, 3, 2, 1, 1, 0}, {1, 3, 6, 9, 11, 12, 12, 12}}},
      {"ex_regexampletrunc",
       -1,
       {{1, 1, 1, 1, 0, 0, 0, 0, 0},
        {1, 2, 3, 4, 4, 3, 2, 1, 1},
        {1, 3, 6, 10, 14, 17, 19, 20, 21},
        {1, 4, 10, 20, 34, 51, 70, 90, 111}}},
      {"ex_before_reg",
       -1,
       {{1, 1, 0, 0, 0, 0}, {1, 2, 1, 1, 1, 1}, {1, 3, 4, 4, 5, 6}, {1, 4, 8, 11, 15, 21}}},
      {"ex_dim_deg",
       -1,
       {{1, 1, 1, 0, 0, 0, 0, 0},
        {1, 2, 3, 1, 1, 1, 1, 1},
        {1, 3, 6, 7, 7, 8, 9, 10},
        {1, 4, 10, 17, 24, 32, 40, 50}}},
      {"ex_dim_deg", 3, {{1, 1, 1, 0, 0}, {1, 2, 3, 1, 1}, {1, 3, 6, 7, 8}, {1, 4, 10, 17, 25}}},
      {"ex_dim_deg",
       4,
       {{1, 1, 1, 0, 0, 0}, {1, 2, 3, 1, 1, 1}, {1, 3, 6, 7, 7, 8}, {1, 4, 10, 17, 24, 32}}},
      {"ex_gcd",
       -1,
       {{1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
        {1, 2, 2, 1, 1, 0, 0, 0, 0, 0},
        {1, 3, 5, 6, 6, 4, 3, 2, 1, 1}}},
      {"ex_saturated_five",
       -1,
       {{1, 1, 1, 1, 1, 0, 0, 0, 0},
        {1, 2, 3, 4, 5, 1, 1, 1, 1},
        {1, 3, 6, 10, 15, 13, 14, 14, 15},
        {1, 4, 10, 20, 35, 47, 61, 75, 90},
        {1, 5, 15, 35, 70, 117, 178, 253, 343}}},
      {"ex_8_1_I", -1, {{1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 0, 0}}},
      {"ex_8_1_J", -1, {{1, 1, 0, 0, 0}, {1, 2, 0, 0, 0}, {1, 3, 3, 0, 0}}},
      {"ex_8_2_I", -1, {{1, 1, 1, 1, 1, 0, 0}, {1, 2, 3, 4, 5, 1, 1}, {1, 3, 6, 10, 15, 11, 12}}},
      {"ex_8_2_J", -1, {{1, 1, 1, 1, 1, 0, 0}, {1, 2, 3, 4, 5, 1, 1}, {1, 3, 6, 10, 15, 11, 12}}},
      {"ex_8_3_I", -1, {{1, 1, 1, 1, 1, 0, 0, 0}, {1, 2, 3, 4, 5, 1, 1, 1}, {1, 3, 6, 10, 15, 12, 12, 13}}},
      {"ex_8_3_J", -1, {{1, 1, 1, 1, 1, 0, 0, 0}, {1, 2, 3, 4, 5, 1, 1, 1}, {1, 3, 6, 10, 15, 12, 12, 13}}},
      {"ex_8_4_I",
       -1,
       {{1, 1, 1, 1, 0, 0, 0, 0, 0}, {1, 2, 3, 4, 2, 0, 0, 0, 0}, {1, 3, 6, 10, 12, 12, 7, 0, 0}}},
  };
}

struct GoldenRgin {
  std::string fixture;
  std::string rgin;
};

inline std::vector<GoldenRgin> golden_rgins() {
  return {
      {"ex_first", "x^3, x^2*y^2, x*y^4, y^6"},
      {"rgin_remark", "x^5, x^4*y, x^3*y^3"},
      {"ex_before_reg", "x^2, x*y, x*z^2, x*z*w, x*w^3"},
      {"ex_8_3_I", "x^5, x^4*y, x^3*y^2, x^2*y^3, x*y^4, x^4*z, x^3*y*z, x^2*y^2*z, x^3*z^2, x^2*y*z^3"},
      {"ex_8_3_J", "x^5, x^4*y, x^3*y^2, x^2*y^3, x*y^4, x^4*z, x^3*y*z, x^2*y^2*z, x*y^3*z, x^3*z^3"},
  };
}

}  // namespace secmat::test

#endif  // SECMAT_TESTS_GOLDEN_HPP

#pragma once

#include <string>
#include <vector>

#include "jslope/number.hpp"

namespace fixtures {

// Right-handed trefoil, n = 0..4.
inline const std::vector<std::string> trefoil = {
    "1",
    "q + q^3 - q^4",
    "q^2 + q^5 - q^7 + q^8 - q^9 - q^10 + q^11",
    "q^3 + q^7 - q^10 + q^11 - q^13 - q^14 + q^15 - q^17 + q^19 + q^20 - q^21",
    "q^4 + q^9 - q^13 + q^14 - q^17 - q^18 + q^19 - q^22 - q^23 + 2q^24 - q^28 + 2q^29 - q^32 - q^33 + q^34",
};

inline const std::string torus_3_4_n2 = "q^6 + q^9 + q^12 - q^13 - q^16 - q^19 + q^20 - q^22 + q^23";

inline const std::string k12a669_n1 =
    "-q^-6 + 2q^-5 - 4q^-4 + 6q^-3 - 7q^-2 + 9q^-1 - 9 + 9q - 7q^2 + 6q^3 - 4q^4 + 2q^5 - q^6";

inline const std::string k12a669_n2 =
    "q^-17 - 2q^-16 + q^-15 + 3q^-14 - 7q^-13 + 4q^-12 + 6q^-11 - 13q^-10 + 6q^-9 + 8q^-8 - 15q^-7 + 7q^-6 + "
    "7q^-5 - 15q^-4 + 11q^-3 + 6q^-2 - 21q^-1 + 18 + 9q - 30q^2 + 20q^3 + 15q^4 - 35q^5 + 16q^6 + 20q^7 - "
    "32q^8 + 7q^9 + 22q^10 - 22q^11 - 2q^12 + 17q^13 - 9q^14 - 5q^15 + 7q^16 - q^17 - 2q^18 + q^19";

struct ClassRow {
  std::string c2, c1, c0;
};

struct PrintedFraction {
  int factor;  // 1 for (1 - z), d for Phi_d
  int multiplicity;
  std::string numerator;
};

// One printed degree sequence with its closed form.
struct PrintedSequence {
  std::string knot;
  bool max_degree;
  std::vector<long> prefix;
  int period;
  std::vector<ClassRow> classes;  // by residue; empty when only c2 is pinned down
  std::string c2;                 // common quadratic coefficient
  std::string gf;                 // generating function in this library's rendering
  std::vector<PrintedFraction> fractions;
};

struct TableRow {
  std::string knot;
  int period;
  std::string js, js_star;
  std::vector<std::string> bs;
};

inline const std::vector<TableRow> table = {
    {"8_19", 2, "6", "0", {"0", "12"}},
    {"8_20", 3, "4/3", "-5", {"-10", "0", "8/3"}},
    {"8_21", 2, "1/2", "-6", {"-12", "-6", "-2", "0", "1"}},
    {"9_42", 2, "3", "-4", {"-8", "0", "8/3", "6"}},
    {"9_43", 3, "16/3", "-2", {"-4", "0", "6", "8", "32/3"}},
    {"9_44", 3, "7/3", "-5", {"-10", "-2", "0", "1", "2", "14/3"}},
    {"9_45", 2, "1/2", "-7", {"-14", "-10", "-8", "-4", "-2", "0", "1"}},
    {"9_46", 2, "1", "-6", {"-12", "0", "2"}},
    {"9_47", 2, "9/2", "-3", {"-6", "0", "4", "8", "9", "16"}},
    {"9_48", 2, "11/2", "-2", {"-4", "0", "4", "8", "11"}},
    {"9_49", 2, "15/2", "0", {"0", "4", "6", "12", "15"}},
};

// Period-2 closed forms read as c2 n^2 + c1 n + c0 + eps(n) with eps = +-(-1)^n/k.
// The period-3 forms carry an unspecified linear eps, so only c2 and the
// generating-function data are pinned down for them.
inline const std::vector<PrintedSequence> sequences = {
    {"8_19", false, {0, 3, 6, 9, 12, 15, 18, 21}, 1, {{"0", "3", "0"}}, "0", "(3z) / ((1 - z)^2)", {}},
    {"8_19", true, {0, 8, 23, 43, 70, 102, 141, 185}, 2, {{"3", "11/2", "0"}, {"3", "11/2", "-1/2"}}, "3",
     "(8z + 7z^2 - 3z^3) / ((1 - z)^3 (1 + z))", {{1, 3, "-1/4 + 9z - 11/4z^2"}, {2, 1, "1/4"}}},
    {"8_20", false, {0, -5, -15, -30, -50, -75, -105, -140, -180, -225, -275, -330, -390, -455, -525, -600, -680, -765, -855, -950, -1050},
     1, {{"-5/2", "-5/2", "0"}}, "-5/2", "(-5z) / ((1 - z)^3)", {}},
    {"8_20", true, {0, 1, 2, 7, 12, 16, 26, 35, 42, 57, 70, 80, 100, 117, 130, 155, 176, 192, 222, 247, 266}, 3, {}, "2/3",
     "(z + z^2 + 5z^3 + 3z^4 + 2z^5) / ((1 - z)^3 (1 + z + z^2)^2)",
     {{1, 3, "-2/9 + 4/3z + 2/9z^2"}, {3, 2, "2/9 + 7/9z + 4/9z^2 + 2/9z^3"}}},
    {"8_21", false, {0, -7, -20, -39, -64, -95, -132, -175}, 1, {{"-3", "-4", "0"}}, "-3", "(-7z + z^2) / ((1 - z)^3)", {}},
    {"8_21", true, {0, -1, -1, -1, 0, 1, 3, 5}, 2, {{"1/4", "-1", "0"}, {"1/4", "-1", "-1/4"}}, "1/4",
     "(-z + z^2 + z^3) / ((1 - z)^3 (1 + z))", {{1, 3, "-1/8 - 1/2z + 9/8z^2"}, {2, 1, "1/8"}}},
    {"9_42", false, {0, -3, -10, -21, -36, -55, -78, -105}, 1, {{"-2", "-1", "0"}}, "-2", "(-3z - z^2) / ((1 - z)^3)", {}},
    {"9_42", true, {0, 3, 10, 19, 32, 47, 66, 87}, 2, {{"3/2", "2", "0"}, {"3/2", "2", "-1/2"}}, "3/2",
     "(3z + 4z^2 - z^3) / ((1 - z)^3 (1 + z))", {{1, 3, "-1/4 + 4z - 3/4z^2"}, {2, 1, "1/4"}}},
    {"9_43", false, {0, 0, -2, -6, -12, -20, -30, -42}, 1, {{"-1", "1", "0"}}, "-1", "(-2z^2) / ((1 - z)^3)", {}},
    {"9_43", true, {0, 7, 17, 37, 60, 85, 122, 161}, 3, {}, "8/3",
     "(7z + 10z^2 + 20z^3 + 9z^4 + 5z^5 - 3z^6) / ((1 - z)^3 (1 + z + z^2)^2)",
     {{1, 3, "-5/9 + 8z - 19/9z^2"}, {3, 2, "5/9 + 16/9z + 13/9z^2 + 8/9z^3"}}},
    {"9_44", false, {0, -5, -15, -30, -50, -75, -105, -140}, 1, {{"-5/2", "-5/2", "0"}}, "-5/2", "(-5z) / ((1 - z)^3)", {}},
    {"9_44", true, {0, 2, 5, 13, 22, 31, 47, 63}, 3, {}, "7/6",
     "(2z + 3z^2 + 8z^3 + 5z^4 + 3z^5) / ((1 - z)^3 (1 + z + z^2)^2)",
     {{1, 3, "-2/9 + 7/3z + 2/9z^2"}, {3, 2, "2/9 + 7/9z + 4/9z^2 + 2/9z^3"}}},
    {"9_45", false, {0, -8, -23, -45, -74, -110, -153, -203}, 1, {{"-7/2", "-9/2", "0"}}, "-7/2", "(-8z + z^2) / ((1 - z)^3)", {}},
    {"9_45", true, {0, -1, -1, -1, 0, 1, 3, 5}, 2, {{"1/4", "-1", "0"}, {"1/4", "-1", "-1/4"}}, "1/4",
     "(-z + z^2 + z^3) / ((1 - z)^3 (1 + z))", {{1, 3, "-1/8 - 1/2z + 9/8z^2"}, {2, 1, "1/8"}}},
    {"9_46", false, {0, -6, -18, -36, -60, -90, -126, -168}, 1, {{"-3", "-3", "0"}}, "-3", "(-6z) / ((1 - z)^3)", {}},
    {"9_46", true, {0, 0, 2, 4, 8, 12, 18, 24}, 2, {{"1/2", "0", "0"}, {"1/2", "0", "-1/2"}}, "1/2",
     "(2z^2) / ((1 - z)^3 (1 + z))", {{1, 3, "-1/4 + z + 1/4z^2"}, {2, 1, "1/4"}}},
    {"9_47", false, {0, -2, -7, -15, -26, -40, -57, -77}, 1, {{"-3/2", "-1/2", "0"}}, "-3/2", "(-2z - z^2) / ((1 - z)^3)", {}},
    {"9_47", true, {0, 5, 15, 29, 48, 71, 99, 131}, 2, {{"9/4", "3", "0"}, {"9/4", "3", "-1/4"}}, "9/4",
     "(5z + 5z^2 - z^3) / ((1 - z)^3 (1 + z))", {{1, 3, "-1/8 + 11/2z - 7/8z^2"}, {2, 1, "1/8"}}},
    {"9_48", false, {0, -1, -4, -9, -16, -25}, 1, {{"-1", "0", "0"}}, "-1", "(-z - z^2) / ((1 - z)^3)", {}},
    {"9_48", true, {0, 6, 18, 35, 58, 86}, 2, {{"11/4", "7/2", "0"}, {"11/4", "7/2", "-1/4"}}, "11/4",
     "(6z + 6z^2 - z^3) / ((1 - z)^3 (1 + z))", {{1, 3, "-1/8 + 13/2z - 7/8z^2"}, {2, 1, "1/8"}}},
    {"9_49", false, {0, 2, 4, 6, 8, 10}, 1, {{"0", "2", "0"}}, "0", "(2z) / ((1 - z)^2)", {}},
    {"9_49", true, {0, 9, 26, 50, 82, 121}, 2, {{"15/4", "11/2", "0"}, {"15/4", "11/2", "-1/4"}}, "15/4",
     "(9z + 8z^2 - 2z^3) / ((1 - z)^3 (1 + z))", {{1, 3, "-1/8 + 19/2z - 15/8z^2"}, {2, 1, "1/8"}}},
};

}  // namespace fixtures

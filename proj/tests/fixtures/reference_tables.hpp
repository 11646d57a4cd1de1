#pragma once

// Reference left (kLeftTable) and right (kRightTable) multiplication tables of
// the octonions, transcribed verbatim. Entry (i,j) of the left table is the
// (i,j) coefficient of L_x as a signed coordinate of x = x_1 e_1 + ... + x_8 e_8.
namespace fixtures {

inline constexpr const char* kLeftTable[8] = {
    "x_1,-x_2,-x_3,-x_4,-x_5,-x_6,-x_7,-x_8",
    "x_2,x_1,-x_4,x_3,-x_6,x_5,x_8,-x_7",
    "x_3,x_4,x_1,-x_2,-x_7,-x_8,x_5,x_6",
    "x_4,-x_3,x_2,x_1,-x_8,x_7,-x_6,x_5",
    "x_5,x_6,x_7,x_8,x_1,-x_2,-x_3,-x_4",
    "x_6,-x_5,x_8,-x_7,x_2,x_1,x_4,-x_3",
    "x_7,-x_8,-x_5,x_6,x_3,-x_4,x_1,x_2",
    "x_8,x_7,-x_6,-x_5,x_4,x_3,-x_2,x_1"};

inline constexpr const char* kRightTable[8] = {
    "x_1,-x_2,-x_3,-x_4,-x_5,-x_6,-x_7,-x_8",
    "x_2,x_1,x_4,-x_3,x_6,-x_5,-x_8,x_7",
    "x_3,-x_4,x_1,x_2,x_7,x_8,-x_5,-x_6",
    "x_4,x_3,-x_2,x_1,x_8,-x_7,x_6,-x_5",
    "x_5,-x_6,-x_7,-x_8,x_1,x_2,x_3,x_4",
    "x_6,x_5,-x_8,x_7,-x_2,x_1,-x_4,x_3",
    "x_7,x_8,x_5,-x_6,-x_3,x_4,x_1,-x_2",
    "x_8,-x_7,x_6,x_5,-x_4,-x_3,x_2,x_1"};

}  // namespace fixtures

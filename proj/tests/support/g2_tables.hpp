#pragma once

// Reference data for the rank-2 seed with
//   B = [[0,-1],[1,0]],  Z_1 = 1 + z1_1 u + z1_2 u^2 + u^3,  Z_2 = 1 + u,
// along the word (1,2,1,2,1,2,1,2), states t = 1..9.  Polynomials are written
// in the library's text syntax; z1_1 and z1_2 are the two free coefficients
// of Z_1.  Left/right companion F-polynomials are written in the companion's
// own coefficients, which reuse the variables y1, y2.

namespace g2 {

inline constexpr int kWord[8] = {1, 2, 1, 2, 1, 2, 1, 2};

// Row-major 2x2 matrices per state.
inline constexpr int kC[9][4] = {
    {1, 0, 0, 1},  {-1, 0, 0, 1},  {-1, 0, 0, -1},  {1, -3, 0, -1}, {-2, 3, -1, 1},
    {2, -3, 1, -2}, {-1, 3, -1, 2}, {1, 0, 1, -1},  {1, 0, 0, 1}};

inline constexpr int kG[9][4] = {
    {1, 0, 0, 1},  {-1, 0, 0, 1},  {-1, 0, 0, -1},  {1, 0, -3, -1}, {1, 1, -3, -2},
    {2, 1, -3, -2}, {2, 1, -3, -1}, {1, 1, 0, -1},  {1, 0, 0, 1}};

inline const char* kF1[9] = {
    "1",
    "1 + z1_1*y1 + z1_2*y1^2 + y1^3",
    "1 + z1_1*y1 + z1_2*y1^2 + y1^3",
    "1 + 3*y2 + 3*y2^2 + y2^3 + 2*z1_1*y1*y2 + 4*z1_1*y1*y2^2 + 2*z1_1*y1*y2^3"
    " + z1_2*y1^2*y2 + z1_1^2*y1^2*y2^2 + 3*z1_2*y1^2*y2^2 + z1_1^2*y1^2*y2^3"
    " + 2*z1_2*y1^2*y2^3 + z1_1*z1_2*y1^3*y2^2 + 2*z1_1*z1_2*y1^3*y2^3"
    " + 3*y1^3*y2^2 + 2*y1^3*y2^3 + z1_1*y1^4*y2^2 + 2*z1_1*y1^4*y2^3"
    " + z1_2^2*y1^4*y2^3 + 2*z1_2*y1^5*y2^3 + y1^6*y2^3",
    "1 + 3*y2 + 3*y2^2 + y2^3 + 2*z1_1*y1*y2 + 4*z1_1*y1*y2^2 + 2*z1_1*y1*y2^3"
    " + z1_2*y1^2*y2 + z1_1^2*y1^2*y2^2 + 3*z1_2*y1^2*y2^2 + z1_1^2*y1^2*y2^3"
    " + 2*z1_2*y1^2*y2^3 + z1_1*z1_2*y1^3*y2^2 + 2*z1_1*z1_2*y1^3*y2^3"
    " + 3*y1^3*y2^2 + 2*y1^3*y2^3 + z1_1*y1^4*y2^2 + 2*z1_1*y1^4*y2^3"
    " + z1_2^2*y1^4*y2^3 + 2*z1_2*y1^5*y2^3 + y1^6*y2^3",
    "1 + 3*y2 + 3*y2^2 + y2^3 + z1_1*y1*y2 + 2*z1_1*y1*y2^2 + z1_1*y1*y2^3"
    " + z1_2*y1^2*y2^2 + z1_2*y1^2*y2^3 + y1^3*y2^3",
    "1 + 3*y2 + 3*y2^2 + y2^3 + z1_1*y1*y2 + 2*z1_1*y1*y2^2 + z1_1*y1*y2^3"
    " + z1_2*y1^2*y2^2 + z1_2*y1^2*y2^3 + y1^3*y2^3",
    "1",
    "1"};

inline const char* kF2[9] = {
    "1",
    "1",
    "1 + y2 + z1_1*y1*y2 + z1_2*y1^2*y2 + y1^3*y2",
    "1 + y2 + z1_1*y1*y2 + z1_2*y1^2*y2 + y1^3*y2",
    "1 + 2*y2 + y2^2 + z1_1*y1*y2 + z1_1*y1*y2^2 + z1_2*y1^2*y2^2 + y1^3*y2^2",
    "1 + 2*y2 + y2^2 + z1_1*y1*y2 + z1_1*y1*y2^2 + z1_2*y1^2*y2^2 + y1^3*y2^2",
    "1 + y2",
    "1 + y2",
    "1"};

// Cluster variables and coefficients per state, as displayed:
//   x_j(t) = x1^a x2^b * N(yhat, z) / N|_P(y, z)
//   y_j(t) = y1^c y2^d * (S|_P(y, z))^e
// N and S are stored in the plain y,z-variables; tests substitute the hat
// variables into N themselves.
struct XEntry {
  int a, b;
  const char* N;
};
struct YEntry {
  int c, d;
  const char* S;
  int e;
};

inline const char* kT1N2 = "1 + z1_1*y1 + z1_2*y1^2 + y1^3";
inline const char* kT1N3 = "1 + y2 + z1_1*y1*y2 + z1_2*y1^2*y2 + y1^3*y2";
inline const char* kT1N4 =
    "1 + 3*y2 + 3*y2^2 + y2^3 + 2*z1_1*y1*y2 + 4*z1_1*y1*y2^2 + 2*z1_1*y1*y2^3"
    " + z1_2*y1^2*y2 + z1_1^2*y1^2*y2^2 + 3*z1_2*y1^2*y2^2 + z1_1^2*y1^2*y2^3"
    " + 2*z1_2*y1^2*y2^3 + 3*y1^3*y2^2 + z1_1*z1_2*y1^3*y2^2 + 2*y1^3*y2^3"
    " + 2*z1_1*z1_2*y1^3*y2^3 + z1_1*y1^4*y2^2 + 2*z1_1*y1^4*y2^3"
    " + z1_2^2*y1^4*y2^3 + 2*z1_2*y1^5*y2^3 + y1^6*y2^3";
inline const char* kT1N5 =
    "1 + 2*y2 + y2^2 + z1_1*y1*y2 + z1_1*y1*y2^2 + z1_2*y1^2*y2^2 + y1^3*y2^2";
inline const char* kT1N6 =
    "1 + 3*y2 + 3*y2^2 + y2^3 + z1_1*y1*y2 + 2*z1_1*y1*y2^2 + z1_1*y1*y2^3"
    " + z1_2*y1^2*y2^2 + z1_2*y1^2*y2^3 + y1^3*y2^3";
inline const char* kT1N7 = "1 + y2";

inline const XEntry kX1[9] = {{1, 0, "1"},    {-1, 0, kT1N2}, {-1, 0, kT1N2},
                              {1, -3, kT1N4}, {1, -3, kT1N4}, {2, -3, kT1N6},
                              {2, -3, kT1N6}, {1, 0, "1"},    {1, 0, "1"}};
inline const XEntry kX2[9] = {{0, 1, "1"},    {0, 1, "1"},    {0, -1, kT1N3},
                              {0, -1, kT1N3}, {1, -2, kT1N5}, {1, -2, kT1N5},
                              {1, -1, kT1N7}, {1, -1, kT1N7}, {0, 1, "1"}};

inline const YEntry kY1[9] = {{1, 0, "1", 1},    {-1, 0, "1", 1},  {-1, 0, kT1N3, 1},
                              {1, 0, kT1N3, -1}, {-2, -1, kT1N5, 1}, {2, 1, kT1N5, -1},
                              {-1, -1, kT1N7, 1}, {1, 1, kT1N7, -1}, {1, 0, "1", 1}};
inline const YEntry kY2[9] = {{0, 1, "1", 1},     {0, 1, kT1N2, 1},  {0, -1, kT1N2, -1},
                              {-3, -1, kT1N4, 1}, {3, 1, kT1N4, -1}, {-3, -2, kT1N6, 1},
                              {3, 2, kT1N6, -1},  {0, -1, "1", 1},   {0, 1, "1", 1}};

// Left companion (exchange matrix DB = [[0,-3],[1,0]]).
inline constexpr int kLC[9][4] = {
    {1, 0, 0, 1},  {-1, 0, 0, 1},  {-1, 0, 0, -1},  {1, -3, 0, -1}, {-2, 3, -1, 1},
    {2, -3, 1, -2}, {-1, 3, -1, 2}, {1, 0, 1, -1},  {1, 0, 0, 1}};

inline constexpr int kLG[9][4] = {
    {1, 0, 0, 1},  {-1, 0, 0, 1},  {-1, 0, 0, -1},  {1, 0, -1, -1}, {1, 3, -1, -2},
    {2, 3, -1, -2}, {2, 3, -1, -1}, {1, 3, 0, -1},  {1, 0, 0, 1}};

inline const char* kLF1[9] = {
    "1",
    "1 + y1",
    "1 + y1",
    "1 + y2 + 2*y1*y2 + y1^2*y2",
    "1 + y2 + 2*y1*y2 + y1^2*y2",
    "1 + y2 + y1*y2",
    "1 + y2 + y1*y2",
    "1",
    "1"};

inline const char* kLF2[9] = {
    "1",
    "1",
    "1 + y2 + 3*y1*y2 + 3*y1^2*y2 + y1^3*y2",
    "1 + y2 + 3*y1*y2 + 3*y1^2*y2 + y1^3*y2",
    "1 + 2*y2 + y2^2 + 3*y1*y2 + 3*y1*y2^2 + 3*y1^2*y2^2 + y1^3*y2^2",
    "1 + 2*y2 + y2^2 + 3*y1*y2 + 3*y1*y2^2 + 3*y1^2*y2^2 + y1^3*y2^2",
    "1 + y2",
    "1 + y2",
    "1"};

// Right companion (exchange matrix BD = [[0,-1],[3,0]]).
inline constexpr int kRC[9][4] = {
    {1, 0, 0, 1},  {-1, 0, 0, 1},  {-1, 0, 0, -1},  {1, -1, 0, -1}, {-2, 1, -3, 1},
    {2, -1, 3, -2}, {-1, 1, -3, 2}, {1, 0, 3, -1},  {1, 0, 0, 1}};

inline constexpr int kRG[9][4] = {
    {1, 0, 0, 1},  {-1, 0, 0, 1},  {-1, 0, 0, -1},  {1, 0, -3, -1}, {1, 1, -3, -2},
    {2, 1, -3, -2}, {2, 1, -3, -1}, {1, 1, 0, -1},  {1, 0, 0, 1}};

inline const char* kRF1[9] = {
    "1",
    "1 + y1",
    "1 + y1",
    "1 + 3*y2 + 3*y2^2 + y2^3 + 3*y1*y2^2 + 2*y1*y2^3 + y1^2*y2^3",
    "1 + 3*y2 + 3*y2^2 + y2^3 + 3*y1*y2^2 + 2*y1*y2^3 + y1^2*y2^3",
    "1 + 3*y2 + 3*y2^2 + y2^3 + y1*y2^3",
    "1 + 3*y2 + 3*y2^2 + y2^3 + y1*y2^3",
    "1",
    "1"};

inline const char* kRF2[9] = {
    "1",
    "1",
    "1 + y2 + y1*y2",
    "1 + y2 + y1*y2",
    "1 + 2*y2 + y2^2 + y1*y2^2",
    "1 + 2*y2 + y2^2 + y1*y2^2",
    "1 + y2",
    "1 + y2",
    "1"};

}  // namespace g2

#pragma once

// Integer and polynomial invariants of a seed pattern, computed two ways.
//
// Route one: direct recursions along a mutation word.  Each state carries the
// exchange matrix, the coefficient matrix C, the grading matrix G, the
// numerator polynomials F_i in the formal y,z-variables, and the exchange
// coefficient lists (which reverse whenever their direction is mutated).
//
// Route two: mutate a seed with principal coefficients and read the same data
// off the resulting cluster functions (X), coefficient functions (Y), their
// tropical specializations (columns of C), and multidegrees (columns of G).
//
// The separation formulas then rebuild the variables of a seed with arbitrary
// coefficients from C, G, F and the initial data alone.

#include <string>
#include <vector>

#include "gca/seed.hpp"

namespace gca {

// One vertex of the recursion route.  At the empty word B is the input
// matrix, C = G = identity, every F_i = 1 and the coefficient lists are the
// formal 1, z_{i,1}, ..., z_{i,d_i-1}, 1.
struct PatternState {
  MutationWord word;
  IntMat B;
  IntMat C;
  IntMat G;
  std::vector<LaurentPoly> F;
  // zeta[i][s] is the degree-s coefficient of direction i's exchange
  // polynomial at this vertex, as a monomial in the formal z-variables.
  std::vector<std::vector<LaurentPoly>> zeta;
};

PatternState initial_pattern(const IntMat& B, const std::vector<std::int64_t>& d);

// States after every prefix of the freely reduced word: front is the initial
// state, back the full word.  One step in direction k updates
//   C:  c'_ik = -c_ik,  c'_ij = c_ij + c_ik [d_k b_kj]_+ + [-c_ik]_+ d_k b_kj
//   G:  g'_ik = -g_ik + sum_l g_il [-b_lk d_k]_+ - sum_l b0_il [-c_lk d_k]_+
//       where b0 is the *initial* exchange matrix; with that choice, and only
//       that choice, G tracks the multidegrees of the cluster functions
//   F:  F'_k = (sum_s zeta_ks P^s Q^(d_k-s)) / F_k  (the division is exact),
//       P = prod_i y_i^[c_ik]_+ F_i^[b_ik]_+,  Q the same with negative parts
// with B advancing by matrix_mutate and zeta_k reversing.  All right-hand
// sides use the pre-step values.
std::vector<PatternState> pattern_along(const IntMat& B, const std::vector<std::int64_t>& d,
                                        const MutationWord& w);

// Final-state projections of pattern_along.
IntMat c_matrix_rec(const IntMat& B, const std::vector<std::int64_t>& d, const MutationWord& w);
IntMat g_matrix_rec(const IntMat& B, const std::vector<std::int64_t>& d, const MutationWord& w);
std::vector<LaurentPoly> f_polys_rec(const IntMat& B, const std::vector<std::int64_t>& d,
                                     const MutationWord& w);

// One vertex of the principal-coefficient route.  X_i are the cluster
// variables of the tropical principal-coefficient seed, elements of the
// ambient field in the x,y,z-variables; y_trop are that seed's coefficients
// (monomials whose y-exponents are the columns of C); Y_j are the coefficient
// functions computed over the universal semifield in the y,z-variables.
struct XYState {
  MutationWord word;
  std::vector<RatFunc> X;
  std::vector<SemifieldElement> y_trop;
  std::vector<SemifieldElement> Y;
};

// States after every prefix of the word.  Only the degrees of Z matter here:
// the coefficients are taken formally, exactly as in the recursion route.
std::vector<XYState> xy_functions(const IntMat& B, const std::vector<ExchangePoly>& Z,
                                  const MutationWord& w);

// Reads the coefficient matrix off tropical coefficients: column j holds the
// y-exponents of y[j].  Throws NonMonomialTropicalImage if an entry is not
// tropical and NonZeroZExponent if a z-variable survives in an exponent.
IntMat c_from_tropical(const std::vector<SemifieldElement>& y, int n);

// Reads the grading matrix off cluster functions: column j is the multidegree
// of X[j] under deg(x_i) = e_i, deg(y_j) = -(column j of B), deg(z) = 0.
// Throws Inhomogeneous when some X[j] is not homogeneous.
IntMat g_from_grading(const std::vector<RatFunc>& X, const IntMat& B);

// Coefficients and cluster variables of apply_word(s, w), rebuilt from the
// recursion route and the initial seed only:
//   y^w_j = (prod_i y_i^{c_ij}) prod_i (F_i|_P)^{b^w_ij}
//   x^w_j = (prod_i x_i^{g_ij}) F_j(yhat, z) / F_j|_P(y, z)
// F|_P evaluates the polynomial in the seed's semifield (+ becomes oplus)
// with the seed's y-values and exchange coefficients; F(yhat, z) substitutes
// the hat variables and the coefficients in the ambient field.
std::vector<SemifieldElement> y_via_separation(const GenSeed& s, const MutationWord& w);
std::vector<RatFunc> x_via_separation(const GenSeed& s, const MutationWord& w);

// The seed at every prefix of the freely reduced word (front the input seed,
// back the full word): B and Z advance with the recursion route and x, y are
// rebuilt per state by the separation formulas above.  The values agree with
// chaining mutate(), but each state is assembled from the initial seed's
// small pieces, so intermediate expressions never grow past the printed
// answers.  Prefer this to repeated mutate() for walking long words over the
// universal semifield, where step-by-step fraction arithmetic compounds.
std::vector<GenSeed> seeds_via_separation(const GenSeed& s, const MutationWord& w);

// Final state of seeds_via_separation.
GenSeed seed_via_separation(const GenSeed& s, const MutationWord& w);

// Soft checks no construction relies on: a human-readable note for every F_i
// with a negative coefficient or with y-free part different from 1.
std::vector<std::string> f_poly_warnings(const std::vector<LaurentPoly>& F);

}  // namespace gca

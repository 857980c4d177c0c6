#pragma once

// Left and right companion cluster algebras of a generalized seed, the
// z-specializations connecting their F-polynomials, and machine checks of
// the identities tying companion invariants to the generalized ones.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gca/invariants.hpp"
#include "gca/seed.hpp"

namespace gca {

enum class CompanionSide { Left, Right };

// An ordinary cluster algebra (every exchange degree 1, Z = 1 + u) attached
// to a generalized seed.  The left companion trades each cluster variable
// x_i for a formal d_i-th root u_i — the relation u_i^{d_i} = x_i is applied
// only at comparison time, never as a symbolic fractional power — keeps the
// coefficients y, and exchanges along D*B.  The right companion keeps the
// cluster x, raises the coefficients to y_i^{d_i}, and exchanges along B*D.
// Both reuse the parent's coefficient semifield.
struct CompanionPair {
  CompanionSide side{CompanionSide::Left};
  GenSeed parent;
  GenSeed companion;
};

CompanionPair left_companion(const GenSeed& s);
CompanionPair right_companion(const GenSeed& s);

// Values for the z-variables of F-polynomials and seed expressions.
// Binomial sends z_{i,s} to C(d_i, s); Zero sends every z-variable to 0,
// dropping any term with a z-factor; Custom uses the explicit map.
struct ZSpecialization {
  enum class Mode { Binomial, Zero, Custom };
  Mode mode{Mode::Binomial};
  std::map<VarId, mpz_class> values;  // consulted in Custom mode only

  static ZSpecialization binomial() { return {Mode::Binomial, {}}; }
  static ZSpecialization zero() { return {Mode::Zero, {}}; }
  static ZSpecialization custom(std::map<VarId, mpz_class> v) {
    return {Mode::Custom, std::move(v)};
  }
};

// F with every z-variable replaced by its specialized integer value.  d
// lists the exchange degrees, indexed by the z-variables' first index.
// Requires nonnegative z-exponents unless the value is 1.
LaurentPoly specialize_z(const LaurentPoly& F, const ZSpecialization& spec,
                         const std::vector<std::int64_t>& d);

// One word prefix's worth of companion identity checks.
struct CompanionCheck {
  MutationWord prefix;
  bool c_transform{false};  // companion C-matrix matches the transformed C
  bool g_transform{false};  // companion G-matrix matches the transformed G
  bool f_special{false};    // specialized F equals the companion F image
  bool variables{false};    // cluster variables and coefficients match
  bool pass() const { return c_transform && g_transform && f_special && variables; }
};

struct CompanionReport {
  CompanionSide side{CompanionSide::Left};
  std::vector<CompanionCheck> checks;  // one per prefix, empty word first
  bool pass{true};                     // true iff every record passes
  std::string counterexample;          // first failing identity, rendered
};

// At every prefix of w, checks the left-companion identities:
//   (a) the companion C-matrix equals the generalized one,
//   (b) the companion G-matrix equals (d_i g_ij / d_j) with exact integer
//       division (a non-integer entry is a reported counterexample),
//   (c) F_j(y, z^bin) = (companion F_j)^{d_j},
//   (d) x^t_i|_{z^bin} = (companion x^t_i)^{d_i} under u_i^{d_i} = x_i, and
//       y^t_j|_{z^bin} = companion y^t_j.
// Failures are carried in the report, never thrown.
CompanionReport verify_left(const GenSeed& s, const MutationWord& w);

// Right-companion counterpart:
//   (a) the companion G-matrix equals the generalized one,
//   (b) the companion C-matrix equals (c_ij d_j / d_i) with exact division,
//   (c) F_j(y, 0) = companion F_j evaluated at y_i^{d_i},
//   (d) x^t_i|_{z=0} = companion x^t_i, and
//       (y^t_j|_{z=0})^{d_j} = companion y^t_j.
CompanionReport verify_right(const GenSeed& s, const MutationWord& w);

}  // namespace gca

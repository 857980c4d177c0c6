#pragma once

// Sparse Laurent polynomials with arbitrary-precision integer coefficients,
// their fraction pairs, substitutions and multidegrees.  Everything downstream
// (seeds, invariants, companions) is built on these types.

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gca/errors.hpp"

namespace gca {

// Formal variables, totally ordered by kind X < Y < Z < U, then by index.
// Z-variables carry a second index: z(i,s) is the degree-s coefficient of the
// i-th exchange polynomial.  U-variables are the formal d_i-th roots of the
// x_i used by left companions.
enum class VarKind : std::uint8_t { X = 0, Y = 1, Z = 2, U = 3 };

struct VarId {
  VarKind kind{VarKind::X};
  std::int32_t i{0};
  std::int32_t s{0};

  friend constexpr auto operator<=>(const VarId&, const VarId&) = default;
};

constexpr VarId xvar(int i) { return {VarKind::X, i, 0}; }
constexpr VarId yvar(int i) { return {VarKind::Y, i, 0}; }
constexpr VarId zvar(int i, int s) { return {VarKind::Z, i, s}; }
constexpr VarId uvar(int i) { return {VarKind::U, i, 0}; }

// Term-count guard.  Reads GCA_MAX_TERMS once (default 1e6); tests may lower
// it explicitly.
std::size_t max_terms();
void set_max_terms(std::size_t cap);

// A Laurent monomial: sorted (VarId, exponent) pairs, exponents nonzero.
class Monomial {
 public:
  using Exp = std::int64_t;
  using Factors = std::vector<std::pair<VarId, Exp>>;

  Monomial() = default;
  static Monomial var(VarId v, Exp e = 1);
  // Takes any factor list, sorts and merges it.
  static Monomial from_factors(Factors f);

  const Factors& factors() const { return f_; }
  Exp exponent(VarId v) const;
  bool is_one() const { return f_.empty(); }
  Exp total_degree() const;
  bool all_nonnegative() const;

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(Exp k) const;
  // Componentwise: does m divide this with nonnegative quotient exponents?
  bool divisible_by(const Monomial& m) const;
  // Componentwise minimum of exponents (variables absent count as 0).
  static Monomial componentwise_min(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial&) const = default;
  // Graded lex: total degree first, then the first variable (in VarId order)
  // with differing exponent decides, larger exponent means larger monomial.
  std::strong_ordering operator<=>(const Monomial& o) const;

 private:
  Factors f_;
};

class LaurentPoly {
 public:
  using Coef = mpz_class;
  using Terms = std::map<Monomial, Coef>;

  LaurentPoly() = default;  // zero
  static LaurentPoly constant(Coef c);
  static LaurentPoly constant(long c) { return constant(Coef(c)); }
  static LaurentPoly var(VarId v, Monomial::Exp e = 1);
  static LaurentPoly term(Monomial m, Coef c);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return t_.size(); }
  bool is_monomial() const { return t_.size() == 1 && t_.begin()->second == 1; }
  // Single-term polys with any coefficient; first of the pair is the monomial.
  bool is_single_term() const { return t_.size() == 1; }
  Coef coefficient(const Monomial& m) const;
  Coef constant_term() const { return coefficient(Monomial()); }
  bool has_negative_coef() const;
  // Every variable occurring in any term, each listed once.
  std::vector<VarId> support() const;
  bool depends_on(VarId v) const;

  // gcd of all coefficients (positive; 0 for the zero poly).
  Coef content() const;
  // Componentwise minimum exponent over all terms (identity for zero poly).
  Monomial monomial_gcd() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly mul_term(const Monomial& m, const Coef& c) const;
  LaurentPoly pow(unsigned k) const;
  // Divides every coefficient exactly; throws InexactDivision otherwise.
  LaurentPoly div_content(const Coef& c) const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  Terms t_;
  void insert(Monomial m, Coef c);
  void check_cap() const;
  friend LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
};

// Exact multivariate division: returns q with a == q*b, integer coefficients.
// Throws InexactDivision if b does not divide a over the integers.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

// Greatest common divisor over the integers, computed by evaluation at large
// integer points with division-verified digit lifting, falling back to
// primitive remainder sequences.  The common monomial factor (componentwise
// minimum exponents, possibly negative for Laurent inputs) is included; the
// result has a positive leading coefficient.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// A fraction of Laurent polynomials.  Normalized so the common monomial and
// polynomial gcd factors are cancelled, the denominator has a positive
// leading coefficient, and the integer content is reduced — except that a
// cancellation introducing negative coefficients into a subtraction-free
// fraction is skipped, so positive representations stay positive.  Equality
// tests cross-multiply.
class RatFunc {
 public:
  RatFunc() : num_(), den_(LaurentPoly::constant(1)) {}
  RatFunc(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::constant(1)) { normalize(); }
  RatFunc(LaurentPoly num, LaurentPoly den);
  static RatFunc var(VarId v, Monomial::Exp e = 1) { return RatFunc(LaurentPoly::var(v, e)); }
  static RatFunc constant(long c) { return RatFunc(LaurentPoly::constant(c)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc pow(std::int64_t k) const;

  // Value equality by cross-multiplication.
  bool equals(const RatFunc& o) const;

  // Requires the denominator to be a single term dividing the numerator
  // exactly; folds it in and returns a plain Laurent polynomial.
  LaurentPoly as_laurent() const;

 private:
  LaurentPoly num_, den_;
  void normalize();
};

// Variable images for substitution.  An entry set with set_root(v, m, img)
// maps v^m -> img and requires every exponent of v to be divisible by m.
class Substitution {
 public:
  struct Entry {
    std::int64_t root{1};
    RatFunc image;
  };

  Substitution& set(VarId v, RatFunc image);
  Substitution& set_root(VarId v, std::int64_t m, RatFunc image);
  const Entry* find(VarId v) const;

 private:
  std::map<VarId, Entry> m_;
};

// Evaluates p under the substitution.  Every variable occurring in p must be
// assigned (MissingAssignment); root entries with non-divisible exponents
// raise NoIntegralRoot.
RatFunc substitute(const LaurentPoly& p, const Substitution& s);
RatFunc substitute(const RatFunc& f, const Substitution& s);

// Multidegrees in Z^n.  Every variable a polynomial touches needs a degree
// vector; multidegree() insists all terms agree (Inhomogeneous otherwise).
class Grading {
 public:
  explicit Grading(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  Grading& set(VarId v, std::vector<std::int64_t> deg);
  const std::vector<std::int64_t>& deg(VarId v) const;

  std::vector<std::int64_t> multidegree(const LaurentPoly& p) const;

 private:
  int dim_;
  std::map<VarId, std::vector<std::int64_t>> deg_;
};

}  // namespace gca

#pragma once

// Two concrete semifields and the specialization homomorphism between them:
// the tropical semifield (monomials in the generators, oplus = componentwise
// min of exponents) and the universal subtraction-free semifield (fractions
// of positive polynomials, oplus = +).

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "gca/poly.hpp"

namespace gca {

enum class SemifieldKind { Tropical, Universal };

// A Laurent monomial in the semifield generators.
class TropElement {
 public:
  TropElement() = default;  // the unit
  explicit TropElement(Monomial m) : m_(std::move(m)) {}
  static TropElement generator(VarId v, Monomial::Exp e = 1) {
    return TropElement(Monomial::var(v, e));
  }

  const Monomial& monomial() const { return m_; }
  bool is_one() const { return m_.is_one(); }

  TropElement operator*(const TropElement& o) const { return TropElement(m_ * o.m_); }
  TropElement operator/(const TropElement& o) const { return TropElement(m_ * o.m_.inverse()); }
  TropElement oplus(const TropElement& o) const {
    return TropElement(Monomial::componentwise_min(m_, o.m_));
  }
  TropElement pow(std::int64_t k) const { return TropElement(m_.pow(k)); }
  // Exact d-th root; every exponent must be divisible (NoIntegralRoot).
  TropElement root(std::int64_t d) const;

  bool operator==(const TropElement&) const = default;

 private:
  Monomial m_;
};

// A ratio of polynomials with strictly positive integer coefficients and
// nonnegative exponents.  Subtraction does not exist for this type.
class UsfElement {
 public:
  UsfElement() : v_(LaurentPoly::constant(1)) {}
  // Validates positivity of both sides (NonPositiveInput).
  explicit UsfElement(RatFunc v);
  UsfElement(LaurentPoly num, LaurentPoly den) : UsfElement(RatFunc(std::move(num), std::move(den))) {}
  static UsfElement generator(VarId v) { return UsfElement(RatFunc::var(v)); }
  static UsfElement constant(long c) { return UsfElement(RatFunc::constant(c)); }

  const RatFunc& value() const { return v_; }
  const LaurentPoly& num() const { return v_.num(); }
  const LaurentPoly& den() const { return v_.den(); }
  bool is_one() const { return v_.num().is_one() && v_.den().is_one(); }

  UsfElement operator*(const UsfElement& o) const { return UsfElement(v_ * o.v_); }
  UsfElement operator/(const UsfElement& o) const { return UsfElement(v_ / o.v_); }
  UsfElement oplus(const UsfElement& o) const { return UsfElement(v_ + o.v_); }
  UsfElement pow(std::int64_t k) const { return UsfElement(v_.pow(k)); }

  // Value equality by cross-multiplication.
  bool equals(const UsfElement& o) const { return v_.equals(o.v_); }

 private:
  RatFunc v_;
};

inline UsfElement usf_normalize(LaurentPoly num, LaurentPoly den) {
  return UsfElement(std::move(num), std::move(den));
}
inline bool usf_equal(const UsfElement& a, const UsfElement& b) { return a.equals(b); }

using SemifieldElement = std::variant<TropElement, UsfElement>;

SemifieldKind kind_of(const SemifieldElement& e);
SemifieldElement sf_mul(const SemifieldElement& a, const SemifieldElement& b);
SemifieldElement sf_div(const SemifieldElement& a, const SemifieldElement& b);
SemifieldElement sf_oplus(const SemifieldElement& a, const SemifieldElement& b);
SemifieldElement sf_pow(const SemifieldElement& a, std::int64_t k);
// Exact d-th root; RootUnavailable in the universal semifield.
SemifieldElement sf_root(const SemifieldElement& a, std::int64_t d);
bool sf_equal(const SemifieldElement& a, const SemifieldElement& b);
// Embedding into the ambient field of rational expressions.
RatFunc sf_embed(const SemifieldElement& a);

// A semifield instance: kind plus its generator list.
struct Semifield {
  SemifieldKind kind{SemifieldKind::Universal};
  std::vector<VarId> generators;

  SemifieldElement one() const;
  SemifieldElement generator(VarId v) const;  // MissingAssignment if unknown
  bool has_generator(VarId v) const;
  bool operator==(const Semifield&) const = default;
};

// Tropical evaluation of a polynomial with positive coefficients: oplus over
// terms of the product of assigned images; integer coefficients map to 1.
TropElement trop_eval(const LaurentPoly& expr, const std::map<VarId, TropElement>& assignment);

// The semifield homomorphism determined by the generator assignment (+ -> oplus,
// positive integers -> 1 oplus ... oplus 1, generators -> images).
SemifieldElement sf_specialize(const RatFunc& expr, const Semifield& target,
                               const std::map<VarId, SemifieldElement>& assignment);

std::string to_string(const TropElement& e);
std::string to_string(const UsfElement& e);  // sums print with an oplus sign
std::string to_string(const SemifieldElement& e);

}  // namespace gca

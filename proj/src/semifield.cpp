#include "gca/semifield.hpp"

#include <algorithm>

#include "gca/textio.hpp"

namespace gca {

TropElement TropElement::root(std::int64_t d) const {
  if (d <= 0) throw NoIntegralRoot("root order must be positive");
  Monomial::Factors f;
  for (const auto& [v, e] : m_.factors()) {
    if (e % d != 0)
      throw NoIntegralRoot("tropical exponent of " + var_name(v) + " not divisible by " +
                           std::to_string(d));
    f.push_back({v, e / d});
  }
  return TropElement(Monomial::from_factors(std::move(f)));
}

UsfElement::UsfElement(RatFunc v) : v_(std::move(v)) {
  if (v_.num().is_zero()) throw NonPositiveInput("subtraction-free element cannot be zero");
  if (v_.num().has_negative_coef() || v_.den().has_negative_coef())
    throw NonPositiveInput("subtraction-free element with a negative coefficient");
}

SemifieldKind kind_of(const SemifieldElement& e) {
  return std::holds_alternative<TropElement>(e) ? SemifieldKind::Tropical
                                                : SemifieldKind::Universal;
}

namespace {

[[noreturn]] void mixed() { throw Error("mixing elements of different semifields"); }

}  // namespace

SemifieldElement sf_mul(const SemifieldElement& a, const SemifieldElement& b) {
  if (kind_of(a) != kind_of(b)) mixed();
  if (auto* t = std::get_if<TropElement>(&a)) return *t * std::get<TropElement>(b);
  return std::get<UsfElement>(a) * std::get<UsfElement>(b);
}

SemifieldElement sf_div(const SemifieldElement& a, const SemifieldElement& b) {
  if (kind_of(a) != kind_of(b)) mixed();
  if (auto* t = std::get_if<TropElement>(&a)) return *t / std::get<TropElement>(b);
  return std::get<UsfElement>(a) / std::get<UsfElement>(b);
}

SemifieldElement sf_oplus(const SemifieldElement& a, const SemifieldElement& b) {
  if (kind_of(a) != kind_of(b)) mixed();
  if (auto* t = std::get_if<TropElement>(&a)) return t->oplus(std::get<TropElement>(b));
  return std::get<UsfElement>(a).oplus(std::get<UsfElement>(b));
}

SemifieldElement sf_pow(const SemifieldElement& a, std::int64_t k) {
  if (auto* t = std::get_if<TropElement>(&a)) return t->pow(k);
  return std::get<UsfElement>(a).pow(k);
}

SemifieldElement sf_root(const SemifieldElement& a, std::int64_t d) {
  if (d == 1) return a;
  if (auto* t = std::get_if<TropElement>(&a)) return t->root(d);
  throw RootUnavailable("d-th roots are not computable in the universal semifield");
}

bool sf_equal(const SemifieldElement& a, const SemifieldElement& b) {
  if (kind_of(a) != kind_of(b)) mixed();
  if (auto* t = std::get_if<TropElement>(&a)) return *t == std::get<TropElement>(b);
  return std::get<UsfElement>(a).equals(std::get<UsfElement>(b));
}

RatFunc sf_embed(const SemifieldElement& a) {
  if (auto* t = std::get_if<TropElement>(&a))
    return RatFunc(LaurentPoly::term(t->monomial(), 1));
  return std::get<UsfElement>(a).value();
}

SemifieldElement Semifield::one() const {
  if (kind == SemifieldKind::Tropical) return TropElement();
  return UsfElement();
}

SemifieldElement Semifield::generator(VarId v) const {
  if (!has_generator(v))
    throw MissingAssignment("not a generator of this semifield: " + var_name(v));
  if (kind == SemifieldKind::Tropical) return TropElement::generator(v);
  return UsfElement::generator(v);
}

bool Semifield::has_generator(VarId v) const {
  return std::find(generators.begin(), generators.end(), v) != generators.end();
}

TropElement trop_eval(const LaurentPoly& expr,
                      const std::map<VarId, TropElement>& assignment) {
  if (expr.is_zero()) throw NonPositiveInput("tropical evaluation of the zero polynomial");
  bool first = true;
  TropElement acc;
  for (const auto& [m, c] : expr.terms()) {
    if (c < 0) throw NegativeCoefficient("tropical evaluation of a negative coefficient");
    TropElement t;  // the coefficient itself maps to 1
    for (const auto& [v, e] : m.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        throw MissingAssignment("no tropical image for " + var_name(v));
      t = t * it->second.pow(e);
    }
    acc = first ? t : acc.oplus(t);
    first = false;
  }
  return acc;
}

namespace {

SemifieldElement eval_positive_poly(const LaurentPoly& p, const Semifield& target,
                                    const std::map<VarId, SemifieldElement>& assignment) {
  if (p.is_zero()) throw NonPositiveInput("specializing a zero polynomial");
  bool first = true;
  SemifieldElement acc = target.one();
  for (const auto& [m, c] : p.terms()) {
    if (c < 0) throw NegativeCoefficient("specializing an expression with a negative coefficient");
    SemifieldElement t = target.one();
    if (target.kind == SemifieldKind::Universal && c != 1)
      t = UsfElement(RatFunc(LaurentPoly::constant(c)));
    for (const auto& [v, e] : m.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        throw MissingAssignment("no semifield image for " + var_name(v));
      if (kind_of(it->second) != target.kind) mixed();
      t = sf_mul(t, sf_pow(it->second, e));
    }
    acc = first ? t : sf_oplus(acc, t);
    first = false;
  }
  return acc;
}

}  // namespace

SemifieldElement sf_specialize(const RatFunc& expr, const Semifield& target,
                               const std::map<VarId, SemifieldElement>& assignment) {
  return sf_div(eval_positive_poly(expr.num(), target, assignment),
                eval_positive_poly(expr.den(), target, assignment));
}

std::string to_string(const TropElement& e) { return to_string(e.monomial()); }

std::string to_string(const UsfElement& e) {
  if (e.den().is_one()) return to_string(e.num(), " \xE2\x8A\x95 ");
  return "(" + to_string(e.num(), " \xE2\x8A\x95 ") + ") / (" +
         to_string(e.den(), " \xE2\x8A\x95 ") + ")";
}

std::string to_string(const SemifieldElement& e) {
  if (auto* t = std::get_if<TropElement>(&e)) return to_string(*t);
  return to_string(std::get<UsfElement>(e));
}

}  // namespace gca

#include "gca/companion.hpp"

#include <exception>
#include <utility>

#include "gca/errors.hpp"
#include "gca/textio.hpp"

namespace gca {

namespace {

std::vector<ExchangePoly> ordinary_exchange(int n) {
  std::vector<ExchangePoly> Z;
  Z.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) Z.push_back(ExchangePoly::formal(i, 1));
  return Z;
}

// The specialized integer value of one z-variable.
mpz_class z_value(VarId v, const ZSpecialization& spec, const std::vector<std::int64_t>& d) {
  switch (spec.mode) {
    case ZSpecialization::Mode::Binomial: {
      if (v.i < 1 || v.i > static_cast<int>(d.size()))
        throw DimensionMismatch("z-variable index outside the degree list");
      mpz_class val;
      mpz_bin_uiui(val.get_mpz_t(), static_cast<unsigned long>(d[static_cast<std::size_t>(v.i - 1)]),
                   static_cast<unsigned long>(v.s));
      return val;
    }
    case ZSpecialization::Mode::Zero:
      return 0;
    case ZSpecialization::Mode::Custom: {
      auto it = spec.values.find(v);
      if (it == spec.values.end()) throw MissingAssignment("no value for " + var_name(v));
      return it->second;
    }
  }
  throw Error("unknown z-specialization mode");
}

// Semifield-level z-specialization.  Tropically every positive integer value
// is the unit, so z-factors are erased; a zero value would need a tropical
// zero, which does not exist, so it is an error (mutated tropical
// coefficients carry no z-factors, so this never triggers on seed walks).
SemifieldElement specialize_z_sf(const SemifieldElement& a, const ZSpecialization& spec,
                                 const std::vector<std::int64_t>& d) {
  if (const TropElement* t = std::get_if<TropElement>(&a)) {
    Monomial::Factors rest;
    for (const auto& [v, e] : t->monomial().factors()) {
      if (v.kind != VarKind::Z) {
        rest.emplace_back(v, e);
        continue;
      }
      if (z_value(v, spec, d) == 0)
        throw InexactDivision("tropical coefficient with a z-factor has no value at z = 0");
    }
    return TropElement(Monomial::from_factors(std::move(rest)));
  }
  const UsfElement& u = std::get<UsfElement>(a);
  return UsfElement(RatFunc(specialize_z(u.num(), spec, d), specialize_z(u.den(), spec, d)));
}

// The companion F-polynomials of a right companion are written in its own
// coefficients y_i^{d_i}; this maps them back to the parent's y-variables.
LaurentPoly at_y_powers(const LaurentPoly& f, const std::vector<std::int64_t>& d) {
  LaurentPoly out;
  for (const auto& [m, c] : f.terms()) {
    Monomial::Factors fac;
    for (const auto& [v, e] : m.factors()) {
      const bool scale = v.kind == VarKind::Y && v.i >= 1 && v.i <= static_cast<int>(d.size());
      fac.emplace_back(v, scale ? e * d[static_cast<std::size_t>(v.i - 1)] : e);
    }
    out += LaurentPoly::term(Monomial::from_factors(std::move(fac)), c);
  }
  return out;
}

std::string entry_text(const char* name, int i, int j, std::int64_t v) {
  return std::string(name) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
         ") = " + std::to_string(v);
}

CompanionReport verify_side(const GenSeed& s, const MutationWord& w, CompanionSide side) {
  CompanionReport rep;
  rep.side = side;
  const char* tag = side == CompanionSide::Left ? "left" : "right";
  const MutationWord r = w.reduced();
  const auto d = s.degrees();
  const int n = s.n;
  const std::vector<std::int64_t> ones(static_cast<std::size_t>(n), 1);
  const ZSpecialization spec =
      side == CompanionSide::Left ? ZSpecialization::binomial() : ZSpecialization::zero();

  auto note = [&rep](const std::string& text) {
    if (rep.counterexample.empty()) rep.counterexample = text;
    rep.pass = false;
  };

  try {
    CompanionPair cp = side == CompanionSide::Left ? left_companion(s) : right_companion(s);
    const std::vector<PatternState> gen = pattern_along(s.B, d, r);
    const std::vector<PatternState> com = pattern_along(cp.companion.B, ones, r);

    // Ambient substitution applying the z-specialization and, on the left,
    // the root relation x_i = u_i^{d_i}.
    Substitution sub;
    for (int i = 0; i < n; ++i) {
      if (side == CompanionSide::Left)
        sub.set(xvar(i + 1), RatFunc::var(uvar(i + 1), d[static_cast<std::size_t>(i)]));
      else
        sub.set(xvar(i + 1), RatFunc::var(xvar(i + 1)));
      sub.set(yvar(i + 1), RatFunc::var(yvar(i + 1)));
      for (int t = 1; t < s.Z[static_cast<std::size_t>(i)].degree(); ++t) {
        const VarId zv = zvar(i + 1, t);
        sub.set(zv, RatFunc(LaurentPoly::constant(z_value(zv, spec, d))));
      }
    }

    const std::vector<GenSeed> gwalk = seeds_via_separation(s, r);
    const std::vector<GenSeed> cwalk = seeds_via_separation(cp.companion, r);
    for (std::size_t p = 0;; ++p) {
      const GenSeed& gcur = gwalk[p];
      const GenSeed& ccur = cwalk[p];
      CompanionCheck chk;
      chk.prefix = r.prefix(p);
      const std::string at = " at prefix '" + chk.prefix.str() + "'";

      // (a)/(b): the untransformed matrix identity and the entrywise
      // transform with exact integer division.
      {
        const IntMat& same_com = side == CompanionSide::Left ? com[p].C : com[p].G;
        const IntMat& same_gen = side == CompanionSide::Left ? gen[p].C : gen[p].G;
        bool& same_flag = side == CompanionSide::Left ? chk.c_transform : chk.g_transform;
        same_flag = same_com == same_gen;
        if (!same_flag)
          note(std::string(tag) + " companion " +
               (side == CompanionSide::Left ? "C" : "G") + "-matrix differs" + at + ": " +
               to_string(same_com) + " vs " + to_string(same_gen));

        const IntMat& src = side == CompanionSide::Left ? gen[p].G : gen[p].C;
        const IntMat& dst = side == CompanionSide::Left ? com[p].G : com[p].C;
        IntMat want(n, n);
        bool exact = true;
        for (int i = 0; i < n && exact; ++i)
          for (int j = 0; j < n && exact; ++j) {
            // left: d_i g_ij / d_j;  right: c_ij d_j / d_i.
            const std::int64_t num = side == CompanionSide::Left
                                         ? d[static_cast<std::size_t>(i)] * src(i, j)
                                         : src(i, j) * d[static_cast<std::size_t>(j)];
            const std::int64_t den = side == CompanionSide::Left
                                         ? d[static_cast<std::size_t>(j)]
                                         : d[static_cast<std::size_t>(i)];
            if (num % den != 0) {
              exact = false;
              note(std::string(tag) + " companion entry transform is not an integer" + at +
                   ": " + entry_text(side == CompanionSide::Left ? "g" : "c", i, j, src(i, j)));
            } else {
              want(i, j) = num / den;
            }
          }
        bool& trans_flag = side == CompanionSide::Left ? chk.g_transform : chk.c_transform;
        trans_flag = exact && dst == want;
        if (exact && !trans_flag)
          note(std::string(tag) + " companion " +
               (side == CompanionSide::Left ? "G" : "C") +
               "-matrix differs from the entrywise transform" + at + ": " + to_string(dst) +
               " vs " + to_string(want));
      }

      // (c): F-polynomial specialization identities.
      bool fok = true;
      for (int j = 0; j < n && fok; ++j) {
        const LaurentPoly lhs = specialize_z(gen[p].F[static_cast<std::size_t>(j)], spec, d);
        const LaurentPoly rhs =
            side == CompanionSide::Left
                ? com[p].F[static_cast<std::size_t>(j)].pow(
                      static_cast<unsigned>(d[static_cast<std::size_t>(j)]))
                : at_y_powers(com[p].F[static_cast<std::size_t>(j)], d);
        if (!(lhs == rhs)) {
          fok = false;
          note(std::string(tag) + " companion F-identity fails" + at + " in direction " +
               std::to_string(j + 1) + ": " + to_string(lhs) + " vs " + to_string(rhs));
        }
      }
      chk.f_special = fok;

      // (d): cluster variables and coefficients at the seed level.
      bool vok = true;
      for (int i = 0; i < n && vok; ++i) {
        const RatFunc lhs = substitute(gcur.x[static_cast<std::size_t>(i)], sub);
        const RatFunc rhs = side == CompanionSide::Left
                                ? ccur.x[static_cast<std::size_t>(i)].pow(
                                      d[static_cast<std::size_t>(i)])
                                : ccur.x[static_cast<std::size_t>(i)];
        if (!lhs.equals(rhs)) {
          vok = false;
          note(std::string(tag) + " companion cluster-variable identity fails" + at +
               " in direction " + std::to_string(i + 1) + ": " + to_string(lhs) + " vs " +
               to_string(rhs));
        }
      }
      for (int j = 0; j < n && vok; ++j) {
        SemifieldElement lhs = specialize_z_sf(gcur.y[static_cast<std::size_t>(j)], spec, d);
        if (side == CompanionSide::Right) lhs = sf_pow(lhs, d[static_cast<std::size_t>(j)]);
        if (!sf_equal(lhs, ccur.y[static_cast<std::size_t>(j)])) {
          vok = false;
          note(std::string(tag) + " companion coefficient identity fails" + at +
               " in direction " + std::to_string(j + 1) + ": " + to_string(lhs) + " vs " +
               to_string(ccur.y[static_cast<std::size_t>(j)]));
        }
      }
      chk.variables = vok;

      if (!chk.pass()) rep.pass = false;
      rep.checks.push_back(std::move(chk));
      if (p == r.size()) break;
    }
  } catch (const std::exception& e) {
    rep.pass = false;
    if (rep.counterexample.empty())
      rep.counterexample = std::string("verification aborted: ") + e.what();
  }
  return rep;
}

}  // namespace

CompanionPair left_companion(const GenSeed& s) {
  const auto d = s.degrees();
  GenSeed comp =
      validate_seed(s.P, diag_scale_rows(d, s.B), ordinary_exchange(s.n), s.y, VarKind::U);
  return CompanionPair{CompanionSide::Left, s, std::move(comp)};
}

CompanionPair right_companion(const GenSeed& s) {
  const auto d = s.degrees();
  std::vector<SemifieldElement> ry;
  ry.reserve(static_cast<std::size_t>(s.n));
  for (int i = 0; i < s.n; ++i)
    ry.push_back(sf_pow(s.y[static_cast<std::size_t>(i)], d[static_cast<std::size_t>(i)]));
  GenSeed comp = validate_seed(s.P, diag_scale_cols(s.B, d), ordinary_exchange(s.n),
                               std::move(ry), VarKind::X);
  comp.x = s.x;  // keep the parent's cluster expressions verbatim
  return CompanionPair{CompanionSide::Right, s, std::move(comp)};
}

LaurentPoly specialize_z(const LaurentPoly& F, const ZSpecialization& spec,
                         const std::vector<std::int64_t>& d) {
  LaurentPoly out;
  for (const auto& [m, c] : F.terms()) {
    mpz_class coef = c;
    Monomial::Factors rest;
    bool drop = false;
    for (const auto& [v, e] : m.factors()) {
      if (v.kind != VarKind::Z) {
        rest.emplace_back(v, e);
        continue;
      }
      const mpz_class val = z_value(v, spec, d);
      if (e < 0) {
        if (val == 1) continue;
        throw InexactDivision("z-specialization of " + var_name(v) +
                              "^" + std::to_string(e) + " is not an integer");
      }
      if (val == 0) {
        drop = true;
        break;
      }
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), val.get_mpz_t(), static_cast<unsigned long>(e));
      coef *= pw;
    }
    if (drop) continue;
    out += LaurentPoly::term(Monomial::from_factors(std::move(rest)), coef);
  }
  return out;
}

CompanionReport verify_left(const GenSeed& s, const MutationWord& w) {
  return verify_side(s, w, CompanionSide::Left);
}

CompanionReport verify_right(const GenSeed& s, const MutationWord& w) {
  return verify_side(s, w, CompanionSide::Right);
}

}  // namespace gca

#include "doctest.h"

#include <map>
#include <string>
#include <vector>

#include "gca/companion.hpp"
#include "gca/invariants.hpp"
#include "gca/textio.hpp"
#include "support/g2_tables.hpp"

using namespace gca;

namespace {

LaurentPoly P(const std::string& text) { return parse_poly(text); }

IntMat mat2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  IntMat m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

IntMat mat2v(const int (&v)[4]) { return mat2(v[0], v[1], v[2], v[3]); }

IntMat g2_B() { return mat2(0, -1, 1, 0); }

std::vector<ExchangePoly> g2_Z() {
  return {ExchangePoly::formal(1, 3), ExchangePoly::formal(2, 1)};
}

MutationWord g2_full_word() {
  return MutationWord(std::vector<int>(g2::kWord, g2::kWord + 8));
}

GenSeed a2_seed(SemifieldKind kind) {
  return validate_seed(kind, mat2(0, 1, -1, 0),
                       {ExchangePoly::formal(1, 1), ExchangePoly::formal(2, 1)});
}

const std::vector<std::int64_t> kD{3, 1};

}  // namespace

TEST_CASE("left companion construction") {
  GenSeed s = validate_seed(SemifieldKind::Universal, g2_B(), g2_Z());
  CompanionPair cp = left_companion(s);
  CHECK(cp.side == CompanionSide::Left);
  CHECK(cp.companion.B == mat2(0, -3, 1, 0));
  CHECK(cp.companion.n == 2);
  for (int i = 0; i < 2; ++i) {
    CHECK(cp.companion.Z[static_cast<std::size_t>(i)].degree() == 1);
    CHECK(cp.companion.x[static_cast<std::size_t>(i)].equals(RatFunc::var(uvar(i + 1))));
    CHECK(sf_equal(cp.companion.y[static_cast<std::size_t>(i)],
                   s.y[static_cast<std::size_t>(i)]));
  }
  CHECK(cp.companion.degrees() == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("right companion construction") {
  GenSeed s = validate_seed(SemifieldKind::Universal, g2_B(), g2_Z());
  CompanionPair cp = right_companion(s);
  CHECK(cp.side == CompanionSide::Right);
  CHECK(cp.companion.B == mat2(0, -1, 3, 0));
  // Coefficients are the d-th powers, cluster expressions are kept verbatim.
  CHECK(sf_equal(cp.companion.y[0], sf_pow(s.y[0], 3)));
  CHECK(sf_equal(cp.companion.y[1], s.y[1]));
  for (int i = 0; i < 2; ++i) {
    CHECK(cp.companion.x[static_cast<std::size_t>(i)].equals(
        s.x[static_cast<std::size_t>(i)]));
    CHECK(cp.companion.Z[static_cast<std::size_t>(i)].degree() == 1);
  }
}

TEST_CASE("companions of an ordinary seed change nothing but the cluster names") {
  GenSeed s = a2_seed(SemifieldKind::Universal);
  GenSeed l = left_companion(s).companion;
  GenSeed r = right_companion(s).companion;
  CHECK(l.B == s.B);
  CHECK(r.B == s.B);
  CHECK(r.equals(s));
  CHECK(sf_equal(l.y[0], s.y[0]));
  CHECK(sf_equal(l.y[1], s.y[1]));
  // x_i -> u_i is the only difference on the left.
  Substitution ren;
  ren.set(xvar(1), RatFunc::var(uvar(1)));
  ren.set(xvar(2), RatFunc::var(uvar(2)));
  CHECK(substitute(s.x[0], ren).equals(l.x[0]));
  CHECK(substitute(s.x[1], ren).equals(l.x[1]));
}

TEST_CASE("z-specialization at binomial values") {
  const LaurentPoly f = P("1 + z1_1*y1 + z1_2*y1^2 + y1^3");
  CHECK(specialize_z(f, ZSpecialization::binomial(), kD) ==
        P("1 + 3*y1 + 3*y1^2 + y1^3"));
  CHECK(specialize_z(LaurentPoly::constant(1), ZSpecialization::binomial(), kD) ==
        LaurentPoly::constant(1));
  // Mixed terms pick up products of binomial factors.
  CHECK(specialize_z(P("z1_1*z1_2*x1 + 2*z1_2^2"), ZSpecialization::binomial(), kD) ==
        P("9*x1 + 18"));
}

TEST_CASE("z-specialization at zero") {
  const LaurentPoly f = P("1 + z1_1*y1 + z1_2*y1^2 + y1^3");
  CHECK(specialize_z(f, ZSpecialization::zero(), kD) == P("1 + y1^3"));
  // Every term carrying a z-factor is dropped, even if nothing is left.
  CHECK(specialize_z(P("z1_1 + z1_2"), ZSpecialization::zero(), kD).is_zero());
}

TEST_CASE("z-specialization with explicit values") {
  std::map<VarId, mpz_class> vals{{zvar(1, 1), mpz_class(5)}, {zvar(1, 2), mpz_class(1)}};
  const ZSpecialization spec = ZSpecialization::custom(vals);
  CHECK(specialize_z(P("z1_1*y1 + z1_2*y1^2"), spec, kD) == P("5*y1 + y1^2"));
  // A value of one may cancel against a negative exponent; other values may not.
  CHECK(specialize_z(P("z1_2^-2*y1"), spec, kD) == P("y1"));
  CHECK_THROWS_AS(specialize_z(P("z1_1^-1*y1"), spec, kD), InexactDivision);
  CHECK_THROWS_AS(specialize_z(P("z2_1"), spec, kD), MissingAssignment);
}

TEST_CASE("z-specialization rejects out-of-range directions and negative zeros") {
  CHECK_THROWS_AS(specialize_z(P("z5_1"), ZSpecialization::binomial(), kD),
                  DimensionMismatch);
  CHECK_THROWS_AS(specialize_z(P("z1_1^-1"), ZSpecialization::zero(), kD),
                  InexactDivision);
}

TEST_CASE("left companion recursion route reproduces the golden tables") {
  const auto states = pattern_along(mat2(0, -3, 1, 0), {1, 1}, g2_full_word());
  REQUIRE(states.size() == 9);
  for (int t = 1; t <= 9; ++t) {
    CAPTURE(t);
    const PatternState& st = states[static_cast<std::size_t>(t - 1)];
    CHECK(st.C == mat2v(g2::kLC[t - 1]));
    CHECK(st.G == mat2v(g2::kLG[t - 1]));
    CHECK(st.F[0] == P(g2::kLF1[t - 1]));
    CHECK(st.F[1] == P(g2::kLF2[t - 1]));
  }
}

TEST_CASE("right companion recursion route reproduces the golden tables") {
  const auto states = pattern_along(mat2(0, -1, 3, 0), {1, 1}, g2_full_word());
  REQUIRE(states.size() == 9);
  for (int t = 1; t <= 9; ++t) {
    CAPTURE(t);
    const PatternState& st = states[static_cast<std::size_t>(t - 1)];
    CHECK(st.C == mat2v(g2::kRC[t - 1]));
    CHECK(st.G == mat2v(g2::kRG[t - 1]));
    CHECK(st.F[0] == P(g2::kRF1[t - 1]));
    CHECK(st.F[1] == P(g2::kRF2[t - 1]));
  }
}

TEST_CASE("specialized F-polynomials match the companion tables directly") {
  // Binomial z-values against the d-th power of the left companion values.
  CHECK(specialize_z(P(g2::kF1[1]), ZSpecialization::binomial(), kD) ==
        P(g2::kLF1[1]).pow(3));
  CHECK(specialize_z(P(g2::kF2[2]), ZSpecialization::binomial(), kD) == P(g2::kLF2[2]));
  // z = 0 against the right companion values with y1 -> y1^3.
  CHECK(specialize_z(P(g2::kF1[3]), ZSpecialization::zero(), kD) ==
        P("1 + 3*y2 + 3*y2^2 + y2^3 + 3*y1^3*y2^2 + 2*y1^3*y2^3 + y1^6*y2^3"));
  CHECK(specialize_z(P(g2::kF1[1]), ZSpecialization::zero(), kD) == P("1 + y1^3"));
}

TEST_CASE("left companion verification passes along the full rank-2 walk") {
  GenSeed s = validate_seed(SemifieldKind::Universal, g2_B(), g2_Z());
  CompanionReport rep = verify_left(s, g2_full_word());
  CAPTURE(rep.counterexample);
  CHECK(rep.pass);
  REQUIRE(rep.checks.size() == 9);
  for (const CompanionCheck& c : rep.checks) {
    CAPTURE(c.prefix.str());
    CHECK(c.c_transform);
    CHECK(c.g_transform);
    CHECK(c.f_special);
    CHECK(c.variables);
    CHECK(c.pass());
  }
}

TEST_CASE("right companion verification passes along the full rank-2 walk") {
  GenSeed s = validate_seed(SemifieldKind::Universal, g2_B(), g2_Z());
  CompanionReport rep = verify_right(s, g2_full_word());
  CAPTURE(rep.counterexample);
  CHECK(rep.pass);
  REQUIRE(rep.checks.size() == 9);
  for (const CompanionCheck& c : rep.checks) {
    CAPTURE(c.prefix.str());
    CHECK(c.pass());
  }
}

TEST_CASE("verification over the tropical semifield") {
  GenSeed s = validate_seed(SemifieldKind::Tropical, g2_B(), g2_Z());
  CompanionReport l = verify_left(s, g2_full_word());
  CAPTURE(l.counterexample);
  CHECK(l.pass);
  CompanionReport r = verify_right(s, g2_full_word());
  CAPTURE(r.counterexample);
  CHECK(r.pass);
}

TEST_CASE("verification of an ordinary seed is the identity comparison") {
  for (SemifieldKind kind : {SemifieldKind::Universal, SemifieldKind::Tropical}) {
    GenSeed s = a2_seed(kind);
    const MutationWord w(std::vector<int>{1, 2, 1, 2, 1});
    CompanionReport l = verify_left(s, w);
    CAPTURE(l.counterexample);
    CHECK(l.pass);
    CHECK(l.checks.size() == 6);
    CompanionReport r = verify_right(s, w);
    CAPTURE(r.counterexample);
    CHECK(r.pass);
  }
}

TEST_CASE("numeric coefficients off the binomial values are reported, not thrown") {
  // Interior coefficients 2,2 instead of 3,3: the seed-level identities
  // cannot hold, and the report should carry a counterexample.
  const std::vector<ExchangePoly> Zn = {
      ExchangePoly::numeric(1, {1, 2, 2, 1}, SemifieldKind::Universal),
      ExchangePoly::numeric(2, {1, 1}, SemifieldKind::Universal)};
  GenSeed s = validate_seed(SemifieldKind::Universal, g2_B(), Zn);
  CompanionReport rep = verify_left(s, MutationWord(std::vector<int>{1, 2}));
  CHECK(!rep.pass);
  CHECK(!rep.counterexample.empty());
  // The recursion-level checks are coefficient-independent and still hold.
  for (const CompanionCheck& c : rep.checks) {
    CHECK(c.c_transform);
    CHECK(c.g_transform);
    CHECK(c.f_special);
  }
}

TEST_CASE("verification words are freely reduced first") {
  GenSeed s = validate_seed(SemifieldKind::Tropical, g2_B(), g2_Z());
  CompanionReport rep = verify_left(s, MutationWord(std::vector<int>{1, 2, 2, 1, 1}));
  CHECK(rep.pass);
  CHECK(rep.checks.size() == 2);  // reduces to the single letter 1
  CHECK(rep.checks.back().prefix.str() == "1");
}

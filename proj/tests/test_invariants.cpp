#include "doctest.h"

#include <cstdlib>
#include <vector>

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

IntMat mat3(const std::vector<std::int64_t>& v) {
  IntMat m(3, 3);
  for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = v[static_cast<std::size_t>(i)];
  return m;
}

IntMat g2_B() { return mat2(0, -1, 1, 0); }

std::vector<ExchangePoly> g2_Z() {
  return {ExchangePoly::formal(1, 3), ExchangePoly::formal(2, 1)};
}

MutationWord g2_word(int t) {
  std::vector<int> w;
  for (int i = 0; i + 1 < t; ++i) w.push_back(g2::kWord[i]);
  return MutationWord(w);
}

std::vector<ExchangePoly> formal_Z(const std::vector<std::int64_t>& d) {
  std::vector<ExchangePoly> z;
  for (std::size_t i = 0; i < d.size(); ++i)
    z.push_back(ExchangePoly::formal(static_cast<int>(i) + 1, static_cast<int>(d[i])));
  return z;
}

// Every cluster variable set to 1, everything else kept.
RatFunc at_unit_cluster(const RatFunc& f) {
  Substitution s;
  for (const LaurentPoly* p : {&f.num(), &f.den()})
    for (VarId v : p->support()) {
      if (v.kind == VarKind::X || v.kind == VarKind::U)
        s.set(v, RatFunc::constant(1));
      else
        s.set(v, RatFunc::var(v));
    }
  return substitute(f, s);
}

// N with the y-variables replaced by the seed's hat variables.
RatFunc hat_sub(const LaurentPoly& N, const GenSeed& s0) {
  const std::vector<RatFunc> hy = hat_y(s0);
  Substitution sub;
  for (VarId v : N.support()) {
    if (v.kind == VarKind::Y)
      sub.set(v, hy[static_cast<std::size_t>(v.i - 1)]);
    else
      sub.set(v, RatFunc::var(v));
  }
  return substitute(N, sub);
}

RatFunc table_x(const g2::XEntry& e, const GenSeed& s0) {
  const LaurentPoly N = P(e.N);
  return hat_sub(N, s0) / RatFunc(N) * RatFunc::var(xvar(1), e.a) * RatFunc::var(xvar(2), e.b);
}

SemifieldElement table_y(const g2::YEntry& e) {
  RatFunc v = RatFunc::var(yvar(1), e.c) * RatFunc::var(yvar(2), e.d);
  v = v * RatFunc(P(e.S)).pow(e.e);
  return UsfElement(v);
}

}  // namespace

TEST_CASE("recursions reproduce the reference table") {
  const auto pat = pattern_along(g2_B(), {3, 1}, g2_word(9));
  REQUIRE(pat.size() == 9);
  for (int t = 1; t <= 9; ++t) {
    CAPTURE(t);
    const PatternState& s = pat[static_cast<std::size_t>(t - 1)];
    CHECK(s.C == mat2v(g2::kC[t - 1]));
    CHECK(s.G == mat2v(g2::kG[t - 1]));
    CHECK(s.F[0] == P(g2::kF1[t - 1]));
    CHECK(s.F[1] == P(g2::kF2[t - 1]));
    CHECK((int_det(s.C) == 1 || int_det(s.C) == -1));
    CHECK((int_det(s.G) == 1 || int_det(s.G) == -1));
    CHECK(s.B == (t % 2 == 1 ? g2_B() : mat2(0, 1, -1, 0)));
  }
  // The full period returns every component to its start.
  CHECK(pat.back().C == IntMat::identity(2));
  CHECK(pat.back().G == IntMat::identity(2));
  CHECK(pat.back().zeta == initial_pattern(g2_B(), {3, 1}).zeta);
  CHECK(f_poly_warnings(pat[3].F).empty());
}

TEST_CASE("recursion corner cases") {
  const std::vector<std::int64_t> d{3, 1};
  CHECK(c_matrix_rec(g2_B(), d, {}) == IntMat::identity(2));
  CHECK(g_matrix_rec(g2_B(), d, {}) == IntMat::identity(2));
  CHECK(f_polys_rec(g2_B(), d, {}) ==
        std::vector<LaurentPoly>{P("1"), P("1")});

  CHECK(c_matrix_rec(g2_B(), d, {1}) == mat2(-1, 0, 0, 1));
  CHECK(c_matrix_rec(g2_B(), d, {1, 2, 1}) == mat2(1, -3, 0, -1));
  CHECK(g_matrix_rec(g2_B(), d, {1, 2, 1}) == mat2(1, 0, -3, -1));
  CHECK(g_matrix_rec(g2_B(), d, {1, 2, 1, 2, 1}) == mat2(2, 1, -3, -2));

  CHECK(f_polys_rec(g2_B(), d, {1})[0] == P("1 + z1_1*y1 + z1_2*y1^2 + y1^3"));
  CHECK(f_polys_rec(g2_B(), d, {1})[1] == P("1"));
  CHECK(f_polys_rec(g2_B(), d, g2_word(8))[0] == P("1"));
  CHECK(f_polys_rec(g2_B(), d, g2_word(8))[1] == P("1 + y2"));

  // Words reduce before they run.
  CHECK(c_matrix_rec(g2_B(), d, {2, 1, 1, 2}) == IntMat::identity(2));

  CHECK_THROWS_AS(initial_pattern(IntMat(2, 3), {1, 1}), DimensionMismatch);
  CHECK_THROWS_AS(initial_pattern(g2_B(), {3}), DimensionMismatch);
  CHECK_THROWS_AS(initial_pattern(g2_B(), {3, 0}), BadExchangePoly);
  CHECK_THROWS_AS(pattern_along(g2_B(), d, {5}), DimensionMismatch);
}

TEST_CASE("the two computation routes agree") {
  struct Case {
    IntMat B;
    std::vector<std::int64_t> d;
    MutationWord w;
  };
  const std::vector<Case> cases = {
      {g2_B(), {3, 1}, g2_word(9)},
      {mat2(0, 1, -1, 0), {1, 1}, {1, 2, 1, 2, 1}},
      {mat3({0, -1, 0, 2, 0, -1, 0, 1, 0}), {2, 1, 2}, {1, 2, 3, 2, 1}},
  };
  for (std::size_t ci = 0; ci < cases.size(); ++ci) {
    CAPTURE(ci);
    const Case& c = cases[ci];
    const int n = c.B.rows();
    const auto xy = xy_functions(c.B, formal_Z(c.d), c.w);
    const auto pat = pattern_along(c.B, c.d, c.w);
    REQUIRE(xy.size() == pat.size());
    for (std::size_t i = 0; i < xy.size(); ++i) {
      CAPTURE(i);
      CHECK(c_from_tropical(xy[i].y_trop, n) == pat[i].C);
      CHECK(g_from_grading(xy[i].X, c.B) == pat[i].G);
      for (int j = 0; j < n; ++j) {
        CAPTURE(j);
        const RatFunc& X = xy[i].X[static_cast<std::size_t>(j)];
        CHECK(at_unit_cluster(X).equals(RatFunc(pat[i].F[static_cast<std::size_t>(j)])));
        // Laurent in the cluster, polynomial in everything else.
        CHECK(X.den().is_single_term());
        for (VarId v : X.den().support()) CHECK(v.kind == VarKind::X);
        for (const auto& [m, coef] : X.num().terms())
          for (const auto& [v, e] : m.factors())
            if (v.kind != VarKind::X) CHECK(e > 0);
      }
      CHECK((int_det(pat[i].C) == 1 || int_det(pat[i].C) == -1));
      CHECK((int_det(pat[i].G) == 1 || int_det(pat[i].G) == -1));
    }
  }
}

TEST_CASE("tropical and grading readouts") {
  const auto xy = xy_functions(g2_B(), g2_Z(), g2_word(9));

  CHECK(c_from_tropical(xy[4].y_trop, 2) == mat2(-2, 3, -1, 1));
  CHECK(g_from_grading(xy[6].X, g2_B()) == mat2(2, 1, -3, -1));

  // First step: the single new cluster function, written out.
  CHECK(xy[1].X[0].equals(parse_ratfunc(
      "1 + z1_1*y1*x2 + z1_2*y1^2*x2^2 + y1^3*x2^3 / x1")));
  CHECK(xy[1].X[1].equals(RatFunc::var(xvar(2))));

  CHECK_THROWS_AS(c_from_tropical({SemifieldElement(UsfElement()), SemifieldElement(UsfElement())}, 2),
                  NonMonomialTropicalImage);
  CHECK_THROWS_AS(
      c_from_tropical({SemifieldElement(TropElement::generator(zvar(1, 1))),
                       SemifieldElement(TropElement::generator(yvar(2)))},
                      2),
      NonZeroZExponent);
  CHECK_THROWS_AS(c_from_tropical({SemifieldElement(TropElement::generator(yvar(1)))}, 2),
                  DimensionMismatch);
  CHECK_THROWS_AS(
      g_from_grading({RatFunc(P("1 + x1")), RatFunc::var(xvar(2))}, IntMat(2, 2)),
      Inhomogeneous);
}

TEST_CASE("separation rebuilds the displayed table") {
  GenSeed s0 = validate_seed(SemifieldKind::Universal, g2_B(), g2_Z());
  GenSeed cur = s0;
  for (int t = 1; t <= 9; ++t) {
    CAPTURE(t);
    const MutationWord w = g2_word(t);
    const auto ysep = y_via_separation(s0, w);
    const auto xsep = x_via_separation(s0, w);
    for (int j = 0; j < 2; ++j) {
      CAPTURE(j);
      const RatFunc ex = table_x(j == 0 ? g2::kX1[t - 1] : g2::kX2[t - 1], s0);
      const SemifieldElement ey = table_y(j == 0 ? g2::kY1[t - 1] : g2::kY2[t - 1]);
      CHECK(cur.x[static_cast<std::size_t>(j)].equals(ex));
      CHECK(sf_equal(cur.y[static_cast<std::size_t>(j)], ey));
      CHECK(xsep[static_cast<std::size_t>(j)].equals(ex));
      CHECK(sf_equal(ysep[static_cast<std::size_t>(j)], ey));
    }
    if (t < 9) cur = mutate(cur, g2::kWord[t - 1]);
  }
}

TEST_CASE("separation equals direct mutation over the tropical semifield") {
  GenSeed s0 = validate_seed(SemifieldKind::Tropical, g2_B(), g2_Z());
  GenSeed cur = s0;
  for (int t = 1; t <= 9; ++t) {
    CAPTURE(t);
    const MutationWord w = g2_word(t);
    const auto ysep = y_via_separation(s0, w);
    const auto xsep = x_via_separation(s0, w);
    for (int j = 0; j < 2; ++j) {
      CAPTURE(j);
      CHECK(xsep[static_cast<std::size_t>(j)].equals(cur.x[static_cast<std::size_t>(j)]));
      CHECK(sf_equal(ysep[static_cast<std::size_t>(j)], cur.y[static_cast<std::size_t>(j)]));
    }
    if (t < 9) cur = mutate(cur, g2::kWord[t - 1]);
  }
}

TEST_CASE("separation with explicit numeric coefficients") {
  const std::vector<ExchangePoly> Zn = {ExchangePoly::numeric(1, {1, 2, 2, 1}, SemifieldKind::Universal),
                                        ExchangePoly::numeric(2, {1, 1}, SemifieldKind::Universal)};
  GenSeed s0 = validate_seed(SemifieldKind::Universal, g2_B(), Zn);
  const MutationWord w{1, 2, 1};
  const GenSeed direct = apply_word(s0, w);
  const auto ysep = y_via_separation(s0, w);
  const auto xsep = x_via_separation(s0, w);
  for (int j = 0; j < 2; ++j) {
    CAPTURE(j);
    CHECK(xsep[static_cast<std::size_t>(j)].equals(direct.x[static_cast<std::size_t>(j)]));
    CHECK(sf_equal(ysep[static_cast<std::size_t>(j)], direct.y[static_cast<std::size_t>(j)]));
  }

  const std::vector<ExchangePoly> Zt = {ExchangePoly::numeric(1, {1, 2, 2, 1}, SemifieldKind::Tropical),
                                        ExchangePoly::numeric(2, {1, 1}, SemifieldKind::Tropical)};
  GenSeed t0 = validate_seed(SemifieldKind::Tropical, g2_B(), Zt);
  const MutationWord wt{1, 2, 1, 2};
  const GenSeed dt = apply_word(t0, wt);
  const auto yst = y_via_separation(t0, wt);
  const auto xst = x_via_separation(t0, wt);
  for (int j = 0; j < 2; ++j) {
    CAPTURE(j);
    CHECK(xst[static_cast<std::size_t>(j)].equals(dt.x[static_cast<std::size_t>(j)]));
    CHECK(sf_equal(yst[static_cast<std::size_t>(j)], dt.y[static_cast<std::size_t>(j)]));
  }

  // The integer matrices never depend on the coefficient values, only on the
  // degrees: the principal-coefficient readouts of the numeric seed agree
  // with the recursions run on the degrees alone.
  GenSeed cur = t0;
  const auto pat = pattern_along(g2_B(), {3, 1}, wt);
  for (std::size_t i = 0;; ++i) {
    CHECK(c_from_tropical(cur.y, 2) == pat[i].C);
    CHECK(g_from_grading(cur.x, g2_B()) == pat[i].G);
    if (i == wt.size()) break;
    cur = mutate(cur, wt.letters()[i]);
  }
}

TEST_CASE("soft checks on the numerator polynomials") {
  CHECK(f_poly_warnings({P("1"), P("1 + y1 + z1_1*y1^2")}).empty());
  const auto neg = f_poly_warnings({P("1 - y1")});
  REQUIRE(neg.size() == 1);
  CHECK(neg[0].find("negative coefficient") != std::string::npos);
  const auto ct = f_poly_warnings({P("2 + y1"), P("1 + z1_1 + y1")});
  REQUIRE(ct.size() == 2);
  CHECK(ct[0].find("y-free part") != std::string::npos);
  CHECK(ct[1].find("y-free part") != std::string::npos);
}

TEST_CASE("integer determinants") {
  CHECK(int_det(IntMat::identity(3)) == 1);
  CHECK(int_det(mat2(0, 1, 1, 0)) == -1);
  CHECK(int_det(mat2(2, 1, 1, 1)) == 1);
  CHECK(int_det(mat2(2, 4, 1, 2)) == 0);
  CHECK(int_det(mat3({2, 0, 1, 0, 3, 0, 1, 0, 1})) == 3);
  CHECK(int_det(mat3({0, 1, 0, 1, 0, 0, 0, 0, 1})) == -1);
  CHECK_THROWS_AS(int_det(IntMat(2, 3)), DimensionMismatch);
}

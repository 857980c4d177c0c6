#include "gca/invariants.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "gca/textio.hpp"

namespace gca {

namespace {

PatternState pattern_step(const PatternState& s, const IntMat& B0,
                          const std::vector<std::int64_t>& d, int k) {
  const int n = s.B.rows();
  if (k < 1 || k > n) throw DimensionMismatch("mutation direction out of range");
  const int k0 = k - 1;
  const std::int64_t dk = d[static_cast<std::size_t>(k0)];

  PatternState r;
  r.word = s.word.appended(k);

  r.C = s.C;
  for (int i = 0; i < n; ++i) {
    r.C(i, k0) = -s.C(i, k0);
    for (int j = 0; j < n; ++j) {
      if (j == k0) continue;
      r.C(i, j) = s.C(i, j) + s.C(i, k0) * pos(dk * s.B(k0, j)) +
                  pos(-s.C(i, k0)) * dk * s.B(k0, j);
    }
  }

  r.G = s.G;
  for (int i = 0; i < n; ++i) {
    std::int64_t v = -s.G(i, k0);
    for (int l = 0; l < n; ++l) {
      v += s.G(i, l) * pos(-s.B(l, k0) * dk);
      v -= B0(i, l) * pos(-s.C(l, k0) * dk);
    }
    r.G(i, k0) = v;
  }

  LaurentPoly pk = LaurentPoly::constant(1), qk = LaurentPoly::constant(1);
  for (int i = 0; i < n; ++i) {
    if (auto e = pos(s.C(i, k0)); e != 0) pk *= LaurentPoly::var(yvar(i + 1), e);
    if (auto e = pos(-s.C(i, k0)); e != 0) qk *= LaurentPoly::var(yvar(i + 1), e);
    if (auto e = pos(s.B(i, k0)); e != 0) pk *= s.F[static_cast<std::size_t>(i)].pow(static_cast<unsigned>(e));
    if (auto e = pos(-s.B(i, k0)); e != 0) qk *= s.F[static_cast<std::size_t>(i)].pow(static_cast<unsigned>(e));
  }
  LaurentPoly sum;
  for (std::int64_t t = 0; t <= dk; ++t)
    sum += s.zeta[static_cast<std::size_t>(k0)][static_cast<std::size_t>(t)] *
           pk.pow(static_cast<unsigned>(t)) * qk.pow(static_cast<unsigned>(dk - t));
  r.F = s.F;
  r.F[static_cast<std::size_t>(k0)] = exact_div(sum, s.F[static_cast<std::size_t>(k0)]);

  r.B = matrix_mutate(s.B, d, k);
  r.zeta = s.zeta;
  auto& zk = r.zeta[static_cast<std::size_t>(k0)];
  std::reverse(zk.begin(), zk.end());
  return r;
}

}  // namespace

PatternState initial_pattern(const IntMat& B, const std::vector<std::int64_t>& d) {
  if (B.rows() != B.cols()) throw DimensionMismatch("exchange matrix must be square");
  const int n = B.rows();
  if (static_cast<int>(d.size()) != n)
    throw DimensionMismatch("one exchange degree per direction required");
  PatternState s;
  s.B = B;
  s.C = IntMat::identity(n);
  s.G = IntMat::identity(n);
  s.F.assign(static_cast<std::size_t>(n), LaurentPoly::constant(1));
  s.zeta.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::int64_t di = d[static_cast<std::size_t>(i)];
    if (di < 1) throw BadExchangePoly("exchange degree must be at least 1");
    auto& zi = s.zeta[static_cast<std::size_t>(i)];
    zi.assign(static_cast<std::size_t>(di) + 1, LaurentPoly::constant(1));
    for (int t = 1; t < di; ++t) zi[static_cast<std::size_t>(t)] = LaurentPoly::var(zvar(i + 1, t));
  }
  return s;
}

std::vector<PatternState> pattern_along(const IntMat& B, const std::vector<std::int64_t>& d,
                                        const MutationWord& w) {
  std::vector<PatternState> out;
  out.push_back(initial_pattern(B, d));
  const MutationWord r = w.reduced();
  for (int k : r.letters()) out.push_back(pattern_step(out.back(), B, d, k));
  return out;
}

IntMat c_matrix_rec(const IntMat& B, const std::vector<std::int64_t>& d, const MutationWord& w) {
  return pattern_along(B, d, w).back().C;
}

IntMat g_matrix_rec(const IntMat& B, const std::vector<std::int64_t>& d, const MutationWord& w) {
  return pattern_along(B, d, w).back().G;
}

std::vector<LaurentPoly> f_polys_rec(const IntMat& B, const std::vector<std::int64_t>& d,
                                     const MutationWord& w) {
  return pattern_along(B, d, w).back().F;
}

std::vector<XYState> xy_functions(const IntMat& B, const std::vector<ExchangePoly>& Z,
                                  const MutationWord& w) {
  if (B.rows() != B.cols()) throw DimensionMismatch("exchange matrix must be square");
  const int n = B.rows();
  if (static_cast<int>(Z.size()) != n)
    throw DimensionMismatch("one exchange polynomial per direction required");
  std::vector<ExchangePoly> formal;
  formal.reserve(Z.size());
  for (int i = 0; i < n; ++i) formal.push_back(ExchangePoly::formal(i + 1, Z[static_cast<std::size_t>(i)].degree()));

  GenSeed trop = validate_seed(SemifieldKind::Tropical, B, formal);
  GenSeed usf = validate_seed(SemifieldKind::Universal, B, formal);

  std::vector<XYState> out;
  out.push_back(XYState{MutationWord{}, trop.x, trop.y, usf.y});
  const MutationWord r = w.reduced();
  for (std::size_t i = 0; i < r.size(); ++i) {
    const int k = r.letters()[i];
    trop = mutate(trop, k);
    // Only the coefficients of the universal-semifield seed feed the
    // Y-functions, so skip its (expensive) cluster expressions.
    usf = mutate_coefficients(usf, k);
    out.push_back(XYState{r.prefix(i + 1), trop.x, trop.y, usf.y});
  }
  return out;
}

IntMat c_from_tropical(const std::vector<SemifieldElement>& y, int n) {
  if (static_cast<int>(y.size()) != n)
    throw DimensionMismatch("one coefficient per direction required");
  IntMat C(n, n);
  for (int j = 0; j < n; ++j) {
    const TropElement* t = std::get_if<TropElement>(&y[static_cast<std::size_t>(j)]);
    if (!t) throw NonMonomialTropicalImage("coefficient is not a tropical monomial");
    for (const auto& [v, e] : t->monomial().factors()) {
      if (v.kind == VarKind::Y && v.i >= 1 && v.i <= n)
        C(v.i - 1, j) = e;
      else if (v.kind == VarKind::Z)
        throw NonZeroZExponent("tropical coefficient carries " + var_name(v) + "^" +
                               std::to_string(e));
      else
        throw NonMonomialTropicalImage("unexpected variable " + var_name(v) +
                                       " in a tropical coefficient");
    }
  }
  return C;
}

IntMat g_from_grading(const std::vector<RatFunc>& X, const IntMat& B) {
  const int n = B.rows();
  if (static_cast<int>(X.size()) != n)
    throw DimensionMismatch("one cluster function per direction required");
  Grading gr(n);
  for (const RatFunc& f : X) {
    for (const LaurentPoly* p : {&f.num(), &f.den()}) {
      for (VarId v : p->support()) {
        std::vector<std::int64_t> deg(static_cast<std::size_t>(n), 0);
        if ((v.kind == VarKind::X || v.kind == VarKind::U) && v.i >= 1 && v.i <= n)
          deg[static_cast<std::size_t>(v.i - 1)] = 1;
        else if (v.kind == VarKind::Y && v.i >= 1 && v.i <= n)
          for (int i = 0; i < n; ++i) deg[static_cast<std::size_t>(i)] = -B(i, v.i - 1);
        else if (v.kind != VarKind::Z)
          throw Inhomogeneous("no degree assigned to " + var_name(v));
        gr.set(v, std::move(deg));
      }
    }
  }
  IntMat G(n, n);
  for (int j = 0; j < n; ++j) {
    const auto dn = gr.multidegree(X[static_cast<std::size_t>(j)].num());
    const auto dd = gr.multidegree(X[static_cast<std::size_t>(j)].den());
    for (int i = 0; i < n; ++i)
      G(i, j) = dn[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i)];
  }
  return G;
}

namespace {

// The two faces of a seed's initial data: semifield values of the y- and
// z-variables (for F|_P) and their ambient images with y replaced by the hat
// variables (for F(yhat, z)).
struct SeedEnv {
  std::map<VarId, SemifieldElement> sf;
  Substitution hat;
};

SeedEnv seed_env(const GenSeed& s) {
  SeedEnv e;
  const std::vector<RatFunc> hy = hat_y(s);
  for (int i = 0; i < s.n; ++i) {
    e.sf.emplace(yvar(i + 1), s.y[static_cast<std::size_t>(i)]);
    e.hat.set(yvar(i + 1), hy[static_cast<std::size_t>(i)]);
  }
  for (int i = 0; i < s.n; ++i) {
    const ExchangePoly& z = s.Z[static_cast<std::size_t>(i)];
    for (int t = 1; t < z.degree(); ++t) {
      e.sf.emplace(zvar(i + 1, t), z.value(t, s.P));
      e.hat.set(zvar(i + 1, t), z.ambient(t));
    }
  }
  return e;
}

}  // namespace

std::vector<SemifieldElement> y_via_separation(const GenSeed& s, const MutationWord& w) {
  const PatternState pat = pattern_along(s.B, s.degrees(), w).back();
  const SeedEnv env = seed_env(s);
  std::vector<SemifieldElement> fp;
  fp.reserve(static_cast<std::size_t>(s.n));
  for (int i = 0; i < s.n; ++i)
    fp.push_back(sf_specialize(RatFunc(pat.F[static_cast<std::size_t>(i)]), s.P, env.sf));
  std::vector<SemifieldElement> out;
  out.reserve(static_cast<std::size_t>(s.n));
  for (int j = 0; j < s.n; ++j) {
    SemifieldElement v = s.P.one();
    for (int i = 0; i < s.n; ++i) {
      if (pat.C(i, j) != 0) v = sf_mul(v, sf_pow(s.y[static_cast<std::size_t>(i)], pat.C(i, j)));
      if (pat.B(i, j) != 0) v = sf_mul(v, sf_pow(fp[static_cast<std::size_t>(i)], pat.B(i, j)));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<RatFunc> x_via_separation(const GenSeed& s, const MutationWord& w) {
  const PatternState pat = pattern_along(s.B, s.degrees(), w).back();
  const SeedEnv env = seed_env(s);
  std::vector<RatFunc> out;
  out.reserve(static_cast<std::size_t>(s.n));
  for (int j = 0; j < s.n; ++j) {
    const LaurentPoly& f = pat.F[static_cast<std::size_t>(j)];
    RatFunc v = substitute(f, env.hat) / sf_embed(sf_specialize(RatFunc(f), s.P, env.sf));
    for (int i = 0; i < s.n; ++i)
      if (pat.G(i, j) != 0) v = v * s.x[static_cast<std::size_t>(i)].pow(pat.G(i, j));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<GenSeed> seeds_via_separation(const GenSeed& s, const MutationWord& w) {
  const std::vector<PatternState> pats = pattern_along(s.B, s.degrees(), w);
  const SeedEnv env = seed_env(s);
  std::vector<GenSeed> out;
  out.reserve(pats.size());
  out.push_back(s);
  std::vector<ExchangePoly> zcur = s.Z;
  for (std::size_t p = 1; p < pats.size(); ++p) {
    const PatternState& pat = pats[p];
    const std::size_t k0 = static_cast<std::size_t>(pat.word.letters().back() - 1);
    zcur[k0] = zcur[k0].reversed();
    GenSeed g = s;
    g.B = pat.B;
    g.Z = zcur;
    std::vector<SemifieldElement> fp;
    fp.reserve(static_cast<std::size_t>(s.n));
    for (int i = 0; i < s.n; ++i)
      fp.push_back(sf_specialize(RatFunc(pat.F[static_cast<std::size_t>(i)]), s.P, env.sf));
    for (int j = 0; j < s.n; ++j) {
      const std::size_t j0 = static_cast<std::size_t>(j);
      SemifieldElement yv = s.P.one();
      for (int i = 0; i < s.n; ++i) {
        if (pat.C(i, j) != 0) yv = sf_mul(yv, sf_pow(s.y[static_cast<std::size_t>(i)], pat.C(i, j)));
        if (pat.B(i, j) != 0) yv = sf_mul(yv, sf_pow(fp[static_cast<std::size_t>(i)], pat.B(i, j)));
      }
      g.y[j0] = std::move(yv);
      RatFunc xv = substitute(pat.F[j0], env.hat) / sf_embed(fp[j0]);
      for (int i = 0; i < s.n; ++i)
        if (pat.G(i, j) != 0) xv = xv * s.x[static_cast<std::size_t>(i)].pow(pat.G(i, j));
      g.x[j0] = std::move(xv);
    }
    out.push_back(std::move(g));
  }
  return out;
}

GenSeed seed_via_separation(const GenSeed& s, const MutationWord& w) {
  return seeds_via_separation(s, w).back();
}

std::vector<std::string> f_poly_warnings(const std::vector<LaurentPoly>& F) {
  std::vector<std::string> notes;
  for (std::size_t i = 0; i < F.size(); ++i) {
    const LaurentPoly& f = F[i];
    if (f.has_negative_coef())
      notes.push_back("F_" + std::to_string(i + 1) + " has a negative coefficient");
    LaurentPoly yfree;
    for (const auto& [m, c] : f.terms()) {
      bool has_y = false;
      for (const auto& [v, e] : m.factors())
        if (v.kind == VarKind::Y) {
          has_y = true;
          break;
        }
      if (!has_y) yfree += LaurentPoly::term(m, c);
    }
    if (!yfree.is_one())
      notes.push_back("F_" + std::to_string(i + 1) + " has y-free part " + to_string(yfree) +
                      " instead of 1");
  }
  return notes;
}

}  // namespace gca

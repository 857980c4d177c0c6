#include "gca/seed.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <sstream>

#include "gca/errors.hpp"
#include "gca/textio.hpp"

namespace gca {

namespace {

bool coeff_is_one(const ExchangePoly::Coeff& c) {
  if (std::holds_alternative<VarId>(c)) return false;
  const auto& e = std::get<SemifieldElement>(c);
  if (const auto* t = std::get_if<TropElement>(&e)) return t->monomial().is_one();
  const auto& u = std::get<UsfElement>(e);
  return u.value().num() == u.value().den();
}

}  // namespace

ExchangePoly::ExchangePoly(int index, std::vector<Coeff> coeffs)
    : index_(index), coeffs_(std::move(coeffs)) {
  if (index_ < 1) throw BadExchangePoly("exchange polynomial index must be >= 1");
  if (coeffs_.size() < 2)
    throw BadExchangePoly("exchange polynomial must have degree >= 1");
  if (!coeff_is_one(coeffs_.front()) || !coeff_is_one(coeffs_.back()))
    throw BadExchangePoly("exchange polynomial must have constant and leading coefficient 1");
  for (std::size_t s = 0; s < coeffs_.size(); ++s) {
    if (const auto* v = std::get_if<VarId>(&coeffs_[s])) {
      if (v->kind != VarKind::Z || v->i != index_ || v->s != static_cast<int>(s))
        throw BadExchangePoly("formal coefficient at slot " + std::to_string(s) +
                              " must be the matching z-variable");
    }
  }
}

ExchangePoly ExchangePoly::formal(int index, int degree) {
  if (degree < 1) throw BadExchangePoly("exchange polynomial must have degree >= 1");
  std::vector<Coeff> cs;
  cs.reserve(degree + 1);
  cs.emplace_back(SemifieldElement{TropElement{}});
  for (int s = 1; s < degree; ++s) cs.emplace_back(zvar(index, s));
  cs.emplace_back(SemifieldElement{TropElement{}});
  return ExchangePoly(index, std::move(cs));
}

ExchangePoly ExchangePoly::numeric(int index, const std::vector<long>& coeffs,
                                   SemifieldKind kind) {
  if (coeffs.size() < 2 || coeffs.front() != 1 || coeffs.back() != 1)
    throw BadExchangePoly("numeric exchange polynomial must start and end with 1");
  std::vector<Coeff> cs;
  cs.reserve(coeffs.size());
  for (long c : coeffs) {
    if (c <= 0) throw BadExchangePoly("exchange polynomial coefficients must be positive");
    if (kind == SemifieldKind::Tropical)
      cs.emplace_back(SemifieldElement{TropElement{}});  // positive constants collapse to 1
    else
      cs.emplace_back(SemifieldElement{UsfElement{RatFunc::constant(c)}});
  }
  return ExchangePoly(index, std::move(cs));
}

ExchangePoly ExchangePoly::reversed() const {
  std::vector<Coeff> cs(coeffs_.rbegin(), coeffs_.rend());
  // Reversal keeps formal slots formal: z'_{i,s} = z_{i,d-s} as a value, so a
  // formal variable simply moves to the mirrored slot; re-tag it there.
  ExchangePoly out(index_, std::vector<Coeff>(coeffs_.size(), Coeff{SemifieldElement{TropElement{}}}));
  out.coeffs_ = std::move(cs);
  return out;
}

SemifieldElement ExchangePoly::value(int s, const Semifield& P) const {
  const Coeff& c = coeffs_.at(s);
  if (const auto* v = std::get_if<VarId>(&c)) return P.generator(*v);
  if (coeff_is_one(c)) return P.one();
  const auto& e = std::get<SemifieldElement>(c);
  if (kind_of(e) != P.kind)
    throw BadExchangePoly("exchange coefficient lives in a different semifield");
  return e;
}

RatFunc ExchangePoly::ambient(int s) const {
  const Coeff& c = coeffs_.at(s);
  if (const auto* v = std::get_if<VarId>(&c)) return RatFunc::var(*v);
  return sf_embed(std::get<SemifieldElement>(c));
}

bool ExchangePoly::equals(const ExchangePoly& o, const Semifield& P) const {
  if (degree() != o.degree()) return false;
  for (int s = 0; s <= degree(); ++s)
    if (!sf_equal(value(s, P), o.value(s, P))) return false;
  return true;
}

MutationWord MutationWord::parse(const std::string& text) {
  std::vector<int> letters;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    std::size_t a = tok.find_first_not_of(" \t");
    if (a == std::string::npos) throw ParseError("empty letter in mutation word");
    std::size_t b = tok.find_last_not_of(" \t");
    tok = tok.substr(a, b - a + 1);
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad mutation-word letter: " + tok);
    }
    if (used != tok.size() || k < 1)
      throw ParseError("bad mutation-word letter: " + tok);
    letters.push_back(k);
  }
  if (letters.empty() && !text.empty() &&
      text.find_first_not_of(" \t") != std::string::npos)
    throw ParseError("bad mutation word: " + text);
  return MutationWord(std::move(letters));
}

MutationWord MutationWord::prefix(std::size_t len) const {
  return MutationWord(std::vector<int>(w_.begin(), w_.begin() + std::min(len, w_.size())));
}

MutationWord MutationWord::appended(int k) const {
  std::vector<int> w = w_;
  w.push_back(k);
  return MutationWord(std::move(w));
}

MutationWord MutationWord::reduced() const {
  std::vector<int> out;
  for (int k : w_) {
    if (!out.empty() && out.back() == k)
      out.pop_back();
    else
      out.push_back(k);
  }
  return MutationWord(std::move(out));
}

std::string MutationWord::str() const {
  std::string s;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w_[i]);
  }
  return s;
}

std::vector<std::int64_t> GenSeed::degrees() const {
  std::vector<std::int64_t> d;
  d.reserve(Z.size());
  for (const auto& z : Z) d.push_back(z.degree());
  return d;
}

bool GenSeed::equals(const GenSeed& o) const {
  if (n != o.n || P.kind != o.P.kind || !(B == o.B)) return false;
  for (int i = 0; i < n; ++i) {
    if (!x[i].equals(o.x[i])) return false;
    if (!sf_equal(y[i], o.y[i])) return false;
    if (!Z[i].equals(o.Z[i], P)) return false;
  }
  return true;
}

std::vector<std::int64_t> skew_symmetrizer(const IntMat& B) {
  if (B.rows() != B.cols()) throw DimensionMismatch("exchange matrix must be square");
  const int n = B.rows();
  for (int i = 0; i < n; ++i)
    if (B(i, i) != 0) throw NotSkewSymmetrizable("nonzero diagonal entry");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((B(i, j) == 0) != (B(j, i) == 0) ||
          (B(i, j) != 0 && (B(i, j) > 0) == (B(j, i) > 0)))
        throw NotSkewSymmetrizable("entries b_ij and b_ji must be zero together or of opposite signs");

  // Propagate rational weights over each connected component of the nonzero
  // pattern, then clear denominators componentwise to least positive integers.
  std::vector<mpq_class> w(n, 0);
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int root = 0; root < n; ++root) {
    if (comp[root] >= 0) continue;
    comp[root] = ncomp;
    w[root] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (B(i, j) == 0) continue;
        // s_i b_ij = -s_j b_ji  =>  s_j = -s_i b_ij / b_ji.
        mpq_class wj = -w[i] * B(i, j) / mpq_class(B(j, i));
        wj.canonicalize();
        if (comp[j] < 0) {
          comp[j] = ncomp;
          w[j] = wj;
          stack.push_back(j);
        } else if (w[j] != wj) {
          throw NotSkewSymmetrizable("inconsistent weights around a cycle");
        }
      }
    }
    ++ncomp;
  }
  std::vector<mpz_class> den_lcm(ncomp, 1), num_gcd(ncomp, 0);
  for (int i = 0; i < n; ++i) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm[comp[i]].get_mpz_t(), w[i].get_den().get_mpz_t());
    den_lcm[comp[i]] = l;
  }
  std::vector<std::int64_t> s(n);
  std::vector<mpz_class> scaled(n);
  for (int i = 0; i < n; ++i) {
    scaled[i] = w[i].get_num() * (den_lcm[comp[i]] / w[i].get_den());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_gcd[comp[i]].get_mpz_t(), scaled[i].get_mpz_t());
    num_gcd[comp[i]] = g;
  }
  for (int i = 0; i < n; ++i) {
    mpz_class si = scaled[i] / num_gcd[comp[i]];
    if (si <= 0 || !si.fits_slong_p())
      throw NotSkewSymmetrizable("symmetrizer entry out of range");
    s[i] = si.get_si();
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (s[i] * B(i, j) != -s[j] * B(j, i))
        throw NotSkewSymmetrizable("no positive diagonal symmetrizer exists");
  return s;
}

Semifield ambient_semifield(SemifieldKind kind, int n, const std::vector<ExchangePoly>& Z) {
  std::vector<VarId> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(yvar(i));
  for (const auto& z : Z)
    for (int s = 0; s <= z.degree(); ++s)
      if (z.is_formal(s)) gens.push_back(std::get<VarId>(z.coeffs()[s]));
  return Semifield{kind, std::move(gens)};
}

GenSeed validate_seed(SemifieldKind kind, IntMat B, std::vector<ExchangePoly> Z,
                      std::vector<SemifieldElement> y, VarKind cluster_kind) {
  Semifield P = ambient_semifield(kind, B.rows(), Z);
  return validate_seed(std::move(P), std::move(B), std::move(Z), std::move(y), cluster_kind);
}

GenSeed validate_seed(Semifield P, IntMat B, std::vector<ExchangePoly> Z,
                      std::vector<SemifieldElement> y, VarKind cluster_kind) {
  if (B.rows() != B.cols() || B.rows() < 1)
    throw DimensionMismatch("exchange matrix must be square and nonempty");
  const int n = B.rows();
  if (static_cast<int>(Z.size()) != n)
    throw DimensionMismatch("need one exchange polynomial per direction");
  for (int i = 0; i < n; ++i) {
    if (Z[i].index() != i + 1)
      throw BadExchangePoly("exchange polynomial at position " + std::to_string(i + 1) +
                            " has index " + std::to_string(Z[i].index()));
    for (int s = 0; s <= Z[i].degree(); ++s) {
      if (Z[i].is_formal(s) && !P.has_generator(std::get<VarId>(Z[i].coeffs()[s])))
        throw BadExchangePoly("formal coefficient " +
                              var_name(std::get<VarId>(Z[i].coeffs()[s])) +
                              " is not a semifield generator");
      if (!Z[i].is_formal(s)) Z[i].value(s, P);  // kind check
    }
  }
  GenSeed s;
  s.symmetrizer = skew_symmetrizer(B);
  s.P = std::move(P);
  s.n = n;
  s.B = std::move(B);
  s.Z = std::move(Z);
  if (y.empty()) {
    for (int i = 1; i <= n; ++i) y.push_back(s.P.generator(yvar(i)));
  }
  if (static_cast<int>(y.size()) != n)
    throw DimensionMismatch("need one coefficient per direction");
  for (const auto& e : y)
    if (kind_of(e) != s.P.kind) throw Error("coefficient semifield kind mismatch");
  s.y = std::move(y);
  if (cluster_kind != VarKind::X && cluster_kind != VarKind::U)
    throw Error("cluster variables must be x- or u-generators");
  for (int i = 1; i <= n; ++i) s.x.push_back(RatFunc::var(VarId{cluster_kind, i, 0}));
  return s;
}

IntMat matrix_mutate(const IntMat& B, const std::vector<std::int64_t>& d, int k) {
  const int n = B.rows();
  if (B.cols() != n || static_cast<int>(d.size()) != n)
    throw DimensionMismatch("matrix_mutate: shape mismatch");
  if (k < 1 || k > n) throw DimensionMismatch("mutation direction out of range");
  const int k0 = k - 1;
  IntMat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k0 || j == k0)
        out(i, j) = -B(i, j);
      else
        out(i, j) = B(i, j) + pos(B(i, k0)) * d[k0] * B(k0, j) +
                    B(i, k0) * d[k0] * pos(-B(k0, j));
    }
  return out;
}

ExchangePoly reverse_poly(const ExchangePoly& z) { return z.reversed(); }

std::vector<RatFunc> hat_y(const GenSeed& s) {
  std::vector<RatFunc> out;
  out.reserve(s.n);
  for (int k = 0; k < s.n; ++k) {
    RatFunc h = sf_embed(s.y[k]);
    for (int i = 0; i < s.n; ++i) h = h * s.x[i].pow(s.B(i, k));
    out.push_back(std::move(h));
  }
  return out;
}

namespace {

// Z_k evaluated at y_k inside the coefficient semifield: the oplus-sum of
// z_{k,t} y_k^t over t = 0..d_k.
SemifieldElement z_at_y(const GenSeed& s, int k0, std::int64_t dk) {
  SemifieldElement z = s.Z[k0].value(0, s.P);
  for (std::int64_t t = 1; t <= dk; ++t)
    z = sf_oplus(z, sf_mul(s.Z[k0].value(t, s.P), sf_pow(s.y[k0], t)));
  return z;
}

// The coefficient half of a mutation in direction k0: new B, y, and Z,
// given z_eval = Z_k|_P(y_k) of the pre-mutation seed.
void advance_coefficients(const GenSeed& s, const std::vector<std::int64_t>& d, int k0,
                          const SemifieldElement& z_eval, GenSeed& out) {
  out.B = matrix_mutate(s.B, d, k0 + 1);
  out.y = s.y;
  out.y[k0] = sf_pow(s.y[k0], -1);
  for (int j = 0; j < s.n; ++j) {
    if (j == k0) continue;
    const std::int64_t bkj = s.B(k0, j);
    out.y[j] = sf_mul(s.y[j], sf_mul(sf_pow(s.y[k0], d[k0] * pos(bkj)), sf_pow(z_eval, -bkj)));
  }
  out.Z = s.Z;
  out.Z[k0] = s.Z[k0].reversed();
}

}  // namespace

GenSeed mutate(const GenSeed& s, int k) {
  if (k < 1 || k > s.n) throw DimensionMismatch("mutation direction out of range");
  const int k0 = k - 1;
  const auto d = s.degrees();
  const std::int64_t dk = d[k0];

  // hat(y)_k and the two evaluations of Z_k.
  RatFunc hy = sf_embed(s.y[k0]);
  for (int i = 0; i < s.n; ++i) hy = hy * s.x[i].pow(s.B(i, k0));
  RatFunc z_of_hat = s.Z[k0].ambient(0);
  for (std::int64_t t = 1; t <= dk; ++t)
    z_of_hat = z_of_hat + s.Z[k0].ambient(t) * hy.pow(t);
  const SemifieldElement z_trop = z_at_y(s, k0, dk);

  GenSeed out;
  out.P = s.P;
  out.n = s.n;
  out.symmetrizer = s.symmetrizer;

  out.x = s.x;
  RatFunc mono = RatFunc::constant(1);
  for (int i = 0; i < s.n; ++i) mono = mono * s.x[i].pow(pos(-s.B(i, k0)));
  out.x[k0] = mono.pow(dk) * z_of_hat / (sf_embed(z_trop) * s.x[k0]);

  advance_coefficients(s, d, k0, z_trop, out);
  return out;
}

GenSeed mutate_coefficients(const GenSeed& s, int k) {
  if (k < 1 || k > s.n) throw DimensionMismatch("mutation direction out of range");
  const int k0 = k - 1;
  const auto d = s.degrees();
  GenSeed out;
  out.P = s.P;
  out.n = s.n;
  out.symmetrizer = s.symmetrizer;
  out.x = s.x;
  advance_coefficients(s, d, k0, z_at_y(s, k0, d[k0]), out);
  return out;
}

GenSeed apply_word(const GenSeed& s, const MutationWord& w) {
  GenSeed cur = s;
  const MutationWord r = w.reduced();
  for (int k : r.letters()) cur = mutate(cur, k);
  return cur;
}

SeedCache::SeedCache(GenSeed initial) { memo_.emplace(std::vector<int>{}, std::move(initial)); }

GenSeed SeedCache::at(const MutationWord& w) {
  const MutationWord r = w.reduced();
  std::lock_guard<std::mutex> lock(mu_);
  const auto& letters = r.letters();
  std::size_t have = letters.size();
  while (have > 0 &&
         memo_.find(std::vector<int>(letters.begin(), letters.begin() + have)) == memo_.end())
    --have;
  for (std::size_t len = have; len < letters.size(); ++len) {
    std::vector<int> key(letters.begin(), letters.begin() + len);
    GenSeed next = mutate(memo_.at(key), letters[len]);
    key.push_back(letters[len]);
    memo_.emplace(std::move(key), std::move(next));
  }
  return memo_.at(letters);
}

std::vector<std::int64_t> PSeed::degrees() const {
  std::vector<std::int64_t> d;
  d.reserve(p.size());
  for (const auto& row : p) d.push_back(static_cast<std::int64_t>(row.size()) - 1);
  return d;
}

bool PSeed::equals(const PSeed& o) const {
  if (n != o.n || P.kind != o.P.kind || !(B == o.B)) return false;
  for (int i = 0; i < n; ++i) {
    if (!x[i].equals(o.x[i])) return false;
    if (p[i].size() != o.p[i].size()) return false;
    for (std::size_t s = 0; s < p[i].size(); ++s)
      if (!sf_equal(p[i][s], o.p[i][s])) return false;
  }
  return true;
}

PSeed to_p_seed(const GenSeed& s) {
  PSeed out;
  out.P = s.P;
  out.n = s.n;
  out.x = s.x;
  out.B = s.B;
  out.symmetrizer = s.symmetrizer;
  out.p.resize(s.n);
  for (int i = 0; i < s.n; ++i) {
    const std::int64_t d = s.Z[i].degree();
    SemifieldElement den = s.Z[i].value(0, s.P);
    for (std::int64_t t = 1; t <= d; ++t)
      den = sf_oplus(den, sf_mul(s.Z[i].value(t, s.P), sf_pow(s.y[i], t)));
    for (std::int64_t t = 0; t <= d; ++t)
      out.p[i].push_back(sf_div(sf_mul(s.Z[i].value(t, s.P), sf_pow(s.y[i], t)), den));
  }
  return out;
}

PSeed p_mutate(const PSeed& s, int k) {
  if (k < 1 || k > s.n) throw DimensionMismatch("mutation direction out of range");
  const int k0 = k - 1;
  const auto d = s.degrees();
  const std::int64_t dk = d[k0];

  PSeed out;
  out.P = s.P;
  out.n = s.n;
  out.symmetrizer = s.symmetrizer;
  out.B = matrix_mutate(s.B, d, k);

  out.x = s.x;
  RatFunc w = RatFunc::constant(1);
  for (int i = 0; i < s.n; ++i) w = w * s.x[i].pow(s.B(i, k0));
  RatFunc exch = sf_embed(s.p[k0][0]);
  for (std::int64_t t = 1; t <= dk; ++t)
    exch = exch + sf_embed(s.p[k0][t]) * w.pow(t);
  RatFunc mono = RatFunc::constant(1);
  for (int i = 0; i < s.n; ++i) mono = mono * s.x[i].pow(pos(-s.B(i, k0)));
  out.x[k0] = mono.pow(dk) * exch / s.x[k0];

  out.p = s.p;
  out.p[k0].assign(s.p[k0].rbegin(), s.p[k0].rend());
  const SemifieldElement top_ratio = sf_div(s.p[k0][dk], s.p[k0][0]);
  for (int j = 0; j < s.n; ++j) {
    if (j == k0) continue;
    const std::int64_t bkj = s.B(k0, j);
    std::vector<SemifieldElement> r;
    r.reserve(s.p[j].size());
    for (std::size_t t = 0; t < s.p[j].size(); ++t) {
      SemifieldElement rt = sf_div(s.p[j][t], s.p[j][0]);
      rt = sf_mul(rt, sf_pow(top_ratio, static_cast<std::int64_t>(t) * pos(bkj)));
      rt = sf_mul(rt, sf_pow(s.p[k0][0], static_cast<std::int64_t>(t) * bkj));
      r.push_back(std::move(rt));
    }
    SemifieldElement total = r[0];
    for (std::size_t t = 1; t < r.size(); ++t) total = sf_oplus(total, r[t]);
    for (std::size_t t = 0; t < r.size(); ++t) out.p[j][t] = sf_div(r[t], total);
  }
  return out;
}

GenSeed from_p_seed(const PSeed& s, std::optional<std::vector<SemifieldElement>> y_opt) {
  const auto d = s.degrees();
  for (int i = 0; i < s.n; ++i) {
    if (d[i] < 1) throw BadExchangePoly("coefficient tuple must have degree >= 1");
    SemifieldElement total = s.p[i][0];
    for (std::int64_t t = 1; t <= d[i]; ++t) total = sf_oplus(total, s.p[i][t]);
    if (!sf_equal(total, s.P.one()))
      throw BadExchangePoly("coefficient tuple violates the normalization condition");
  }
  std::vector<SemifieldElement> y;
  if (y_opt) {
    y = std::move(*y_opt);
    if (static_cast<int>(y.size()) != s.n)
      throw DimensionMismatch("need one coefficient per direction");
  } else {
    for (int i = 0; i < s.n; ++i)
      y.push_back(sf_root(sf_div(s.p[i][d[i]], s.p[i][0]), d[i]));
  }
  std::vector<ExchangePoly> Z;
  for (int i = 0; i < s.n; ++i) {
    std::vector<ExchangePoly::Coeff> cs;
    for (std::int64_t t = 0; t <= d[i]; ++t)
      cs.emplace_back(sf_mul(sf_pow(y[i], -t), sf_div(s.p[i][t], s.p[i][0])));
    Z.emplace_back(i + 1, std::move(cs));
  }
  GenSeed out;
  out.P = s.P;
  out.n = s.n;
  out.x = s.x;
  out.y = std::move(y);
  out.B = s.B;
  out.Z = std::move(Z);
  out.symmetrizer = s.symmetrizer;
  return out;
}

}  // namespace gca

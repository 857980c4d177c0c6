#include "gca/poly.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <optional>

namespace gca {

namespace {

std::atomic<std::size_t> g_max_terms{0};  // 0 = not initialized yet

std::size_t read_cap_from_env() {
  if (const char* s = std::getenv("GCA_MAX_TERMS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

}  // namespace

std::size_t max_terms() {
  std::size_t v = g_max_terms.load(std::memory_order_relaxed);
  if (v == 0) {
    v = read_cap_from_env();
    g_max_terms.store(v, std::memory_order_relaxed);
  }
  return v;
}

void set_max_terms(std::size_t cap) { g_max_terms.store(cap ? cap : 1, std::memory_order_relaxed); }

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(VarId v, Exp e) {
  Monomial m;
  if (e != 0) m.f_.push_back({v, e});
  return m;
}

Monomial Monomial::from_factors(Factors f) {
  std::sort(f.begin(), f.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : f) {
    if (!m.f_.empty() && m.f_.back().first == v)
      m.f_.back().second += e;
    else
      m.f_.push_back({v, e});
  }
  std::erase_if(m.f_, [](const auto& p) { return p.second == 0; });
  return m;
}

Monomial::Exp Monomial::exponent(VarId v) const {
  for (const auto& [w, e] : f_)
    if (w == v) return e;
  return 0;
}

Monomial::Exp Monomial::total_degree() const {
  Exp d = 0;
  for (const auto& [v, e] : f_) d += e;
  return d;
}

bool Monomial::all_nonnegative() const {
  for (const auto& [v, e] : f_)
    if (e < 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  auto a = f_.begin();
  auto b = o.f_.begin();
  while (a != f_.end() || b != o.f_.end()) {
    if (b == o.f_.end() || (a != f_.end() && a->first < b->first)) {
      r.f_.push_back(*a++);
    } else if (a == f_.end() || b->first < a->first) {
      r.f_.push_back(*b++);
    } else {
      Exp e = a->second + b->second;
      if (e != 0) r.f_.push_back({a->first, e});
      ++a;
      ++b;
    }
  }
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (auto& [v, e] : r.f_) e = -e;
  return r;
}

Monomial Monomial::pow(Exp k) const {
  if (k == 0) return {};
  Monomial r = *this;
  for (auto& [v, e] : r.f_) e *= k;
  return r;
}

bool Monomial::divisible_by(const Monomial& m) const {
  for (const auto& [v, e] : m.f_)
    if (exponent(v) < e) return false;
  return true;
}

Monomial Monomial::componentwise_min(const Monomial& a, const Monomial& b) {
  Factors merged;
  auto p = a.f_.begin();
  auto q = b.f_.begin();
  while (p != a.f_.end() || q != b.f_.end()) {
    if (q == b.f_.end() || (p != a.f_.end() && p->first < q->first)) {
      merged.push_back({p->first, std::min<Exp>(p->second, 0)});
      ++p;
    } else if (p == a.f_.end() || q->first < p->first) {
      merged.push_back({q->first, std::min<Exp>(0, q->second)});
      ++q;
    } else {
      merged.push_back({p->first, std::min(p->second, q->second)});
      ++p;
      ++q;
    }
  }
  return from_factors(std::move(merged));
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (auto c = total_degree() <=> o.total_degree(); c != 0) return c;
  auto a = f_.begin();
  auto b = o.f_.begin();
  while (a != f_.end() || b != o.f_.end()) {
    Exp ea = 0, eb = 0;
    if (b == o.f_.end() || (a != f_.end() && a->first < b->first)) {
      ea = (a++)->second;
    } else if (a == f_.end() || b->first < a->first) {
      eb = (b++)->second;
    } else {
      ea = (a++)->second;
      eb = (b++)->second;
    }
    if (ea != eb) return ea <=> eb;
  }
  return std::strong_ordering::equal;
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(Coef c) {
  LaurentPoly p;
  if (c != 0) p.t_.emplace(Monomial(), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::var(VarId v, Monomial::Exp e) {
  LaurentPoly p;
  p.t_.emplace(Monomial::var(v, e), 1);
  return p;
}

LaurentPoly LaurentPoly::term(Monomial m, Coef c) {
  LaurentPoly p;
  if (c != 0) p.t_.emplace(std::move(m), std::move(c));
  return p;
}

bool LaurentPoly::is_one() const {
  return t_.size() == 1 && t_.begin()->first.is_one() && t_.begin()->second == 1;
}

LaurentPoly::Coef LaurentPoly::coefficient(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Coef(0) : it->second;
}

bool LaurentPoly::has_negative_coef() const {
  for (const auto& [m, c] : t_)
    if (c < 0) return true;
  return false;
}

std::vector<VarId> LaurentPoly::support() const {
  std::vector<VarId> vs;
  for (const auto& [m, c] : t_)
    for (const auto& [v, e] : m.factors()) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool LaurentPoly::depends_on(VarId v) const {
  for (const auto& [m, c] : t_)
    if (m.exponent(v) != 0) return true;
  return false;
}

LaurentPoly::Coef LaurentPoly::content() const {
  Coef g = 0;
  for (const auto& [m, c] : t_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Monomial LaurentPoly::monomial_gcd() const {
  if (t_.empty()) return {};
  Monomial gcd = t_.begin()->first;
  for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
    gcd = Monomial::componentwise_min(gcd, it->first);
  return gcd;
}

void LaurentPoly::insert(Monomial m, Coef c) {
  auto [it, fresh] = t_.try_emplace(std::move(m), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

void LaurentPoly::check_cap() const {
  if (t_.size() > max_terms())
    throw TermLimit("polynomial exceeds GCA_MAX_TERMS (" + std::to_string(max_terms()) + " terms)");
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.t_) insert(m, c);
  check_cap();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.t_) insert(m, -c);
  check_cap();
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ma, ca] : a.t_) {
    for (const auto& [mb, cb] : b.t_) r.insert(ma * mb, ca * cb);
    r.check_cap();
  }
  return r;
}

LaurentPoly LaurentPoly::mul_term(const Monomial& m, const Coef& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [mm, cc] : t_) r.t_.emplace(mm * m, cc * c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r = constant(1);
  LaurentPoly base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

LaurentPoly LaurentPoly::div_content(const Coef& c) const {
  if (c == 0) throw InexactDivision("content division by zero");
  LaurentPoly r;
  for (const auto& [m, cc] : t_) {
    Coef q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), cc.get_mpz_t(), c.get_mpz_t());
    if (rem != 0) throw InexactDivision("coefficient not divisible by content");
    r.t_.emplace(m, std::move(q));
  }
  return r;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw InexactDivision("division by zero polynomial");
  if (a.is_zero()) return {};

  // Shift both to plain polynomials (componentwise min exponent 0), divide,
  // then shift the quotient back.
  Monomial sa = a.monomial_gcd();
  Monomial sb = b.monomial_gcd();
  LaurentPoly A = a.mul_term(sa.inverse(), 1);
  LaurentPoly B = b.mul_term(sb.inverse(), 1);

  // Single-divisor long division over Q.  The decomposition a = q*b + r with
  // no term of r divisible by the leading monomial of b is unique, so a zero
  // remainder here is equivalent to divisibility.
  std::map<Monomial, mpq_class> rem;
  for (const auto& [m, c] : A.terms()) rem.emplace(m, mpq_class(c));
  const Monomial& lmb = B.terms().rbegin()->first;
  const mpq_class lcb(B.terms().rbegin()->second);

  std::map<Monomial, mpq_class> quo;
  while (!rem.empty()) {
    auto lead = std::prev(rem.end());
    const Monomial lm = lead->first;
    if (!lm.divisible_by(lmb))
      throw InexactDivision("nonzero remainder in exact division");
    mpq_class qc = lead->second / lcb;
    qc.canonicalize();
    Monomial qm = lm * lmb.inverse();
    quo[qm] += qc;
    for (const auto& [m, c] : B.terms()) {
      Monomial key = m * qm;
      auto it = rem.find(key);
      if (it == rem.end()) it = rem.emplace(key, 0).first;
      it->second -= qc * mpq_class(c);
      if (it->second == 0) rem.erase(it);
    }
  }

  Monomial shift = sa * sb.inverse();
  LaurentPoly q;
  for (const auto& [m, c] : quo) {
    if (c == 0) continue;
    if (c.get_den() != 1)
      throw InexactDivision("quotient not integral");
    q.insert(m * shift, c.get_num());
  }
  return q;
}

// ----------------------------------------------------------------- RatFunc

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InexactDivision("zero denominator");
  normalize();
}

namespace {

LaurentPoly strip_monomial(const LaurentPoly& p) {
  Monomial mg = p.monomial_gcd();
  return mg.is_one() ? p : p.mul_term(mg.inverse(), 1);
}

LaurentPoly positive_lead(LaurentPoly p) {
  if (!p.is_zero() && p.terms().rbegin()->second < 0) return -p;
  return p;
}

Monomial::Exp degree_in(const LaurentPoly& p, VarId v) {
  Monomial::Exp d = 0;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Monomial::Exp e = m.exponent(v);
    if (first || e > d) d = e;
    first = false;
  }
  return d;
}

// p collected by powers of v; the coefficients are free of v.
std::map<Monomial::Exp, LaurentPoly> view_in(const LaurentPoly& p, VarId v) {
  std::map<Monomial::Exp, LaurentPoly> out;
  for (const auto& [m, c] : p.terms()) {
    Monomial::Exp e = m.exponent(v);
    out[e] += LaurentPoly::term(m * Monomial::var(v, -e), c);
  }
  return out;
}

LaurentPoly lead_coeff_in(const LaurentPoly& p, VarId v, Monomial::Exp deg) {
  LaurentPoly out;
  for (const auto& [m, c] : p.terms())
    if (m.exponent(v) == deg) out += LaurentPoly::term(m * Monomial::var(v, -deg), c);
  return out;
}

// Content of p viewed as a polynomial in v (gcd of the view coefficients).
LaurentPoly content_in(const LaurentPoly& p, VarId v) {
  LaurentPoly g;
  for (const auto& [e, coeff] : view_in(p, v)) {
    g = g.is_zero() ? positive_lead(coeff) : poly_gcd(g, coeff);
    if (g.is_one()) break;
  }
  return g;
}

// Pseudo-remainder of A by B in v: repeatedly scales by B's leading
// coefficient and cancels A's leading term, so the v-degree strictly drops.
LaurentPoly prem(LaurentPoly R, const LaurentPoly& B, VarId v) {
  const Monomial::Exp degB = degree_in(B, v);
  const LaurentPoly leadB = lead_coeff_in(B, v, degB);
  while (!R.is_zero()) {
    const Monomial::Exp degR = degree_in(R, v);
    if (degR < degB) break;
    const LaurentPoly leadR = lead_coeff_in(R, v, degR);
    R = R * leadB - (B * leadR).mul_term(Monomial::var(v, degR - degB), 1);
  }
  return R;
}

mpz_class igcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Intersection of the variable supports, and the one with the smallest
// shared degree (cheapest to eliminate).
std::vector<VarId> common_vars(const LaurentPoly& A, const LaurentPoly& B) {
  std::vector<VarId> va = A.support(), vb = B.support(), common;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(common));
  return common;
}

VarId cheapest_var(const LaurentPoly& A, const LaurentPoly& B, const std::vector<VarId>& common) {
  VarId v = common.front();
  Monomial::Exp best = 0;
  bool first = true;
  for (VarId w : common) {
    Monomial::Exp d = std::min(degree_in(A, w), degree_in(B, w));
    if (first || d < best) {
      best = d;
      v = w;
    }
    first = false;
  }
  return v;
}

// Primitive remainder-sequence gcd; exact but slow on large operands.
// Both inputs monomial-stripped with nonnegative exponents.
LaurentPoly gcd_prs(LaurentPoly A, LaurentPoly B) {
  if (A.is_single_term() || B.is_single_term())
    return LaurentPoly::constant(igcd(A.content(), B.content()));
  const std::vector<VarId> common = common_vars(A, B);
  if (common.empty()) return LaurentPoly::constant(igcd(A.content(), B.content()));
  const VarId v = cheapest_var(A, B, common);

  const LaurentPoly contA = content_in(A, v);
  const LaurentPoly contB = content_in(B, v);
  const LaurentPoly gcont = poly_gcd(contA, contB);
  A = exact_div(A, contA);
  B = exact_div(B, contB);
  if (degree_in(A, v) < degree_in(B, v)) std::swap(A, B);
  LaurentPoly G;
  while (true) {
    LaurentPoly R = prem(A, B, v);
    if (R.is_zero()) {
      G = B;
      break;
    }
    if (degree_in(R, v) == 0) {
      G = LaurentPoly::constant(1);
      break;
    }
    A = std::move(B);
    B = exact_div(R, content_in(R, v));
  }
  return gcont * G;
}

mpz_class height(const LaurentPoly& p) {
  mpz_class h = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_class a = abs(c);
    if (a > h) h = a;
  }
  return h;
}

// p with v evaluated at the integer xi (exponents of v are nonnegative here).
LaurentPoly eval_var(const LaurentPoly& p, VarId v, const mpz_class& xi) {
  LaurentPoly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial::Exp e = m.exponent(v);
    mpz_class coef = c;
    if (e > 0) {
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(e));
      coef *= pw;
    }
    out += LaurentPoly::term(m * Monomial::var(v, -e), coef);
  }
  return out;
}

bool try_exact_div(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q) {
  try {
    q = exact_div(a, b);
    return true;
  } catch (const InexactDivision&) {
    return false;
  }
}

// Heuristic gcd: evaluate one variable at a large integer, recurse, lift the
// image back by balanced base-xi digits, and verify by exact division.  On
// success the result is the true gcd; nullopt asks the caller to retry with
// a bigger point or fall back.
//
// Each recursion level eliminates one variable but multiplies the bit-length
// of the evaluation point by roughly the degree just eliminated, so deeply
// nested calls can reach astronomically large integers.  The shared fuel
// counter and the per-evaluation work estimate (terms x degree x point bits)
// bound the total work of one call tree; nullopt means "not determined",
// never "coprime".
constexpr int kHeurFuel = 256;
constexpr std::size_t kHeurEvalWork = std::size_t{1} << 26;

std::optional<LaurentPoly> gcd_heuristic(const LaurentPoly& A, const LaurentPoly& B, int depth,
                                         int& fuel);

std::optional<LaurentPoly> lift_digits(LaurentPoly image, VarId v, const mpz_class& xi,
                                       Monomial::Exp max_deg) {
  LaurentPoly G;
  const mpz_class half = xi / 2;
  for (Monomial::Exp i = 0; !image.is_zero(); ++i) {
    if (i > max_deg) return std::nullopt;
    LaurentPoly digit;
    for (const auto& [m, c] : image.terms()) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) digit += LaurentPoly::term(m, r);
    }
    if (!digit.is_zero()) G += digit.mul_term(Monomial::var(v, i), 1);
    image = (image - digit).div_content(xi);
  }
  return G;
}

std::optional<LaurentPoly> gcd_heuristic(const LaurentPoly& A, const LaurentPoly& B, int depth,
                                         int& fuel) {
  if (A.is_single_term() || B.is_single_term())
    return LaurentPoly::constant(igcd(A.content(), B.content()));
  const std::vector<VarId> common = common_vars(A, B);
  if (common.empty()) return LaurentPoly::constant(igcd(A.content(), B.content()));
  if (depth > 12 || --fuel < 0) return std::nullopt;
  const VarId v = cheapest_var(A, B, common);
  const Monomial::Exp degA = degree_in(A, v);
  const Monomial::Exp degB = degree_in(B, v);
  const Monomial::Exp max_deg = std::min(degA, degB);
  const std::size_t weight = (A.term_count() + B.term_count()) *
                             static_cast<std::size_t>(std::max(degA, degB) + 1);

  mpz_class xi = 2 * std::min(height(A), height(B)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (weight * mpz_sizeinbase(xi.get_mpz_t(), 2) > kHeurEvalWork) return std::nullopt;
    LaurentPoly a = eval_var(A, v, xi);
    LaurentPoly b = eval_var(B, v, xi);
    if (!a.is_zero() && !b.is_zero()) {
      auto image = gcd_heuristic(a, b, depth + 1, fuel);
      if (image) {
        auto lifted = lift_digits(*image, v, xi, max_deg);
        if (lifted && !lifted->is_zero()) {
          LaurentPoly G = strip_monomial(positive_lead(*lifted));
          G = G.div_content(G.content());
          LaurentPoly q;
          if (try_exact_div(A, G, q) && try_exact_div(B, G, q))
            return G * LaurentPoly::constant(igcd(A.content(), B.content()));
        }
      }
    }
    xi = xi * 73794 / 27011;  // odd growth keeps successive points unrelated
  }
  return std::nullopt;
}

// Both inputs monomial-stripped with nonnegative exponents.
LaurentPoly gcd_core(const LaurentPoly& A, const LaurentPoly& B) {
  int fuel = kHeurFuel;
  if (auto g = gcd_heuristic(A, B, 0, fuel)) return *g;
  return gcd_prs(A, B);
}

constexpr long kEvalPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr std::size_t kNumEvalPrimes = sizeof(kEvalPrimes) / sizeof(kEvalPrimes[0]);

std::vector<VarId> merged_support(const LaurentPoly& a, const LaurentPoly& b) {
  std::vector<VarId> vars = a.support();
  for (VarId v : b.support()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

// p evaluated at vars[i] = kEvalPrimes[(i + shift) % kNumEvalPrimes].
// Nonpositive exponents are skipped, so p should be monomial-stripped.
mpz_class eval_at_primes(const LaurentPoly& p, const std::vector<VarId>& vars, int shift) {
  mpz_class total = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_class t = c;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      Monomial::Exp e = m.exponent(vars[i]);
      if (e <= 0) continue;
      mpz_class pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), kEvalPrimes[(i + shift) % kNumEvalPrimes],
                    static_cast<unsigned long>(e));
      t *= pw;
    }
    total += t;
  }
  return total;
}

// Deterministic integer-evaluation filter: if the evaluations at a fixed
// point are coprime integers, no nonconstant common factor is plausible and
// the remainder-sequence run is skipped.  A miss only forgoes a reduction.
bool likely_coprime(const LaurentPoly& a, const LaurentPoly& b) {
  const std::vector<VarId> vars = merged_support(a, b);
  for (int shift : {0, 5}) {
    mpz_class g;
    mpz_class ea = eval_at_primes(strip_monomial(a), vars, shift);
    mpz_class eb = eval_at_primes(strip_monomial(b), vars, shift);
    mpz_gcd(g.get_mpz_t(), ea.get_mpz_t(), eb.get_mpz_t());
    if (g == 1) return true;
  }
  return false;
}

// Necessary condition for den | num in the Laurent ring (equivalently, for
// the monomial-stripped pair, in the polynomial ring), checked by integer
// evaluation at two points.  Zero evaluations are inconclusive and pass.
bool maybe_divisible(const LaurentPoly& num, const LaurentPoly& den) {
  const std::vector<VarId> vars = merged_support(num, den);
  for (int shift : {0, 5}) {
    mpz_class ea = eval_at_primes(strip_monomial(num), vars, shift);
    mpz_class eb = eval_at_primes(strip_monomial(den), vars, shift);
    if (eb == 0) continue;
    if (!mpz_divisible_p(ea.get_mpz_t(), eb.get_mpz_t())) return false;
  }
  return true;
}

// Best-effort gcd for fraction reduction: heuristic only, bounded work,
// no exact fallback.  nullopt tells the caller to keep the pair unreduced,
// which the fraction representation permits.
std::optional<LaurentPoly> poly_gcd_bounded(const LaurentPoly& a, const LaurentPoly& b) {
  Monomial common = Monomial::componentwise_min(a.monomial_gcd(), b.monomial_gcd());
  int fuel = kHeurFuel;
  auto core = gcd_heuristic(strip_monomial(a), strip_monomial(b), 0, fuel);
  if (!core) return std::nullopt;
  return positive_lead(core->mul_term(common, 1));
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return positive_lead(b);
  if (b.is_zero()) return positive_lead(a);
  Monomial common = Monomial::componentwise_min(a.monomial_gcd(), b.monomial_gcd());
  LaurentPoly core = gcd_core(strip_monomial(a), strip_monomial(b));
  return positive_lead(core.mul_term(common, 1));
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(1);
    return;
  }
  // Cancel the common monomial gcd (componentwise min over both sides, so
  // the normalized pair has min exponent 0 in every variable), strip the
  // common integer content, and fix the denominator's leading sign.
  Monomial md = Monomial::componentwise_min(num_.monomial_gcd(), den_.monomial_gcd());
  if (!md.is_one()) {
    den_ = den_.mul_term(md.inverse(), 1);
    num_ = num_.mul_term(md.inverse(), 1);
  }
  // Cancel the polynomial gcd unless doing so would introduce negative
  // coefficients into a fraction that is currently subtraction-free.
  if (!num_.is_single_term() && !den_.is_single_term() && !likely_coprime(num_, den_)) {
    try {
      const bool protect = !num_.has_negative_coef() && !den_.has_negative_coef();
      // When the denominator divides the numerator in the Laurent ring (the
      // generic situation for cluster-variable expressions, whose reduced
      // denominators are single terms), one exact division beats a gcd run.
      bool divided = false;
      if (maybe_divisible(num_, den_)) {
        LaurentPoly q;
        if (try_exact_div(num_, den_, q) && (!protect || !q.has_negative_coef())) {
          num_ = std::move(q);
          den_ = LaurentPoly::constant(1);
          divided = true;
        }
      }
      std::optional<LaurentPoly> pg =
          divided ? std::nullopt : poly_gcd_bounded(num_, den_);
      if (pg && !pg->is_single_term()) {
        LaurentPoly qn = exact_div(num_, *pg);
        LaurentPoly qd = exact_div(den_, *pg);
        if (!protect || (!qn.has_negative_coef() && !qd.has_negative_coef())) {
          num_ = std::move(qn);
          den_ = std::move(qd);
        }
      }
    } catch (const TermLimit&) {
      // Reduction overflowed the term cap; the unreduced pair is still valid.
    }
  }
  LaurentPoly::Coef g = num_.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.content().get_mpz_t());
  if (g > 1) {
    num_ = num_.div_content(g);
    den_ = den_.div_content(g);
  }
  if (den_.terms().rbegin()->second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.num_.is_zero()) throw InexactDivision("division by zero value");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::pow(std::int64_t k) const {
  if (k == 0) return RatFunc(LaurentPoly::constant(1));
  if (k < 0) {
    if (num_.is_zero()) throw InexactDivision("zero to a negative power");
    RatFunc inv(den_, num_);
    return inv.pow(-k);
  }
  RatFunc r = RatFunc(LaurentPoly::constant(1));
  RatFunc base = *this;
  auto e = static_cast<std::uint64_t>(k);
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool RatFunc::equals(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }

LaurentPoly RatFunc::as_laurent() const {
  if (num_.is_zero()) return {};
  if (!den_.is_single_term())
    throw InexactDivision("denominator is not a single term");
  const auto& [m, c] = *den_.terms().begin();
  LaurentPoly shifted = num_.mul_term(m.inverse(), 1);
  if (c == 1) return shifted;
  return shifted.div_content(c);
}

// ------------------------------------------------------------ Substitution

Substitution& Substitution::set(VarId v, RatFunc image) {
  m_[v] = Entry{1, std::move(image)};
  return *this;
}

Substitution& Substitution::set_root(VarId v, std::int64_t m, RatFunc image) {
  if (m <= 0) throw NoIntegralRoot("root power must be positive");
  m_[v] = Entry{m, std::move(image)};
  return *this;
}

const Substitution::Entry* Substitution::find(VarId v) const {
  auto it = m_.find(v);
  return it == m_.end() ? nullptr : &it->second;
}

RatFunc substitute(const LaurentPoly& p, const Substitution& s) {
  // Accumulate num/den directly; images usually have monomial denominators,
  // so the running denominator stays small.
  std::map<std::pair<VarId, std::int64_t>, RatFunc> powers;
  auto image_pow = [&](VarId v, const Substitution::Entry& en,
                       Monomial::Exp e) -> const RatFunc& {
    std::int64_t k = e;
    if (en.root != 1) {
      if (e % en.root != 0)
        throw NoIntegralRoot("exponent not divisible by root power in substitution");
      k = e / en.root;
    }
    auto key = std::make_pair(v, k);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, en.image.pow(k)).first;
    return it->second;
  };

  RatFunc acc;
  for (const auto& [m, c] : p.terms()) {
    RatFunc t(LaurentPoly::constant(c));
    for (const auto& [v, e] : m.factors()) {
      const Substitution::Entry* en = s.find(v);
      if (!en) throw MissingAssignment("no substitution image for a variable");
      t = t * image_pow(v, *en, e);
    }
    acc = acc + t;
  }
  return acc;
}

RatFunc substitute(const RatFunc& f, const Substitution& s) {
  return substitute(f.num(), s) / substitute(f.den(), s);
}

// ---------------------------------------------------------------- Grading

Grading& Grading::set(VarId v, std::vector<std::int64_t> deg) {
  if (static_cast<int>(deg.size()) != dim_)
    throw DimensionMismatch("degree vector has wrong dimension");
  deg_[v] = std::move(deg);
  return *this;
}

const std::vector<std::int64_t>& Grading::deg(VarId v) const {
  auto it = deg_.find(v);
  if (it == deg_.end()) throw MissingAssignment("variable has no assigned degree");
  return it->second;
}

std::vector<std::int64_t> Grading::multidegree(const LaurentPoly& p) const {
  std::vector<std::int64_t> result(dim_, 0);
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::vector<std::int64_t> d(dim_, 0);
    for (const auto& [v, e] : m.factors()) {
      const auto& dv = deg(v);
      for (int i = 0; i < dim_; ++i) d[i] += e * dv[i];
    }
    if (first) {
      result = std::move(d);
      first = false;
    } else if (d != result) {
      throw Inhomogeneous("terms of inhomogeneous polynomial disagree in degree");
    }
  }
  return result;
}

}  // namespace gca

#pragma once

// Generalized seeds and their mutation: clusters of rational expressions,
// coefficients in a semifield, a skew-symmetrizable exchange matrix, and one
// exchange polynomial per direction.  Also the p-seed presentation (exchange
// polynomials folded into normalized coefficient tuples) and the bijection
// between the two forms.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gca/semifield.hpp"
#include "gca/util.hpp"

namespace gca {

// Z_i(u) = sum_s z_{i,s} u^s with z_{i,0} = z_{i,d} = 1.  Interior
// coefficients are either formal Z-variables or explicit semifield elements.
class ExchangePoly {
 public:
  using Coeff = std::variant<VarId, SemifieldElement>;

  ExchangePoly(int index, std::vector<Coeff> coeffs);
  // 1 + z_{i,1} u + ... + z_{i,d-1} u^(d-1) + u^d with formal coefficients.
  static ExchangePoly formal(int index, int degree);
  // Coefficients given as plain integers (must be positive); ends must be 1.
  static ExchangePoly numeric(int index, const std::vector<long>& coeffs, SemifieldKind kind);

  int index() const { return index_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  bool is_formal(int s) const { return std::holds_alternative<VarId>(coeffs_[s]); }

  // Coefficient list reversed: the degree-s entry becomes the degree-(d-s) one.
  ExchangePoly reversed() const;

  // The coefficient as a semifield element (formal variables become
  // generators of P) and embedded into the ambient field (formal variables
  // become Z-variable monomials).
  SemifieldElement value(int s, const Semifield& P) const;
  RatFunc ambient(int s) const;

  // Value-level equality of coefficient lists.
  bool equals(const ExchangePoly& o, const Semifield& P) const;

 private:
  int index_;
  std::vector<Coeff> coeffs_;
};

class MutationWord {
 public:
  MutationWord() = default;
  MutationWord(std::vector<int> letters) : w_(std::move(letters)) {}
  MutationWord(std::initializer_list<int> letters) : w_(letters) {}
  // Comma-separated 1-based directions, e.g. "1,2,1".
  static MutationWord parse(const std::string& text);

  // Ref-qualified so that iterating over a temporary's letters keeps the
  // storage alive instead of dangling.
  const std::vector<int>& letters() const& { return w_; }
  std::vector<int> letters() && { return std::move(w_); }
  std::size_t size() const { return w_.size(); }
  bool empty() const { return w_.empty(); }
  MutationWord prefix(std::size_t len) const;
  MutationWord appended(int k) const;

  // Freely reduced: adjacent equal letters cancel (mutation is involutive).
  MutationWord reduced() const;

  std::string str() const;
  bool operator==(const MutationWord&) const = default;

 private:
  std::vector<int> w_;
};

struct GenSeed {
  Semifield P;
  int n{0};
  std::vector<RatFunc> x;
  std::vector<SemifieldElement> y;
  IntMat B;
  std::vector<ExchangePoly> Z;
  std::vector<std::int64_t> symmetrizer;

  std::vector<std::int64_t> degrees() const;
  // Value-level equality: cross-multiplied x, semifield y, exact B and Z.
  bool equals(const GenSeed& o) const;
};

// Least positive integer diagonal S with S*B skew-symmetric, found by
// propagation over the nonzero pattern of B; components scale independently.
std::vector<std::int64_t> skew_symmetrizer(const IntMat& B);

// Checks shapes, the skew-symmetrizable condition, exchange-polynomial ends
// and formal coefficients, then assembles the seed with cluster variables
// x_i = the i-th generator of cluster_kind.  If y is empty, the coefficients
// default to the semifield generators y_1..y_n.
GenSeed validate_seed(SemifieldKind kind, IntMat B, std::vector<ExchangePoly> Z,
                      std::vector<SemifieldElement> y = {},
                      VarKind cluster_kind = VarKind::X);
// Same, but over a caller-provided semifield (companions reuse the parent's).
GenSeed validate_seed(Semifield P, IntMat B, std::vector<ExchangePoly> Z,
                      std::vector<SemifieldElement> y = {},
                      VarKind cluster_kind = VarKind::X);

// The semifield generated by y_1..y_n and the formal coefficients of Z.
Semifield ambient_semifield(SemifieldKind kind, int n, const std::vector<ExchangePoly>& Z);

// b'_ij = -b_ij if i=k or j=k, else b_ij + [b_ik]_+ d_k b_kj + b_ik d_k [-b_kj]_+.
IntMat matrix_mutate(const IntMat& B, const std::vector<std::int64_t>& d, int k);

// Z_i with the coefficient list reversed.
ExchangePoly reverse_poly(const ExchangePoly& z);

// hat(y)_k = y_k prod_i x_i^{b_ik}, in the ambient field.
std::vector<RatFunc> hat_y(const GenSeed& s);

// One generalized mutation in direction k (1-based).
GenSeed mutate(const GenSeed& s, int k);

// The coefficient dynamics of mutate alone: y, B, and Z advance exactly as
// under mutate, while the cluster entries are carried through unchanged.
// Much cheaper than mutate when only the coefficients are needed, since the
// cluster expressions dominate the cost over non-tropical semifields.
GenSeed mutate_coefficients(const GenSeed& s, int k);

// Left-to-right composition of mutations along the freely reduced word.
GenSeed apply_word(const GenSeed& s, const MutationWord& w);

// Shared memo of seeds keyed by freely reduced words; get-or-insert is
// atomic, so concurrent walkers agree on every prefix.
class SeedCache {
 public:
  explicit SeedCache(GenSeed initial);
  GenSeed at(const MutationWord& w);

 private:
  std::mutex mu_;
  std::map<std::vector<int>, GenSeed> memo_;
};

// Chekhov-Shapiro form: exchange polynomials dissolved into coefficient
// tuples p_{i,0..d_i} satisfying the normalization and power conditions.
struct PSeed {
  Semifield P;
  int n{0};
  std::vector<RatFunc> x;
  std::vector<std::vector<SemifieldElement>> p;
  IntMat B;
  std::vector<std::int64_t> symmetrizer;

  std::vector<std::int64_t> degrees() const;
  bool equals(const PSeed& o) const;
};

// p_{i,s} = z_{i,s} y_i^s / Z_i|_P(y_i).
PSeed to_p_seed(const GenSeed& s);

// Mutation in the p-presentation: reversal in direction k, the displayed
// ratio rule for j != k (renormalized so the coefficients oplus to 1), and
// the exchange relation with w_k = prod x_i^{b_ik}.
PSeed p_mutate(const PSeed& s, int k);

// Inverse of to_p_seed: y_i is the d_i-th root of p_{i,d_i}/p_{i,0} (exact
// exponent division in the tropical semifield; elsewhere the caller must
// supply y), and z_{i,s} = y_i^{-s} p_{i,s}/p_{i,0}.
GenSeed from_p_seed(const PSeed& s,
                    std::optional<std::vector<SemifieldElement>> y = std::nullopt);

}  // namespace gca

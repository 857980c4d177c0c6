#pragma once

#include <string>
#include <vector>

#include "gca/companion.hpp"
#include "gca/invariants.hpp"
#include "gca/seed.hpp"

namespace gca {

enum class TableKind { Cgf, Xy, Seeds };
enum class OutputFormat { Text, Json };

// Everything a run computes along one mutation word: the recursion route
// (coefficient and grading matrices plus F-polynomials at every prefix),
// optionally the mutated seeds themselves, and any verification outcomes.
struct RunReport {
  GenSeed initial;
  MutationWord word;                 // freely reduced
  std::vector<PatternState> states;  // one per prefix, front = empty word
  std::vector<GenSeed> seeds;        // one per prefix when requested, else empty
  std::vector<CompanionReport> verifications;
};

// The recursion route along the freely reduced word; with_seeds also
// rebuilds the seed at every prefix (required by the xy and seeds tables).
RunReport run_word(const GenSeed& s, const MutationWord& w, bool with_seeds);

// One block per state, deterministically ordered and byte-stable: identical
// reports render identically.  Text blocks align on the entry labels; JSON
// documents serialize polynomials as {vars, terms:[{e, c}]} with exponent
// vectors over the listed variables, coefficients as decimal strings, and
// matrices as row-major nested arrays.
std::string render_tables(const RunReport& rep, TableKind table, OutputFormat format);

// Verification outcomes, one block (or array entry) per report.
std::string render_verification(const std::vector<CompanionReport>& reports,
                                OutputFormat format);

// Cross-checks the two independent routes to the pattern invariants along a
// word: C read off the tropical coefficients, G off the cluster grading, and
// F off the principal-coefficient cluster functions at unit cluster, each
// compared with the recursion values.  Mismatches are human-readable lines;
// an empty list means the routes agree at every prefix.
struct OracleDiff {
  MutationWord word;
  std::size_t states{0};
  std::vector<std::string> mismatches;
  bool pass() const { return mismatches.empty(); }
};

OracleDiff oracle_compare(const GenSeed& s, const MutationWord& w);

std::string render_oracle(const OracleDiff& d, OutputFormat format);

}  // namespace gca

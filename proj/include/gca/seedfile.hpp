#pragma once

#include <string>

#include "gca/seed.hpp"

namespace gca {

// JSON seed documents.  The schema (documented in the README):
//
//   {
//     "n": 2,                      // rank, must match the matrix
//     "semifield": "universal",    // or "tropical"
//     "B": [[0, -1], [1, 0]],      // row-major; a flat list of n*n is accepted
//     "Z": [                       // one entry per direction, in order
//       {"d": 3, "coeffs": "formal"},
//       {"d": 1}                   // coeffs defaults to "formal"
//     ],
//     "y": ["y1", "y2"]            // optional; defaults to the generators
//   }
//
// Z coefficients are either the keyword "formal" (interior coefficients
// become the variables z<i>_<s>) or a full list of d+1 entries with ends 1:
// nonnegative integers, or element strings ("2", "y1^2", "(1 + y1) / (y2)").
// Tropical seeds require monomial strings; universal seeds require
// subtraction-free ones.  y entries follow the same string syntax.
//
// Structural problems (missing or mistyped fields, unparseable text) raise
// ParseError naming the field; shape problems raise DimensionMismatch; seed
// validation errors propagate verbatim.
GenSeed parse_seed_file(const std::string& text);

// parse_seed_file applied to the file's contents; I/O failures raise
// ParseError naming the path.
GenSeed load_seed_file(const std::string& path);

// The canonical document for a seed: fixed key order, two-space indent,
// trailing newline.  parse_seed_file(render_seed_file(s)) equals s.
std::string render_seed_file(const GenSeed& s);

}  // namespace gca

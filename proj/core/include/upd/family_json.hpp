#pragma once

#include <string>
#include <string_view>

#include "upd/family.hpp"
#include "upd/ideal.hpp"

namespace upd {

// Strict parsers for the JSON family-spec format and the inline ideal format.
// Every syntax or semantic violation (unknown key, duplicate key, wrong type,
// negative number, trailing input) raises ParseError with the 1-based line
// and column of the offending token.
//
// Family files look like
//   { "mode": "graded" | "affine",
//     "vars": ["x","y"],
//     "params": ["n"],
//     "generators": [ {"x": 2}, {"y": {"const": 1, "coeff": {"n": 1}}} ] }
// Graded generators take non-negative integer exponents keyed by vars or
// params; affine generators are keyed by vars only, with either an integer
// (constant) or a {const, coeff} object.
FamilySpec parse_family(std::string_view text);

// Inline ideals: either a bare array of generator objects (variables inferred
// as the sorted union of the keys) or {"vars": [...], "generators": [...]}.
MonomialIdeal parse_inline_ideal(std::string_view text);

// Same format, but keys must name variables of an existing context.
MonomialIdeal parse_inline_ideal(std::string_view text, const ContextPtr& ctx);

// `a..b[,c..d]...`, one inclusive range per family parameter.
Box parse_box(std::string_view text);

// Re-runnable inline-ideal spec ({"vars":...,"generators":...}) for
// counterexample reports.
std::string ideal_spec_json(const MonomialIdeal& ideal);

}  // namespace upd

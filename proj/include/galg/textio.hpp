#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "galg/brackets.hpp"
#include "galg/invariants.hpp"
#include "galg/iso.hpp"

namespace galg {

// Presentation files (.galg) are line oriented; ';' also ends a statement and
// '#' starts a comment.
//
//   field Q | field GF <p>          first statement, default Q
//   gens <name>:<degree> ...
//   skew q(<a>,<b>)=<scalar> ...    unlisted pairs get 1
//   rel <poly>
//   tensor { ... } { ... }          blocks inherit the field
//   adjoin <prefix>:<count>         central degree-1 generators prefix1..
//
// Polynomials use + - * ^<int>, parentheses, [f,g] for fg - gf and
// coefficients <int> or <int>/<int>.

/// Throws SyntaxError, UnknownGenerator, NonPrimeModulus, InhomogeneousRelation.
Presentation parse_presentation(std::string_view source);
NcPoly parse_polynomial(std::string_view text, const GeneratorsPtr& gens, const FieldSpec& field);

/// Text that parse_presentation maps back to an equal presentation.
std::string print_presentation(const Presentation& pres);

enum class Format { Json, Table };
using Json = nlohmann::ordered_json;

Json scalar_json(const Scalar& s);
Json vector_json(std::span<const Scalar> v);
Json subspace_json(const Subspace& s);
Json filtered_json(const TruncatedAlgebra& alg, const FilteredSubspace& s);
Json presentation_json(const Presentation& pres);
Json hilbert_json(const std::vector<std::size_t>& h, int degree);
Json rules_json(const ReductionSystem& rs);
Json character_json(const Character& chi, std::size_t cotangent);
Json tangent_json(const TangentProfile& profile);
Json verdict_json(const IsoVerdict& verdict);
Json fingerprint_json(const GradedFingerprint& fp);
Json decomposition_json(const BracketDecomposition& dec);

/// JSON is printed compactly on one line; table mode is an indented listing.
std::string emit(const Json& result, Format format);

}  // namespace galg

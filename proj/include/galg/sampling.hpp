#pragma once

#include <random>

#include "galg/iso.hpp"

namespace galg {

using Rng = std::mt19937_64;

/// Uniform element of GF(p), or an integer in [-bound, bound] over Q.
Scalar random_scalar(const FieldSpec& field, Rng& rng, int bound = 5);
/// Nonzero; over Q a nonzero integer in [-bound, bound].
Scalar random_unit(const FieldSpec& field, Rng& rng, int bound = 5);

/// Homogeneous of degree d with up to `terms` random words; may be zero.
NcPoly random_homogeneous(const GeneratorsPtr& gens, const FieldSpec& field, int degree, std::size_t terms, Rng& rng);

/// Random parameter matrix; with nontrivial every off-diagonal entry is != 1
/// (needs a field with more than two elements).
SkewMatrix random_skew_matrix(const FieldSpec& field, std::size_t n, bool nontrivial, Rng& rng);

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng);
ElementaryChange random_elementary_change(const FieldSpec& field, std::size_t n, Rng& rng);

}  // namespace galg

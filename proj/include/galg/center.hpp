#pragma once

#include "galg/invariants.hpp"

namespace galg {

/// Degree-1 central elements of A inside A^(D), D >= 2. The algebra has no
/// central generators in degree 1 exactly when this is zero.
Subspace degree_one_center_check(const TruncatedAlgebra& alg);

/// The degree-1 central elements as polynomials, one per RREF basis row.
std::vector<NcPoly> degree_one_center_elements(const TruncatedAlgebra& alg);

/// Adjoins count central variables to A, recomputes the degree-1 center of
/// the extension in degree <= D and factors it out again. Throws
/// HypothesisViolated when A itself has degree-1 center or is not generated in
/// degree 1.
Presentation cancel(const Presentation& a, std::size_t count, int degree);

}  // namespace galg

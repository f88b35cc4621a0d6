#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galg/groebner.hpp"
#include "galg/invariants.hpp"

namespace galg {

/// New ordered generators (a_1 x_sigma(1), ..., a_n x_sigma(n)); sigma is
/// 0-based here.
struct ElementaryChange {
  std::vector<std::size_t> sigma;
  std::vector<Scalar> scalars;

  friend bool operator==(const ElementaryChange&, const ElementaryChange&) = default;
};

/// Outcome of an isomorphism search between A and B. A witness describes a
/// map B -> A sending the i-th generator of B to scalars[i] * x_sigma(i) of A
/// (or, for the brute-force search, to row i of linear_map); it is certified
/// only through checked_degree.
struct IsoVerdict {
  bool isomorphic = false;
  std::optional<ElementaryChange> witness;
  std::optional<Matrix> linear_map;
  int checked_degree = 0;
  std::string reason;
};

/// Some sigma with Q(i,j) == P(sigma(i), sigma(j)) for all i, j; the
/// lexicographically smallest one.
std::optional<std::vector<std::size_t>> perm_equiv(const SkewMatrix& p, const SkewMatrix& q);
/// All such sigma in lexicographic order.
std::vector<std::vector<std::size_t>> perm_equiv_all(const SkewMatrix& p, const SkewMatrix& q);

/// The skew quotient A rewritten in the generators of the change: the result
/// has parameter matrix P permuted by sigma and is isomorphic to A through
/// y_i -> a_i x_sigma(i). A must carry skew metadata.
Presentation apply_elementary_change(const Presentation& a, const ElementaryChange& change);

/// Re-checks a witness from scratch: every relation of B maps into the ideal
/// of A and the Hilbert functions agree through D.
bool verify_witness(const Presentation& a, const Presentation& b, const ElementaryChange& change, int degree);
bool verify_linear_map(const Presentation& a, const Presentation& b, const Matrix& map, int degree);

struct SkewIsoOptions {
  std::uint64_t budget = kDefaultBudget;
  /// Scalar candidates for the search; required to be set to search beyond
  /// {1} over Q. Defaults to all units over GF(p).
  std::optional<std::vector<Scalar>> candidates;
};

/// Decides graded isomorphism of skew quotients by searching elementary
/// changes. A needs every p_ij != 1 and extra relations of degree >= 3, B
/// extra relations of degree >= 2; otherwise HypothesisViolated.
IsoVerdict skew_quotient_iso(const Presentation& a, const Presentation& b, int degree, const SkewIsoOptions& options = {});

/// Exhaustive search over GL(A_1) for GF(2) or GF(3), dim A_1 <= 3, every
/// generator of weight 1 and no relations of degree 1.
IsoVerdict brute_force_graded_iso(const Presentation& a, const Presentation& b, int degree,
                                  std::uint64_t budget = kDefaultBudget);

}  // namespace galg

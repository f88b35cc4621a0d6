#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "galg/groebner.hpp"

namespace galg {

inline constexpr std::uint64_t kDefaultBudget = 4'000'000;

/// A unital algebra map A -> k, given by the value of each generator. Its
/// kernel is the codimension-1 ideal (x_1 - a_1, ..., x_n - a_n).
struct Character {
  Vector point;

  friend bool operator==(const Character&, const Character&) = default;
};

/// True iff every relation vanishes under the commuting substitution x_i -> alpha_i.
bool character_check(const Presentation& pres, std::span<const Scalar> alpha);

/// Every character over GF(p), in lexicographic order of residues. Throws
/// InfiniteField over Q and BudgetExceeded when p^n exceeds budget.
std::vector<Character> characters_enumerate(const Presentation& pres, std::uint64_t budget = kDefaultBudget);

/// {x_i - alpha_i}.
std::vector<NcPoly> character_ideal_generators(const Presentation& pres, std::span<const Scalar> alpha);

/// dim I/I^2 for I = ker(alpha): n minus the rank of the linear parts of the
/// relations after the shift x_i -> x_i + alpha_i. Throws NotACharacter.
std::size_t cotangent_dimension(const Presentation& pres, std::span<const Scalar> alpha);

/// The same number computed from ideal closures inside A^(D); D >= 2 * max
/// generator degree.
std::size_t cotangent_dimension_by_closure(const TruncatedAlgebra& alg, std::span<const Scalar> alpha);

struct TangentProfile {
  Character character;
  std::size_t cotangent = 0;
  /// power_dims[i-1] = dim I^i / I^{i+1} measured in A^(D).
  std::vector<std::size_t> power_dims;
};

/// Requires (depth + 1) * max generator degree <= D.
TangentProfile tangent_profile(const TruncatedAlgebra& alg, const Character& chi, unsigned depth);

/// Intersection inside A^(D) of ker(alpha) over every character alpha of
/// cotangent dimension s; all of A^(D) if there is none.
FilteredSubspace j_s(const TruncatedAlgebra& alg, std::size_t s, std::uint64_t budget = kDefaultBudget);

/// Intersection over characters whose profile (dim I^i/I^{i+1}, i = 1..len)
/// matches profile.
FilteredSubspace j_sequence(const TruncatedAlgebra& alg, std::span<const std::size_t> profile,
                            std::uint64_t budget = kDefaultBudget);

/// Exactly one character has cotangent dimension dim A_1.
bool unique_codim1_of_tangent_d(const TruncatedAlgebra& alg, std::uint64_t budget = kDefaultBudget);

/// f*A_d == A_d*f inside A_{deg f + d} for every d with deg f + d <= D.
/// Throws DegreeExceedsTruncation unless deg f + 1 <= D.
bool is_normal_up_to(const TruncatedAlgebra& alg, const NcPoly& f);

/// All normal lines of A_1 over GF(p), one representative per line with first
/// nonzero coordinate 1.
std::vector<NcPoly> normal_lines_degree_one(const TruncatedAlgebra& alg, std::uint64_t budget = 100'000);

/// Elements of A_deg commuting with every generator g with deg + deg g <= D,
/// as a subspace of A_deg in the basis normal_words(deg).
Subspace central_elements(const TruncatedAlgebra& alg, int deg);

/// dim of sum_{i+j=d, i,j>=1} span [A_i, A_j] for d = 0..D.
std::vector<std::size_t> commutator_dimensions(const TruncatedAlgebra& alg);

/// Invariants of the graded algebra up to degree D; equal fingerprints are
/// necessary for a graded isomorphism. The finite-field entries are absent
/// over Q.
struct GradedFingerprint {
  int degree = 0;
  std::vector<std::size_t> hilbert;
  std::vector<std::size_t> commutator_dims;
  std::optional<std::size_t> normal_line_count;
  std::optional<std::map<std::size_t, std::size_t>> cotangent_multiset;

  friend bool operator==(const GradedFingerprint&, const GradedFingerprint&) = default;
};

GradedFingerprint graded_fingerprint(const TruncatedAlgebra& alg, std::uint64_t budget = kDefaultBudget);

}  // namespace galg

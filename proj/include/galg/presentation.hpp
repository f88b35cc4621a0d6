#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "galg/freealg.hpp"
#include "galg/linalg.hpp"

namespace galg {

/// Parameter matrix of a skew polynomial ring: p_ii = 1, p_ji = 1/p_ij, all
/// entries nonzero.
class SkewMatrix {
 public:
  /// Throws InvalidSkewMatrix on a violated invariant.
  SkewMatrix(FieldSpec field, std::vector<Vector> entries);

  /// Entries above the diagonal given as (i, j, p_ij) with i < j; unspecified
  /// pairs default to 1 and the lower triangle is filled by inversion.
  static SkewMatrix from_upper(FieldSpec field, std::size_t n,
                               const std::vector<std::tuple<std::size_t, std::size_t, Scalar>>& upper);
  static SkewMatrix uniform(FieldSpec field, std::size_t n, const Scalar& q);

  std::size_t size() const noexcept { return entries_.size(); }
  const FieldSpec& field() const noexcept { return field_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }

  /// True when p_ij != 1 for every i != j.
  bool all_off_diagonal_nontrivial() const;
  /// Q with Q_ij = P_{sigma(i) sigma(j)}.
  SkewMatrix permuted(std::span<const std::size_t> sigma) const;
  /// Block diagonal sum; cross entries are 1.
  static SkewMatrix direct_sum(const SkewMatrix& a, const SkewMatrix& b);
  /// Principal submatrix on the given indices (in order).
  SkewMatrix restricted(std::span<const std::size_t> keep) const;

  friend bool operator==(const SkewMatrix&, const SkewMatrix&) = default;

 private:
  FieldSpec field_;
  std::vector<Vector> entries_;
};

/// A connected graded algebra k<x_1..x_n>/(relations) with homogeneous
/// relations of degree >= 1, each stored monic in deglex.
///
/// When built from a skew polynomial ring the parameter matrix is kept, and the
/// first n(n-1)/2 relations are the skew relations x_j x_i - p_ij x_i x_j in
/// (i, j) lexicographic order; later relations are the "extra" ones.
class Presentation {
 public:
  Presentation(FieldSpec field, GeneratorsPtr gens, std::vector<NcPoly> relations);

  const FieldSpec& field() const noexcept { return field_; }
  const GeneratorsPtr& generators() const noexcept { return gens_; }
  const GeneratorSet& gens() const noexcept { return *gens_; }
  std::size_t num_generators() const noexcept { return gens_->size(); }
  const std::vector<NcPoly>& relations() const noexcept { return relations_; }
  NcPoly generator(std::size_t i) const { return NcPoly::generator(gens_, field_, i); }
  NcPoly zero() const { return NcPoly(gens_, field_); }

  const std::optional<SkewMatrix>& skew() const noexcept { return skew_; }
  std::span<const NcPoly> extra_relations() const;
  std::optional<int> min_relation_degree() const;
  std::optional<int> min_extra_degree() const;
  int max_relation_degree() const;

  friend bool operator==(const Presentation&, const Presentation&);

 private:
  friend Presentation skew_ring(const SkewMatrix&, std::vector<std::string>, std::vector<int>);
  friend Presentation quotient(const Presentation&, const std::vector<NcPoly>&);

  FieldSpec field_;
  GeneratorsPtr gens_;
  std::vector<NcPoly> relations_;
  std::optional<SkewMatrix> skew_;
};

/// Copy of f over an equal generator set held by a different pointer.
NcPoly rebind(const NcPoly& f, const GeneratorsPtr& gens);
/// f with letter l renamed to letter_map[l], over target.
NcPoly remap(const NcPoly& f, const GeneratorsPtr& target, std::span<const Letter> letter_map);

Presentation free_algebra(FieldSpec field, std::vector<std::string> names, std::vector<int> degrees);

/// Relations x_j x_i - p_ij x_i x_j for i < j. Names default to x1..xn and
/// degrees to 1.
Presentation skew_ring(const SkewMatrix& p, std::vector<std::string> names = {},
                       std::vector<int> degrees = {});

/// Appends homogeneous relations; throws InhomogeneousRelation.
Presentation quotient(const Presentation& a, const std::vector<NcPoly>& extra);

/// Plain algebra tensor product; generator names get "a_"/"b_" prefixes only
/// when the factors share a name.
Presentation tensor(const Presentation& a, const Presentation& b);

/// Adjoins count central degree-1 generators prefix1..prefixN.
Presentation adjoin_central(const Presentation& a, std::size_t count, const std::string& prefix = "t");

/// Quotient by the ideal generated by linearly independent degree-1 elements,
/// realized by solving each element for one generator (latest generators
/// first) and substituting. Throws DependentElements.
Presentation eliminate_degree_one(const Presentation& a, const std::vector<NcPoly>& elems);

}  // namespace galg

#pragma once

#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "galg/linalg.hpp"
#include "galg/presentation.hpp"

namespace galg {

enum class ReductionStrategy { Leftmost, Rightmost };

/// lead -> sum of tail terms; every tail word is deglex-smaller than lead.
struct RewriteRule {
  Word lead;
  std::vector<std::pair<Word, Scalar>> tail;
};

/// Reduced noncommutative Groebner basis of a homogeneous presentation,
/// complete for all words of degree <= D.
///
/// Completion runs degree by degree: at degree d the relations of degree d and
/// the S-polynomials of every overlap ambiguity of total degree d are reduced
/// by the rules found so far, then interreduced by row echelon form. Every
/// overlap of degree <= D is resolved this way, and since rule leads are
/// irreducible by earlier rules no inclusion ambiguities arise.
class ReductionSystem {
 public:
  /// Throws TruncationTooSmall if D < 1 or a relation has degree above D.
  static ReductionSystem build(const Presentation& pres, int degree);

  const Presentation& presentation() const noexcept { return pres_; }
  const GeneratorSet& gens() const noexcept { return pres_.gens(); }
  const FieldSpec& field() const noexcept { return pres_.field(); }
  int truncation_degree() const noexcept { return degree_; }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }

  /// Throws DegreeExceedsTruncation if f has a word of degree above D.
  NcPoly normal_form(const NcPoly& f, ReductionStrategy strategy = ReductionStrategy::Leftmost) const;
  bool is_normal(const Word& w) const;
  /// Normal words of degree d, deglex-descending.
  const std::vector<Word>& normal_words(int d) const;
  /// h(0..D).
  std::vector<std::size_t> hilbert() const;

 private:
  ReductionSystem(Presentation pres, int degree) : pres_(std::move(pres)), degree_(degree) {}

  struct Redex {
    std::size_t rule;
    std::size_t position;
  };
  std::optional<Redex> find_redex(const Word& w, ReductionStrategy strategy) const;
  NcPoly::Terms reduce_terms(const NcPoly::Terms& f, ReductionStrategy strategy) const;
  void add_rule(RewriteRule rule);
  void enumerate_normal_words();

  Presentation pres_;
  int degree_;
  std::vector<RewriteRule> rules_;
  std::unordered_map<Word, std::size_t, WordHash> rule_by_lead_;
  std::vector<std::size_t> lead_lengths_;
  std::vector<std::vector<Word>> normal_words_;
};

std::vector<std::size_t> hilbert(const ReductionSystem& rs);

/// The truncation A^(D) as a vector space with basis the normal words of
/// degree <= D. Coordinates run over degrees D, D-1, ..., 0 and within one
/// degree in descending lex order, so the first nonzero coordinate of a vector
/// is its deglex-leading word and row echelon bases respect the degree
/// filtration.
class TruncatedAlgebra {
 public:
  explicit TruncatedAlgebra(ReductionSystem rs);
  static TruncatedAlgebra build(const Presentation& pres, int degree);

  const ReductionSystem& system() const noexcept { return rs_; }
  const Presentation& presentation() const noexcept { return rs_.presentation(); }
  const FieldSpec& field() const noexcept { return rs_.field(); }
  const GeneratorSet& gens() const noexcept { return rs_.gens(); }
  int truncation_degree() const noexcept { return rs_.truncation_degree(); }

  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t component_dim(int d) const;
  std::size_t component_offset(int d) const;
  const Word& basis_word(std::size_t col) const { return basis_.at(col); }
  int column_degree(std::size_t col) const { return (*column_degrees_).at(col); }
  const std::shared_ptr<const std::vector<int>>& column_degrees() const noexcept { return column_degrees_; }
  std::size_t column_of(const Word& normal_word) const;

  Vector to_vector(const NcPoly& f) const;
  NcPoly to_poly(std::span<const Scalar> v) const;
  /// Coordinates of the degree-d part of f in the basis of A_d.
  Vector component_vector(const NcPoly& f, int d) const;
  NcPoly component_poly(std::span<const Scalar> coords, int d) const;
  /// Degree of the leading word, -1 for zero.
  int top_degree(std::span<const Scalar> v) const;

  /// g*v and v*g; words pushed past degree D are dropped.
  Vector left_multiply(std::size_t gen, std::span<const Scalar> v) const;
  Vector right_multiply(std::size_t gen, std::span<const Scalar> v) const;
  /// Product in A^(D) (terms above D dropped).
  NcPoly multiply(const NcPoly& a, const NcPoly& b) const;

 private:
  using Sparse = std::vector<std::pair<std::size_t, Scalar>>;
  Sparse sparse_of(const NcPoly& f) const;
  Vector apply_table(const std::vector<Sparse>& table, std::span<const Scalar> v) const;

  ReductionSystem rs_;
  std::vector<Word> basis_;
  std::shared_ptr<const std::vector<int>> column_degrees_;
  std::unordered_map<Word, std::size_t, WordHash> column_of_;
  std::vector<std::size_t> offset_;
  std::vector<std::vector<Sparse>> left_;   // [gen][col]
  std::vector<std::vector<Sparse>> right_;  // [gen][col]
};

/// A subspace of A^(D) together with its degree filtration: stratum(d) is the
/// set of elements whose leading word has degree <= d.
class FilteredSubspace {
 public:
  FilteredSubspace(Subspace space, std::shared_ptr<const std::vector<int>> column_degrees);

  const Subspace& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  std::size_t codim() const noexcept { return space_.ambient_dim() - space_.dim(); }
  int max_degree() const;

  Subspace stratum(int d) const;
  std::size_t stratum_dim(int d) const;
  /// Dimension of the degree-d graded piece: stratum_dim(d) - stratum_dim(d-1).
  std::size_t graded_dim(int d) const;
  bool contains(std::span<const Scalar> v) const { return space_.contains(v); }

  FilteredSubspace intersection(const FilteredSubspace& other) const;
  /// stratum(e) equal for every e <= d.
  bool agrees_up_to(const FilteredSubspace& other, int d) const;

  friend bool operator==(const FilteredSubspace& a, const FilteredSubspace& b) { return a.space_ == b.space_; }

 private:
  Subspace space_;
  std::shared_ptr<const std::vector<int>> column_degrees_;
};

FilteredSubspace whole_algebra(const TruncatedAlgebra& alg);
FilteredSubspace zero_subspace(const TruncatedAlgebra& alg);

/// Smallest subspace of A^(D) containing gens and closed under multiplication
/// by generators on either side whenever the product stays in degree <= D.
FilteredSubspace ideal_closure(const TruncatedAlgebra& alg, const std::vector<NcPoly>& gens);
FilteredSubspace ideal_closure(const TruncatedAlgebra& alg, std::vector<Vector> gens);

/// Closure of all k-fold products of gens (the k-th power of their ideal).
/// Throws TruncationTooSmall when k * max degree of gens exceeds D.
FilteredSubspace ideal_power(const TruncatedAlgebra& alg, const std::vector<NcPoly>& gens, unsigned k);

/// The augmentation ideal A_{>=1} inside A^(D).
FilteredSubspace augmentation_ideal(const TruncatedAlgebra& alg);

/// For 2 <= d <= D, A_1 * A_{d-1} spans A_d.
bool is_generated_in_degree_one(const TruncatedAlgebra& alg);

}  // namespace galg

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "galg/scalar.hpp"

namespace galg {

using Letter = std::uint16_t;

/// A monomial of the free algebra: a sequence of generator indices. The empty
/// word is the unit.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  Word(std::initializer_list<Letter> init) : letters(init) {}
  explicit Word(std::vector<Letter> l) : letters(std::move(l)) {}

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  Letter operator[](std::size_t i) const { return letters[i]; }

  Word subword(std::size_t pos, std::size_t len) const;

  friend Word operator*(const Word& a, const Word& b);
  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Named generators with positive integer weights.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  GeneratorSet(std::vector<std::string> names, std::vector<int> degrees);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int degree(std::size_t i) const { return degrees_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  std::optional<std::size_t> find(const std::string& name) const;

  int degree(const Word& w) const;
  bool all_degree_one() const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> degrees_;
};

using GeneratorsPtr = std::shared_ptr<const GeneratorSet>;

GeneratorsPtr make_generators(std::vector<std::string> names, std::vector<int> degrees);

/// Degree first, then left-to-right lexicographic on generator indices.
std::strong_ordering deglex_compare(const GeneratorSet& gens, const Word& u, const Word& v);

/// Every word of weighted degree exactly d, in lexicographic order.
std::vector<Word> words_of_degree(const GeneratorSet& gens, int d);

/// A finite linear combination of words with nonzero coefficients.
class NcPoly {
 public:
  using Terms = std::map<Word, Scalar>;

  NcPoly(GeneratorsPtr gens, FieldSpec field);

  static NcPoly constant(GeneratorsPtr gens, const Scalar& c);
  static NcPoly monomial(GeneratorsPtr gens, Word w, const Scalar& c);
  static NcPoly generator(GeneratorsPtr gens, const FieldSpec& field, std::size_t index);

  const GeneratorsPtr& generators() const noexcept { return gens_; }
  const FieldSpec& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Adds c*w, dropping the entry if it cancels.
  void add_term(const Word& w, const Scalar& c);
  Scalar coefficient(const Word& w) const;

  /// The common degree of all words; nullopt when inhomogeneous. The zero
  /// polynomial reports nullopt as well.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const;
  /// Largest word degree, -1 for zero.
  int max_degree() const;
  int min_degree() const;

  /// Deglex-greatest word; throws InvalidArgument on zero.
  const Word& leading_word() const;
  const Scalar& leading_coefficient() const;
  /// Scaled so that the leading coefficient is 1 (zero stays zero).
  NcPoly monic() const;

  NcPoly homogeneous_component(int d) const;

  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& rhs);
  NcPoly& operator-=(const NcPoly& rhs);
  NcPoly& operator*=(const Scalar& c);

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const Scalar& c) { return a *= c; }
  friend NcPoly operator*(const Scalar& c, NcPoly a) { return a *= c; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend bool operator==(const NcPoly& a, const NcPoly& b);

 private:
  void check_compatible(const NcPoly& other) const;

  GeneratorsPtr gens_;
  FieldSpec field_;
  Terms terms_;
};

NcPoly commutator(const NcPoly& f, const NcPoly& g);
NcPoly power(const NcPoly& f, unsigned k);

/// Algebra map from the free algebra on f's generators: generator i goes to
/// images[i]. All images must share one generator set and field.
NcPoly substitute(const NcPoly& f, std::span<const NcPoly> images);

/// Terms sorted deglex-descending.
std::vector<std::pair<Word, Scalar>> sorted_terms(const NcPoly& f);

/// Text form in the presentation language, e.g. "x^2*y - 3/2*y*x".
std::string to_string(const NcPoly& f);
std::string word_to_string(const GeneratorSet& gens, const Word& w);

}  // namespace galg

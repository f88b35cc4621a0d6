#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "galg/freealg.hpp"

namespace galg {

/// The iterated commutator [x_d, [x_d, ..., [x_d, x_i]...]] with order - 1
/// copies of the distinguished generator x_d. order 1 is x_i itself.
struct BracketLetter {
  std::size_t index = 0;
  unsigned order = 1;

  friend auto operator<=>(const BracketLetter&, const BracketLetter&) = default;
};

using BracketWord = std::vector<BracketLetter>;
/// A noncommutative polynomial whose letters are bracket letters.
using BracketPoly = std::map<BracketWord, Scalar>;

/// r = sum_s x_d^s * parts[s], each part a polynomial in bracket letters.
struct BracketDecomposition {
  GeneratorsPtr gens;
  FieldSpec field;
  std::size_t distinguished = 0;
  int degree = 0;
  std::map<unsigned, BracketPoly> parts;
};

/// Throws DistinguishedIndexClash when letter.index == d, HypothesisViolated
/// unless every generator has weight 1.
NcPoly bracket_expand(const GeneratorsPtr& gens, const FieldSpec& field, const BracketLetter& letter, std::size_t d);

/// Rewrites r over the alphabet {x_d} and bracket letters with
/// B(i,j) x_d -> x_d B(i,j) - B(i,j+1), always at the leftmost redex, until
/// every word is a power of x_d followed by bracket letters.
/// Throws InhomogeneousInput for inhomogeneous r.
BracketDecomposition bracket_decompose(const NcPoly& r, std::size_t d);

/// sum_s x_d^s * expand(parts[s]); reproduces the decomposed polynomial.
NcPoly expand(const BracketDecomposition& dec);
NcPoly expand(const BracketDecomposition& dec, const BracketPoly& part);

/// Expanded degree of a part; -1 for the zero part.
int expanded_degree(const BracketPoly& part);

/// Largest s with parts[s] != 0. Throws ZeroDecomposition.
unsigned leading_part_index(const BracketDecomposition& dec);

/// Bracket letters print as name^[j].
std::string to_string(const BracketDecomposition& dec, const BracketPoly& part);
std::string to_string(const BracketDecomposition& dec);

}  // namespace galg

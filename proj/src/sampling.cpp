#include "galg/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "galg/error.hpp"

namespace galg {

Scalar random_scalar(const FieldSpec& field, Rng& rng, int bound) {
  if (field.is_prime_field()) {
    return Scalar::from_int(field, std::uniform_int_distribution<long long>(0, field.modulus() - 1)(rng));
  }
  return Scalar::from_int(field, std::uniform_int_distribution<long long>(-bound, bound)(rng));
}

Scalar random_unit(const FieldSpec& field, Rng& rng, int bound) {
  for (;;) {
    Scalar s = random_scalar(field, rng, bound);
    if (!s.is_zero()) return s;
  }
}

NcPoly random_homogeneous(const GeneratorsPtr& gens, const FieldSpec& field, int degree, std::size_t terms, Rng& rng) {
  NcPoly f(gens, field);
  auto words = words_of_degree(*gens, degree);
  if (words.empty()) return f;
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  for (std::size_t k = 0; k < terms; ++k) f.add_term(words[pick(rng)], random_unit(field, rng));
  return f;
}

SkewMatrix random_skew_matrix(const FieldSpec& field, std::size_t n, bool nontrivial, Rng& rng) {
  if (nontrivial && field.is_prime_field() && field.modulus() == 2) {
    throw Error(ErrorKind::InvalidArgument, "GF(2) has no unit other than 1");
  }
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> upper;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Scalar s = random_unit(field, rng);
      while (nontrivial && s.is_one()) s = random_unit(field, rng);
      upper.emplace_back(i, j, s);
    }
  }
  return SkewMatrix::from_upper(field, n, upper);
}

std::vector<std::size_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

ElementaryChange random_elementary_change(const FieldSpec& field, std::size_t n, Rng& rng) {
  ElementaryChange change{random_permutation(n, rng), {}};
  for (std::size_t i = 0; i < n; ++i) change.scalars.push_back(random_unit(field, rng));
  return change;
}

}  // namespace galg

#include "galg/center.hpp"

#include "galg/error.hpp"

namespace galg {

Subspace degree_one_center_check(const TruncatedAlgebra& alg) { return central_elements(alg, 1); }

std::vector<NcPoly> degree_one_center_elements(const TruncatedAlgebra& alg) {
  std::vector<NcPoly> out;
  Subspace z = degree_one_center_check(alg);
  for (const auto& row : z.basis()) out.push_back(alg.component_poly(row, 1));
  return out;
}

Presentation cancel(const Presentation& a, std::size_t count, int degree) {
  auto alg = TruncatedAlgebra::build(a, degree);
  if (!is_generated_in_degree_one(alg) || !a.gens().all_degree_one()) {
    throw Error(ErrorKind::HypothesisViolated, "cancellation needs an algebra generated in degree 1");
  }
  if (degree_one_center_check(alg).dim() != 0) {
    throw Error(ErrorKind::HypothesisViolated, "the algebra has nonzero central elements in degree 1");
  }
  if (count == 0) return a;
  Presentation extended = adjoin_central(a, count);
  auto ext = TruncatedAlgebra::build(extended, degree);
  return eliminate_degree_one(extended, degree_one_center_elements(ext));
}

}  // namespace galg

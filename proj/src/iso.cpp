#include "galg/iso.hpp"

#include <algorithm>

#include "galg/error.hpp"

namespace galg {

namespace {

std::vector<Scalar> sorted_row(const SkewMatrix& m, std::size_t i) {
  std::vector<Scalar> row;
  for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
  std::sort(row.begin(), row.end(), [](const Scalar& a, const Scalar& b) { return canonical_compare(a, b) < 0; });
  return row;
}

// Images of B's generators inside A under y_i -> a_i x_sigma(i).
std::vector<NcPoly> change_images(const Presentation& a, const ElementaryChange& change) {
  std::vector<NcPoly> images;
  for (std::size_t i = 0; i < change.sigma.size(); ++i) {
    images.push_back(a.generator(change.sigma[i]) * change.scalars[i]);
  }
  return images;
}

bool relations_transport(const ReductionSystem& rs_a, const std::vector<NcPoly>& relations,
                         const std::vector<NcPoly>& images) {
  return std::all_of(relations.begin(), relations.end(), [&](const NcPoly& r) {
    return rs_a.normal_form(substitute(r, images)).is_zero();
  });
}

std::size_t last_letter(const NcPoly& f) {
  std::size_t last = 0;
  for (const auto& [w, c] : f.terms()) {
    for (Letter l : w.letters) last = std::max<std::size_t>(last, l);
  }
  return last;
}

void check_truncation(const Presentation& a, const Presentation& b, int degree) {
  if (degree < 1 || a.max_relation_degree() > degree || b.max_relation_degree() > degree) {
    throw Error(ErrorKind::TruncationTooSmall, "truncation degree " + std::to_string(degree) +
                                                   " is below a relation degree");
  }
}

IsoVerdict negative(int degree, std::string reason) {
  IsoVerdict v;
  v.checked_degree = degree;
  v.reason = std::move(reason);
  return v;
}

}  // namespace

std::vector<std::vector<std::size_t>> perm_equiv_all(const SkewMatrix& p, const SkewMatrix& q) {
  std::vector<std::vector<std::size_t>> out;
  if (p.size() != q.size() || !(p.field() == q.field())) return out;
  const std::size_t n = p.size();
  std::vector<std::vector<Scalar>> sig_p, sig_q;
  for (std::size_t i = 0; i < n; ++i) {
    sig_p.push_back(sorted_row(p, i));
    sig_q.push_back(sorted_row(q, i));
  }
  std::vector<std::size_t> sigma(n);
  std::vector<bool> used(n, false);
  auto place = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(sigma);
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c] || !(sig_p[c] == sig_q[i])) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) ok = q(i, k) == p(c, sigma[k]) && q(k, i) == p(sigma[k], c);
      if (!ok) continue;
      sigma[i] = c;
      used[c] = true;
      self(self, i + 1);
      used[c] = false;
    }
  };
  place(place, 0);
  return out;
}

std::optional<std::vector<std::size_t>> perm_equiv(const SkewMatrix& p, const SkewMatrix& q) {
  auto all = perm_equiv_all(p, q);
  if (all.empty()) return std::nullopt;
  return all.front();
}

Presentation apply_elementary_change(const Presentation& a, const ElementaryChange& change) {
  if (!a.skew()) throw Error(ErrorKind::HypothesisViolated, "elementary changes apply to skew quotients");
  const std::size_t n = a.num_generators();
  if (change.sigma.size() != n || change.scalars.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "elementary change has the wrong size");
  }
  std::vector<std::size_t> inverse(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (change.sigma[i] >= n || inverse[change.sigma[i]] != n) {
      throw Error(ErrorKind::InvalidArgument, "sigma is not a permutation");
    }
    if (change.scalars[i].is_zero()) throw Error(ErrorKind::InvalidArgument, "elementary change scalars must be nonzero");
    inverse[change.sigma[i]] = i;
  }
  std::vector<std::string> names;
  std::vector<int> degrees;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(a.gens().name(i));
    degrees.push_back(a.gens().degree(change.sigma[i]));
  }
  Presentation base = skew_ring(a.skew()->permuted(change.sigma), names, degrees);
  // x_k = a_i^{-1} y_i where sigma(i) = k.
  std::vector<NcPoly> images;
  for (std::size_t k = 0; k < n; ++k) {
    images.push_back(base.generator(inverse[k]) * change.scalars[inverse[k]].inverse());
  }
  std::vector<NcPoly> extras;
  for (const auto& r : a.extra_relations()) extras.push_back(substitute(r, images));
  return quotient(base, extras);
}

bool verify_witness(const Presentation& a, const Presentation& b, const ElementaryChange& change, int degree) {
  check_truncation(a, b, degree);
  if (change.sigma.size() != b.num_generators()) return false;
  auto rs_a = ReductionSystem::build(a, degree);
  auto rs_b = ReductionSystem::build(b, degree);
  if (rs_a.hilbert() != rs_b.hilbert()) return false;
  for (std::size_t i = 0; i < change.sigma.size(); ++i) {
    if (change.sigma[i] >= a.num_generators() || change.scalars[i].is_zero()) return false;
    if (a.gens().degree(change.sigma[i]) != b.gens().degree(i)) return false;
  }
  return relations_transport(rs_a, b.relations(), change_images(a, change));
}

bool verify_linear_map(const Presentation& a, const Presentation& b, const Matrix& map, int degree) {
  check_truncation(a, b, degree);
  if (map.rows() != b.num_generators() || map.cols() != a.num_generators()) return false;
  if (rank(map) != map.rows() || map.rows() != map.cols()) return false;
  auto rs_a = ReductionSystem::build(a, degree);
  auto rs_b = ReductionSystem::build(b, degree);
  if (rs_a.hilbert() != rs_b.hilbert()) return false;
  std::vector<NcPoly> images;
  for (std::size_t i = 0; i < map.rows(); ++i) {
    NcPoly img = a.zero();
    for (std::size_t j = 0; j < map.cols(); ++j) img += a.generator(j) * map(i, j);
    images.push_back(std::move(img));
  }
  return relations_transport(rs_a, b.relations(), images);
}

IsoVerdict skew_quotient_iso(const Presentation& a, const Presentation& b, int degree, const SkewIsoOptions& options) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "presentations over different fields");
  if (!a.skew() || !b.skew()) throw Error(ErrorKind::HypothesisViolated, "both algebras must be skew quotients");
  if (!a.skew()->all_off_diagonal_nontrivial()) {
    throw Error(ErrorKind::HypothesisViolated, "the first algebra has a parameter p_ij = 1");
  }
  if (auto m = a.min_extra_degree(); m && *m < 3) {
    throw Error(ErrorKind::HypothesisViolated, "the first algebra has an extra relation of degree " + std::to_string(*m));
  }
  if (auto m = b.min_extra_degree(); m && *m < 2) {
    throw Error(ErrorKind::HypothesisViolated, "the second algebra has an extra relation of degree " + std::to_string(*m));
  }
  check_truncation(a, b, degree);

  const std::size_t n = a.num_generators();
  if (n != b.num_generators()) return negative(degree, "generator counts differ");
  auto sigmas = perm_equiv_all(*a.skew(), *b.skew());
  if (sigmas.empty()) return negative(degree, "parameter matrices are not permutation equivalent");

  auto rs_a = ReductionSystem::build(a, degree);
  auto rs_b = ReductionSystem::build(b, degree);
  if (rs_a.hilbert() != rs_b.hilbert()) return negative(degree, "Hilbert functions differ");

  std::vector<Scalar> candidates;
  if (options.candidates) {
    candidates = *options.candidates;
  } else if (a.field().is_prime_field()) {
    candidates = units_enumerate(a.field());
  } else {
    candidates = {Scalar::one(a.field())};
  }
  std::uint64_t space = sigmas.size();
  for (std::size_t i = 0; i < n; ++i) {
    space *= std::max<std::size_t>(candidates.size(), 1);
    if (space > options.budget) throw Error(ErrorKind::BudgetExceeded, "scalar search exceeds budget");
  }

  // Each extra relation of B is checked as soon as its last letter has a scalar.
  std::vector<std::vector<NcPoly>> ready(n);
  for (const auto& r : b.extra_relations()) ready[last_letter(r)].push_back(r);

  for (const auto& sigma : sigmas) {
    bool degrees_match = true;
    for (std::size_t i = 0; i < n; ++i) degrees_match &= a.gens().degree(sigma[i]) == b.gens().degree(i);
    if (!degrees_match) continue;

    ElementaryChange change{sigma, std::vector<Scalar>(n, Scalar::one(a.field()))};
    // Letters not yet assigned map to zero, which is harmless: only relations
    // whose letters are all assigned are checked.
    std::vector<NcPoly> images(n, a.zero());
    std::optional<ElementaryChange> found;
    auto assign = [&](auto&& self, std::size_t i) -> void {
      if (i == n) {
        found = change;
        return;
      }
      for (const auto& c : candidates) {
        if (c.is_zero()) continue;
        change.scalars[i] = c;
        images[i] = a.generator(sigma[i]) * c;
        if (relations_transport(rs_a, ready[i], images)) self(self, i + 1);
        if (found) return;
      }
    };
    if (n == 0) {
      found = change;
    } else {
      assign(assign, 0);
    }
    if (found) {
      // The skew relations transport by the choice of sigma; re-check all of
      // them anyway so the witness does not rest on that argument.
      if (!relations_transport(rs_a, b.relations(), change_images(a, *found))) {
        throw Error(ErrorKind::InvalidArgument, "internal: witness failed the full transport check");
      }
      IsoVerdict v;
      v.isomorphic = true;
      v.witness = std::move(found);
      v.checked_degree = degree;
      return v;
    }
  }
  return negative(degree, a.field().is_prime_field() ? "no elementary change transports the relations"
                                                     : "no candidate elementary change transports the relations");
}

IsoVerdict brute_force_graded_iso(const Presentation& a, const Presentation& b, int degree, std::uint64_t budget) {
  if (!(a.field() == b.field())) throw Error(ErrorKind::FieldMismatch, "presentations over different fields");
  const FieldSpec field = a.field();
  if (!field.is_prime_field() || field.modulus() > 3) {
    throw Error(ErrorKind::HypothesisViolated, "brute-force search runs over GF(2) or GF(3) only");
  }
  if (!a.gens().all_degree_one() || !b.gens().all_degree_one()) {
    throw Error(ErrorKind::HypothesisViolated, "brute-force search needs every generator in degree 1");
  }
  for (const Presentation* pres : {&a, &b}) {
    if (auto m = pres->min_relation_degree(); m && *m < 2) {
      throw Error(ErrorKind::HypothesisViolated, "brute-force search needs relations of degree >= 2");
    }
  }
  check_truncation(a, b, degree);
  const std::size_t n = a.num_generators();
  if (n > 3 || b.num_generators() > 3) throw Error(ErrorKind::BudgetExceeded, "brute-force search is limited to dim A_1 <= 3");
  if (n != b.num_generators()) return negative(degree, "degree-1 dimensions differ");

  auto rs_a = ReductionSystem::build(a, degree);
  auto rs_b = ReductionSystem::build(b, degree);
  if (rs_a.hilbert() != rs_b.hilbert()) return negative(degree, "Hilbert functions differ");

  std::uint64_t space = 1;
  for (std::size_t i = 0; i < n * n; ++i) space *= field.modulus();
  if (space > budget) throw Error(ErrorKind::BudgetExceeded, "matrix search exceeds budget");

  const std::vector<Scalar> values = elements_enumerate(field);
  Matrix map(field, n, n);
  std::vector<std::size_t> digits(n * n, 0);
  for (std::uint64_t count = 0; count < space; ++count) {
    for (std::size_t k = 0; k < n * n; ++k) map(k / n, k % n) = values[digits[k]];
    if (rank(map) == n) {
      std::vector<NcPoly> images;
      for (std::size_t i = 0; i < n; ++i) {
        NcPoly img = a.zero();
        for (std::size_t j = 0; j < n; ++j) img += a.generator(j) * map(i, j);
        images.push_back(std::move(img));
      }
      if (relations_transport(rs_a, b.relations(), images)) {
        IsoVerdict v;
        v.isomorphic = true;
        v.linear_map = map;
        v.checked_degree = degree;
        return v;
      }
    }
    // Odometer, last entry fastest.
    for (std::size_t k = n * n; k-- > 0;) {
      if (++digits[k] < values.size()) break;
      digits[k] = 0;
    }
  }
  return negative(degree, "no invertible degree-1 map transports the relations");
}

}  // namespace galg

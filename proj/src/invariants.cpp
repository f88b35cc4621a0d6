#include "galg/invariants.hpp"

#include <algorithm>

#include "galg/error.hpp"

namespace galg {

namespace {

Scalar evaluate(const NcPoly& f, std::span<const Scalar> alpha) {
  Scalar total = Scalar::zero(f.field());
  for (const auto& [w, c] : f.terms()) {
    Scalar t = c;
    for (Letter l : w.letters) t *= alpha[l];
    total += t;
  }
  return total;
}

void check_point(const Presentation& pres, std::span<const Scalar> alpha) {
  if (alpha.size() != pres.num_generators()) {
    throw Error(ErrorKind::InvalidArgument, "point has " + std::to_string(alpha.size()) + " coordinates, expected " +
                                                std::to_string(pres.num_generators()));
  }
  for (const auto& a : alpha) {
    if (!(a.field() == pres.field())) throw Error(ErrorKind::FieldMismatch, "point over another field");
  }
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    total *= base;
    if (total > budget) {
      throw Error(ErrorKind::BudgetExceeded, "search space exceeds budget of " + std::to_string(budget));
    }
  }
  return total;
}

int max_generator_degree(const GeneratorSet& g) {
  int d = 1;
  for (std::size_t i = 0; i < g.size(); ++i) d = std::max(d, g.degree(i));
  return d;
}

}  // namespace

bool character_check(const Presentation& pres, std::span<const Scalar> alpha) {
  check_point(pres, alpha);
  return std::all_of(pres.relations().begin(), pres.relations().end(),
                     [&](const NcPoly& r) { return evaluate(r, alpha).is_zero(); });
}

std::vector<Character> characters_enumerate(const Presentation& pres, std::uint64_t budget) {
  const FieldSpec field = pres.field();
  if (!field.is_prime_field()) {
    throw Error(ErrorKind::InfiniteField, "characters over Q cannot be enumerated; use character_check");
  }
  const std::size_t n = pres.num_generators();
  checked_power(field.modulus(), n, budget);

  // Relations grouped by the largest generator they mention, so each is tested
  // as soon as its last coordinate is fixed.
  std::vector<std::vector<const NcPoly*>> ready(n + 1);
  for (const auto& r : pres.relations()) {
    std::size_t last = 0;
    bool any = false;
    for (const auto& [w, c] : r.terms()) {
      for (Letter l : w.letters) {
        last = std::max<std::size_t>(last, l);
        any = true;
      }
    }
    ready[any ? last : 0].push_back(&r);
  }

  const std::vector<Scalar> values = elements_enumerate(field);
  std::vector<Character> out;
  Vector point(n, Scalar::zero(field));
  auto assign = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      out.push_back(Character{point});
      return;
    }
    for (const auto& v : values) {
      point[k] = v;
      bool ok = std::all_of(ready[k].begin(), ready[k].end(),
                            [&](const NcPoly* r) { return evaluate(*r, point).is_zero(); });
      if (ok) self(self, k + 1);
    }
  };
  if (n == 0) {
    out.push_back(Character{});
  } else {
    assign(assign, 0);
  }
  return out;
}

std::vector<NcPoly> character_ideal_generators(const Presentation& pres, std::span<const Scalar> alpha) {
  check_point(pres, alpha);
  std::vector<NcPoly> gens;
  for (std::size_t i = 0; i < pres.num_generators(); ++i) {
    gens.push_back(pres.generator(i) - NcPoly::constant(pres.generators(), alpha[i]));
  }
  return gens;
}

std::size_t cotangent_dimension(const Presentation& pres, std::span<const Scalar> alpha) {
  if (!character_check(pres, alpha)) throw Error(ErrorKind::NotACharacter, "relations do not vanish at the point");
  const std::size_t n = pres.num_generators();
  Matrix linear(pres.field(), 0, n);
  for (const auto& r : pres.relations()) {
    Vector row = zero_vector(pres.field(), n);
    for (const auto& [w, c] : r.terms()) {
      for (std::size_t j = 0; j < w.size(); ++j) {
        Scalar t = c;
        for (std::size_t m = 0; m < w.size() && !t.is_zero(); ++m) {
          if (m != j) t *= alpha[w[m]];
        }
        row[w[j]] += t;
      }
    }
    linear.append_row(row);
  }
  return n - rank(linear);
}

std::size_t cotangent_dimension_by_closure(const TruncatedAlgebra& alg, std::span<const Scalar> alpha) {
  if (!character_check(alg.presentation(), alpha)) {
    throw Error(ErrorKind::NotACharacter, "relations do not vanish at the point");
  }
  auto gens = character_ideal_generators(alg.presentation(), alpha);
  return ideal_power(alg, gens, 1).dim() - ideal_power(alg, gens, 2).dim();
}

TangentProfile tangent_profile(const TruncatedAlgebra& alg, const Character& chi, unsigned depth) {
  const int need = static_cast<int>(depth + 1) * max_generator_degree(alg.gens());
  if (need > alg.truncation_degree()) {
    throw Error(ErrorKind::TruncationTooSmall, "profile depth " + std::to_string(depth) + " needs truncation degree " +
                                                   std::to_string(need));
  }
  TangentProfile profile;
  profile.character = chi;
  profile.cotangent = cotangent_dimension(alg.presentation(), chi.point);
  auto gens = character_ideal_generators(alg.presentation(), chi.point);
  std::size_t previous = ideal_power(alg, gens, 1).dim();
  for (unsigned i = 1; i <= depth; ++i) {
    std::size_t next = ideal_power(alg, gens, i + 1).dim();
    profile.power_dims.push_back(previous - next);
    previous = next;
  }
  return profile;
}

FilteredSubspace j_s(const TruncatedAlgebra& alg, std::size_t s, std::uint64_t budget) {
  const Presentation& pres = alg.presentation();
  FilteredSubspace meet = whole_algebra(alg);
  for (const auto& chi : characters_enumerate(pres, budget)) {
    if (cotangent_dimension(pres, chi.point) != s) continue;
    meet = meet.intersection(ideal_closure(alg, character_ideal_generators(pres, chi.point)));
  }
  return meet;
}

FilteredSubspace j_sequence(const TruncatedAlgebra& alg, std::span<const std::size_t> profile,
                            std::uint64_t budget) {
  const Presentation& pres = alg.presentation();
  FilteredSubspace meet = whole_algebra(alg);
  if (profile.empty()) return meet;
  const auto depth = static_cast<unsigned>(profile.size());
  const int need = static_cast<int>(depth + 1) * max_generator_degree(alg.gens());
  if (need > alg.truncation_degree()) {
    throw Error(ErrorKind::TruncationTooSmall, "profile depth " + std::to_string(depth) + " needs truncation degree " +
                                                   std::to_string(need));
  }
  for (const auto& chi : characters_enumerate(pres, budget)) {
    if (cotangent_dimension(pres, chi.point) != profile[0]) continue;
    TangentProfile tp = tangent_profile(alg, chi, depth);
    if (!std::equal(tp.power_dims.begin(), tp.power_dims.end(), profile.begin(), profile.end())) continue;
    meet = meet.intersection(ideal_closure(alg, character_ideal_generators(pres, chi.point)));
  }
  return meet;
}

bool unique_codim1_of_tangent_d(const TruncatedAlgebra& alg, std::uint64_t budget) {
  const std::size_t d = alg.component_dim(1);
  std::size_t count = 0;
  for (const auto& chi : characters_enumerate(alg.presentation(), budget)) {
    if (cotangent_dimension(alg.presentation(), chi.point) == d && ++count > 1) return false;
  }
  return count == 1;
}

bool is_normal_up_to(const TruncatedAlgebra& alg, const NcPoly& raw) {
  NcPoly f = alg.system().normal_form(raw);
  if (f.is_zero()) return true;
  auto deg = f.homogeneous_degree();
  if (!deg) throw Error(ErrorKind::InhomogeneousInput, "normality test needs a homogeneous element");
  const int top = alg.truncation_degree();
  if (*deg + 1 > top) {
    throw Error(ErrorKind::DegreeExceedsTruncation, "normality of a degree-" + std::to_string(*deg) +
                                                        " element needs truncation degree > " + std::to_string(*deg));
  }
  const auto& gens = alg.presentation().generators();
  const Scalar one = Scalar::one(alg.field());
  for (int d = 0; *deg + d <= top; ++d) {
    const int e = *deg + d;
    std::vector<Vector> left, right;
    for (const auto& w : alg.system().normal_words(d)) {
      NcPoly m = NcPoly::monomial(gens, w, one);
      left.push_back(alg.component_vector(alg.multiply(f, m), e));
      right.push_back(alg.component_vector(alg.multiply(m, f), e));
    }
    const std::size_t amb = alg.component_dim(e);
    if (!(Subspace::span(alg.field(), amb, std::move(left)) == Subspace::span(alg.field(), amb, std::move(right)))) {
      return false;
    }
  }
  return true;
}

std::vector<NcPoly> normal_lines_degree_one(const TruncatedAlgebra& alg, std::uint64_t budget) {
  const FieldSpec field = alg.field();
  if (!field.is_prime_field()) {
    throw Error(ErrorKind::InfiniteField, "projective space over Q is infinite; test candidates with is_normal_up_to");
  }
  const std::size_t m = alg.component_dim(1);
  const std::uint64_t p = field.modulus();
  std::uint64_t lines = 0;
  for (std::size_t i = 0; i < m; ++i) lines += checked_power(p, i, budget);
  if (lines > budget) throw Error(ErrorKind::BudgetExceeded, "projective space exceeds budget");

  std::vector<NcPoly> out;
  const std::vector<Scalar> values = elements_enumerate(field);
  for (std::size_t lead = 0; lead < m; ++lead) {
    Vector coords = zero_vector(field, m);
    coords[lead] = Scalar::one(field);
    auto fill = [&](auto&& self, std::size_t k) -> void {
      if (k == m) {
        NcPoly f = alg.component_poly(coords, 1);
        if (is_normal_up_to(alg, f)) out.push_back(std::move(f));
        return;
      }
      for (const auto& v : values) {
        coords[k] = v;
        self(self, k + 1);
      }
    };
    fill(fill, lead + 1);
  }
  return out;
}

Subspace central_elements(const TruncatedAlgebra& alg, int deg) {
  const int top = alg.truncation_degree();
  if (deg < 0 || deg + 1 > top) {
    throw Error(ErrorKind::DegreeExceedsTruncation, "center in degree " + std::to_string(deg) +
                                                        " needs truncation degree > " + std::to_string(deg));
  }
  const auto& words = alg.system().normal_words(deg);
  const auto& gens = alg.presentation().generators();
  const Scalar one = Scalar::one(alg.field());
  std::vector<Vector> rows;
  for (std::size_t g = 0; g < alg.gens().size(); ++g) {
    const int e = deg + alg.gens().degree(g);
    if (e > top) continue;
    NcPoly x = alg.presentation().generator(g);
    std::vector<Vector> columns;
    for (const auto& w : words) {
      NcPoly m = NcPoly::monomial(gens, w, one);
      columns.push_back(alg.component_vector(alg.multiply(m, x) - alg.multiply(x, m), e));
    }
    for (std::size_t r = 0; r < alg.component_dim(e); ++r) {
      Vector row;
      row.reserve(words.size());
      for (const auto& col : columns) row.push_back(col[r]);
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return Subspace::full(alg.field(), words.size());
  return kernel_basis(Matrix::from_rows(alg.field(), words.size(), std::move(rows)));
}

std::vector<std::size_t> commutator_dimensions(const TruncatedAlgebra& alg) {
  const int top = alg.truncation_degree();
  const auto& gens = alg.presentation().generators();
  const Scalar one = Scalar::one(alg.field());
  std::vector<std::size_t> dims(static_cast<std::size_t>(top) + 1, 0);
  for (int d = 2; d <= top; ++d) {
    EchelonBuilder span(alg.field(), alg.component_dim(d));
    for (int i = 1; 2 * i <= d; ++i) {
      for (const auto& u : alg.system().normal_words(i)) {
        for (const auto& v : alg.system().normal_words(d - i)) {
          NcPoly a = NcPoly::monomial(gens, u, one);
          NcPoly b = NcPoly::monomial(gens, v, one);
          span.insert(alg.component_vector(alg.multiply(a, b) - alg.multiply(b, a), d));
        }
      }
    }
    dims[static_cast<std::size_t>(d)] = span.dim();
  }
  return dims;
}

GradedFingerprint graded_fingerprint(const TruncatedAlgebra& alg, std::uint64_t budget) {
  GradedFingerprint fp;
  fp.degree = alg.truncation_degree();
  fp.hilbert = alg.system().hilbert();
  fp.commutator_dims = commutator_dimensions(alg);
  if (alg.field().is_prime_field()) {
    if (alg.truncation_degree() >= 2) fp.normal_line_count = normal_lines_degree_one(alg, budget).size();
    std::map<std::size_t, std::size_t> multiset;
    for (const auto& chi : characters_enumerate(alg.presentation(), budget)) {
      ++multiset[cotangent_dimension(alg.presentation(), chi.point)];
    }
    fp.cotangent_multiset = std::move(multiset);
  }
  return fp;
}

}  // namespace galg

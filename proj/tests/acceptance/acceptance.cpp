// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "galg/brackets.hpp"
#include "galg/center.hpp"
#include "galg/sampling.hpp"
#include "galg/textio.hpp"

using namespace galg;

namespace {

FieldSpec gf(std::uint64_t p) { return FieldSpec::prime(p); }
Scalar sc(const FieldSpec& f, long long v) { return Scalar::from_int(f, v); }

// Failures collected while a criterion runs.
struct Log {
  std::vector<std::string> problems;
  void expect(bool ok, const std::string& what) {
    if (!ok && problems.size() < 5) problems.push_back(what);
    if (!ok) failed = true;
  }
  bool failed = false;
};

// Pairs some iso search declared isomorphic, rechecked at the end.
struct Positive {
  Presentation a;
  Presentation b;
  int degree;
};
std::vector<Positive> positives;

void record_if_positive(const IsoVerdict& v, const Presentation& a, const Presentation& b, int degree) {
  if (v.isomorphic) positives.push_back({a, b, degree});
}

std::vector<Vector> all_points(const FieldSpec& f, std::size_t n) {
  std::vector<Vector> pts{Vector{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vector> next;
    for (const auto& p : pts) {
      for (const auto& v : elements_enumerate(f)) {
        Vector q = p;
        q.push_back(v);
        next.push_back(std::move(q));
      }
    }
    pts = std::move(next);
  }
  return pts;
}

// Direct evaluation of a relation at a commuting point.
Scalar evaluate(const NcPoly& f, const Vector& alpha) {
  Scalar total = Scalar::zero(f.field());
  for (const auto& [w, c] : f.terms()) {
    Scalar v = c;
    for (Letter l : w.letters) v *= alpha[l];
    total += v;
  }
  return total;
}

// Intersection of character kernels = kernel of the evaluation rows.
FilteredSubspace evaluation_kernel(const TruncatedAlgebra& alg, const std::vector<Vector>& points) {
  if (points.empty()) return whole_algebra(alg);
  Matrix ev(alg.field(), 0, alg.dim());
  for (const auto& alpha : points) {
    Vector row;
    for (std::size_t c = 0; c < alg.dim(); ++c) {
      Scalar v = Scalar::one(alg.field());
      for (Letter l : alg.basis_word(c).letters) v *= alpha[l];
      row.push_back(v);
    }
    ev.append_row(row);
  }
  return FilteredSubspace(kernel_basis(ev), alg.column_degrees());
}

std::vector<std::vector<std::size_t>> exhaustive_perm_equiv(const SkewMatrix& p, const SkewMatrix& q) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> s(p.size());
  std::iota(s.begin(), s.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < s.size() && ok; ++i) {
      for (std::size_t j = 0; j < s.size() && ok; ++j) ok = q(i, j) == p(s[i], s[j]);
    }
    if (ok) out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

Presentation random_skew_quotient(const FieldSpec& f, std::size_t n, bool nontrivial, Rng& rng) {
  auto base = skew_ring(random_skew_matrix(f, n, nontrivial, rng));
  NcPoly extra = random_homogeneous(base.generators(), f, 3, 3, rng);
  if (extra.is_zero()) extra = power(base.generator(0), 3);
  return quotient(base, {extra});
}

// 1: no character of a nontrivial 3-variable skew ring has cotangent 4.
void criterion_1(Log& log, Rng& rng) {
  auto f = gf(5);
  auto a = skew_ring(random_skew_matrix(f, 3, true, rng));
  auto pts = all_points(f, 3);
  log.expect(pts.size() == 125, "point count");
  std::vector<Vector> chars;
  for (const auto& p : pts) {
    bool vanish = std::all_of(a.relations().begin(), a.relations().end(),
                              [&](const NcPoly& r) { return evaluate(r, p).is_zero(); });
    log.expect(vanish == character_check(a, p), "character_check disagrees with evaluation");
    if (vanish) chars.push_back(p);
  }
  auto listed = characters_enumerate(a);
  log.expect(listed.size() == chars.size(), "enumeration size");
  for (std::size_t i = 0; i < std::min(listed.size(), chars.size()); ++i) {
    log.expect(listed[i].point == chars[i], "enumeration order");
  }
  auto alg = TruncatedAlgebra::build(a, 5);
  for (const auto& p : chars) {
    std::size_t cot = cotangent_dimension(a, p);
    log.expect(cot <= 3, "cotangent above 3");
    log.expect(cot == cotangent_dimension_by_closure(alg, p), "cotangent closure oracle");
  }
  log.expect(j_s(alg, 4) == whole_algebra(alg), "j_4 is not everything");
}

// 2: j_3 is the augmentation ideal through degree 4.
void criterion_2(Log& log, Rng& rng) {
  auto f = gf(5);
  auto a = skew_ring(random_skew_matrix(f, 3, true, rng));
  auto alg = TruncatedAlgebra::build(a, 5);
  auto j3 = j_s(alg, 3);
  log.expect(j3.agrees_up_to(augmentation_ideal(alg), 4), "j_3 differs from the augmentation ideal");
  std::vector<Vector> full;
  for (const auto& chi : characters_enumerate(a)) {
    if (cotangent_dimension(a, chi.point) == 3) full.push_back(chi.point);
  }
  log.expect(full.size() == 1, "more than one full-tangent point");
  log.expect(j3 == evaluation_kernel(alg, full), "evaluation kernel oracle");
}

// 3: intersecting over the central parameter recovers I[t], and j shifts by one.
void criterion_3(Log& log, Rng&) {
  auto f = gf(101);
  auto a = skew_ring(SkewMatrix::uniform(f, 2, sc(f, 3)));
  auto at = adjoin_central(a, 1);
  const int top = 4;
  auto alg_t = TruncatedAlgebra::build(at, top);
  NcPoly x = at.generator(0), y = at.generator(1), t = at.generator(2);
  FilteredSubspace meet = whole_algebra(alg_t);
  for (const auto& c : elements_enumerate(f)) {
    meet = meet.intersection(ideal_closure(alg_t, {x, y, t - NcPoly::constant(at.generators(), c)}));
  }
  auto extended = ideal_closure(alg_t, {x, y});
  log.expect(meet.agrees_up_to(extended, top - 1), "intersection over t - alpha differs from I[t]");

  auto alg = TruncatedAlgebra::build(a, top);
  auto j2 = j_s(alg, 2);
  std::vector<NcPoly> lifted;
  const std::vector<Letter> letters{0, 1};
  for (const auto& row : j2.space().basis()) lifted.push_back(remap(alg.to_poly(row), at.generators(), letters));
  auto j2_t = ideal_closure(alg_t, lifted);
  log.expect(j_s(alg_t, 3).agrees_up_to(j2_t, top - 1), "j_3(A[t]) differs from j_2(A)[t]");
  log.expect(j2_t.agrees_up_to(extended, top - 1), "j_2(A)[t] differs from I[t]");
}

// 4: exactly one character has full tangent space for nontrivial skew rings.
void criterion_4(Log& log, Rng& rng) {
  auto f = gf(7);
  for (int trial = 0; trial < 6; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
    auto a = skew_ring(random_skew_matrix(f, n, true, rng));
    log.expect(unique_codim1_of_tangent_d(TruncatedAlgebra::build(a, 3)), "skew ring not unique");
  }
  for (std::size_t n = 2; n <= 3; ++n) {
    auto comm = skew_ring(SkewMatrix::uniform(f, n, sc(f, 1)));
    log.expect(!unique_codim1_of_tangent_d(TruncatedAlgebra::build(comm, 3)), "commutative ring unique");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    auto free = free_algebra(f, names, std::vector<int>(n, 1));
    log.expect(!unique_codim1_of_tangent_d(TruncatedAlgebra::build(free, 3)), "free algebra unique");
  }
}

// Each returned line is a single generator and every generator appears.
bool coordinate_lines_only(const Presentation& p, const std::vector<NcPoly>& lines) {
  std::set<Letter> seen;
  for (const auto& l : lines) {
    if (l.size() != 1) return false;
    const auto& [w, c] = *l.terms().begin();
    if (w.letters.size() != 1 || c != Scalar::one(p.field())) return false;
    seen.insert(w.letters[0]);
  }
  return lines.size() == p.num_generators() && seen.size() == p.num_generators();
}

// 5: the normal lines of A_1 are the coordinate lines.
void criterion_5(Log& log, Rng&) {
  auto f = gf(5);
  auto plane = skew_ring(SkewMatrix::uniform(f, 2, sc(f, 2)));
  log.expect(coordinate_lines_only(plane, normal_lines_degree_one(TruncatedAlgebra::build(plane, 4))),
             "plane normal lines");
  auto s3 = skew_ring(SkewMatrix::from_upper(f, 3, {{0, 1, sc(f, 2)}, {0, 2, sc(f, 3)}, {1, 2, sc(f, 4)}}));
  auto q3 = quotient(s3, {parse_polynomial("x1^2*x2 + 2*x3^3", s3.generators(), f)});
  auto alg = TruncatedAlgebra::build(q3, 4);
  auto lines = normal_lines_degree_one(alg);
  log.expect(coordinate_lines_only(q3, lines), "cubic quotient normal lines");
  // oracle: brute-force every projective point with is_normal_up_to
  std::size_t count = 0;
  for (const auto& p : all_points(f, 3)) {
    auto first = std::find_if(p.begin(), p.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (first == p.end() || *first != Scalar::one(f)) continue;
    NcPoly g = q3.zero();
    for (std::size_t i = 0; i < 3; ++i) g += q3.generator(i) * p[i];
    if (is_normal_up_to(alg, g)) ++count;
  }
  log.expect(count == 3, "projective scan oracle");
}

// 6: bracket decompositions expand back and parts have the right degree.
void criterion_6(Log& log, Rng& rng) {
  auto f = gf(7);
  std::uniform_int_distribution<int> deg(1, 6);
  std::uniform_int_distribution<std::size_t> gens(1, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = gens(rng);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    auto a = free_algebra(f, names, std::vector<int>(n, 1));
    int m = deg(rng);
    std::size_t d = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    NcPoly r = random_homogeneous(a.generators(), f, m, 6, rng);
    if (r.is_zero()) r = power(a.generator(0), m);
    auto dec = bracket_decompose(r, d);
    log.expect(expand(dec) == r, "round trip");
    for (const auto& [s, part] : dec.parts) {
      log.expect(expanded_degree(part) == m - static_cast<int>(s), "degree bookkeeping");
    }
  }
}

// 7: random elementary changes are found and certified.
void criterion_7(Log& log, Rng& rng) {
  auto f = gf(7);
  const int top = 4;
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    auto a = random_skew_quotient(f, n, true, rng);
    auto b = apply_elementary_change(a, random_elementary_change(f, n, rng));
    auto v = skew_quotient_iso(a, b, top);
    log.expect(v.isomorphic && v.witness, "change not recovered");
    if (v.witness) log.expect(verify_witness(a, b, *v.witness, top), "witness fails verification");
    record_if_positive(v, a, b, top);
  }
}

// 8: negatives, and perm_equiv against the full symmetric group.
void criterion_8(Log& log, Rng& rng) {
  auto q = FieldSpec::rationals();
  auto k2 = skew_ring(SkewMatrix::uniform(q, 2, sc(q, 2)));
  auto k3 = skew_ring(SkewMatrix::uniform(q, 2, sc(q, 3)));
  auto v = skew_quotient_iso(k2, k3, 4);
  log.expect(!v.isomorphic, "k_2 and k_3 reported isomorphic");
  record_if_positive(v, k2, k3, 4);

  auto f = gf(7);
  int negatives = 0;
  for (int trial = 0; trial < 200 && negatives < 40; ++trial) {
    std::size_t n = 2 + static_cast<std::size_t>(trial % 2);
    auto p = random_skew_matrix(f, n, true, rng);
    auto r = random_skew_matrix(f, n, true, rng);
    if (!exhaustive_perm_equiv(p, r).empty()) continue;
    ++negatives;
    auto a = skew_ring(p), b = skew_ring(r);
    auto w = skew_quotient_iso(a, b, 4);
    log.expect(!w.isomorphic, "non-equivalent parameters reported isomorphic");
    record_if_positive(w, a, b, 4);
  }
  log.expect(negatives >= 40, "too few negative samples");

  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    auto field = trial % 2 == 0 ? gf(3) : f;
    auto p = random_skew_matrix(field, n, false, rng);
    auto r = trial % 3 == 0 ? p.permuted(random_permutation(n, rng)) : random_skew_matrix(field, n, false, rng);
    auto all = exhaustive_perm_equiv(p, r);
    log.expect(perm_equiv_all(p, r) == all, "perm_equiv_all differs from S_n search");
    auto one = perm_equiv(p, r);
    log.expect(one.has_value() == !all.empty(), "perm_equiv existence");
    if (one && !all.empty()) log.expect(*one == all.front(), "perm_equiv is not the smallest");
  }
}

// 9: equal Hilbert functions, different commutator dimensions.
void criterion_9(Log& log, Rng&) {
  auto a = parse_presentation("field GF 7\ntensor { gens x1:1 x2:1; skew q(x1,x2)=-1 } { gens y1:2 y2:2; skew }\n");
  auto b = parse_presentation("field GF 7\ntensor { gens x1:1 x2:1; skew } { gens y1:2 y2:2; skew q(y1,y2)=-1 }\n");
  // coefficients of 1/((1-t)^2 (1-t^2)^2)
  std::vector<long> series(5, 0);
  for (int i = 0; i <= 4; ++i) {
    for (int j = 0; 2 * j + i <= 4; ++j) series[i + 2 * j] += (i + 1) * (j + 1);
  }
  std::vector<std::size_t> expected(series.begin(), series.end());
  log.expect(expected == std::vector<std::size_t>{1, 2, 5, 8, 14}, "series oracle");
  auto alg_a = TruncatedAlgebra::build(a, 4), alg_b = TruncatedAlgebra::build(b, 4);
  auto fa = graded_fingerprint(alg_a), fb = graded_fingerprint(alg_b);
  log.expect(fa.hilbert == expected && fb.hilbert == expected, "Hilbert functions");
  log.expect(fa.commutator_dims[2] == 1 && fb.commutator_dims[2] == 0, "degree-2 commutators");
  log.expect(fa != fb, "fingerprints equal");
  log.expect(!is_generated_in_degree_one(alg_a) && !is_generated_in_degree_one(alg_b), "generated in degree one");
}

// 10: the anticommuting plane survives adjoining and cancelling two variables.
void criterion_10(Log& log, Rng&) {
  auto f = gf(7);
  auto a = skew_ring(SkewMatrix::uniform(f, 2, sc(f, -1)));
  const int top = 5;
  auto alg = TruncatedAlgebra::build(a, top);
  log.expect(degree_one_center_check(alg).dim() == 0, "A has degree-one center");
  auto ext = adjoin_central(a, 2);
  auto ext_alg = TruncatedAlgebra::build(ext, top);
  auto z = degree_one_center_check(ext_alg);
  log.expect(z.dim() == 2, "extension center is not 2-dimensional");
  Subspace ts = Subspace::span(f, ext_alg.component_dim(1),
                               {ext_alg.component_vector(ext.generator(2), 1),
                                ext_alg.component_vector(ext.generator(3), 1)});
  log.expect(z == ts, "extension center is not spanned by the new variables");
  auto back = cancel(a, 2, top);
  log.expect(graded_fingerprint(TruncatedAlgebra::build(back, top)) == graded_fingerprint(alg), "fingerprints differ");
}

// 11: exhaustive GL_2(GF(3)) search agrees with the elementary-change search.
void criterion_11(Log& log, Rng& rng) {
  auto f = gf(3);
  const int top = 4;
  int yes = 0, no = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 1 + static_cast<std::size_t>(trial % 5 != 0);
    auto a = random_skew_quotient(f, n, true, rng);
    Presentation b = trial % 2 == 0 ? apply_elementary_change(a, random_elementary_change(f, n, rng))
                                    : random_skew_quotient(f, n, trial % 4 == 1, rng);
    auto brute = brute_force_graded_iso(a, b, top);
    auto skew = skew_quotient_iso(a, b, top);
    log.expect(brute.isomorphic == skew.isomorphic, "verdicts disagree");
    if (brute.linear_map) log.expect(verify_linear_map(a, b, *brute.linear_map, top), "linear map fails");
    (skew.isomorphic ? yes : no)++;
    record_if_positive(brute, a, b, top);
    record_if_positive(skew, a, b, top);
  }
  log.expect(yes >= 10 && no >= 10, "unbalanced sample");
}

// 12: every positive verdict above has equal Hilbert functions.
void criterion_12(Log& log, Rng&) {
  log.expect(!positives.empty(), "no positives recorded");
  for (const auto& p : positives) {
    log.expect(ReductionSystem::build(p.a, p.degree).hilbert() == ReductionSystem::build(p.b, p.degree).hilbert(),
               "Hilbert functions differ on a positive");
  }
}

struct Criterion {
  int id;
  std::string label;
  double limit_seconds;
  std::function<void(Log&, Rng&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::uint64_t seed = 20240601;
  app.add_option("--seed", seed, "random seed");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "characters of a 3-variable skew ring; cotangent <= 3, j_4 = A", 10, criterion_1},
      {2, "j_3 equals the augmentation ideal through degree 4", 10, criterion_2},
      {3, "GF(101) central parameter intersection and j shift", 60, criterion_3},
      {4, "unique full-tangent character", 10, criterion_4},
      {5, "normal lines are the coordinate lines", 30, criterion_5},
      {6, "1000 bracket round trips", 30, criterion_6},
      {7, "100 random elementary changes recovered", 120, criterion_7},
      {8, "negative verdicts and perm_equiv vs S_n", 30, criterion_8},
      {9, "equal Hilbert functions, different commutators", 10, criterion_9},
      {10, "cancellation of two central variables", 30, criterion_10},
      {11, "brute force agrees with skew search on 50 pairs", 120, criterion_11},
      {12, "positive verdicts have equal Hilbert functions", 1e9, criterion_12},
  };

  bool all_ok = true;
  for (const auto& c : criteria) {
    Rng rng(seed + static_cast<std::uint64_t>(c.id));
    Log log;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(log, rng);
    } catch (const std::exception& e) {
      log.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) log.expect(false, "over time limit");
    all_ok = all_ok && !log.failed;
    std::ostringstream line;
    line << (log.failed ? "FAIL" : "PASS") << " criterion " << c.id << ": " << c.label;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " (" << secs << " s)";
    for (const auto& p : log.problems) line << " [" << p << "]";
    std::cout << line.str() << std::endl;
  }
  return all_ok ? 0 : 1;
}

#include "support.hpp"

using namespace testing;

TEST_CASE("skew matrices validate") {
  auto f = gf(7);
  CHECK(kind_of([&] {
          (void)SkewMatrix(f, {{sc(f, 1), sc(f, 3)}, {sc(f, 3), sc(f, 1)}});
        }) == ErrorKind::InvalidSkewMatrix);
  CHECK(kind_of([&] {
          (void)SkewMatrix(f, {{sc(f, 1), sc(f, 0)}, {sc(f, 0), sc(f, 1)}});
        }) == ErrorKind::InvalidSkewMatrix);
  auto p = SkewMatrix::from_upper(f, 3, {{0, 1, sc(f, 3)}});
  CHECK(p(1, 0) == sc(f, 5));
  CHECK(p(0, 2).is_one());
  CHECK_FALSE(p.all_off_diagonal_nontrivial());
}

TEST_CASE("skew rings") {
  auto f = gf(7);
  auto a = skew_ring(SkewMatrix::from_upper(f, 2, {{0, 1, sc(f, 3)}}));
  REQUIRE(a.relations().size() == 1);
  CHECK(to_string(a.relations()[0]) == "x2*x1 + 4*x1*x2");
  CHECK(skew_uniform(f, 1, 3).relations().empty());
  for (std::size_t n = 1; n <= 5; ++n) CHECK(skew_uniform(f, n, 2).relations().size() == n * (n - 1) / 2);
  CHECK(to_string(commutative(f, 2).relations()[0]) == "x2*x1 + 6*x1*x2");
}

TEST_CASE("quotients") {
  auto f = gf(7);
  auto a = skew_uniform(f, 2, 3);
  auto b = quotient(a, {poly(a, "x1^3")});
  CHECK(b.relations().size() == 2);
  CHECK(b.extra_relations().size() == 1);
  CHECK(*b.min_extra_degree() == 3);
  CHECK(quotient(a, {}) == a);
  CHECK(kind_of([&] { (void)quotient(a, {poly(a, "x1 + x1*x2")}); }) == ErrorKind::InhomogeneousRelation);
  // stored monic
  CHECK(quotient(a, {poly(a, "3*x1^3")}).relations()[1] == poly(a, "x1^3"));
}

TEST_CASE("tensor products") {
  auto f = gf(7);
  auto x = skew_ring(SkewMatrix::uniform(f, 2, sc(f, -1)), {"x1", "x2"});
  auto y = skew_ring(SkewMatrix::uniform(f, 2, sc(f, 1)), {"y1", "y2"});
  auto t = tensor(x, y);
  CHECK(t.num_generators() == 4);
  CHECK(t.relations().size() == 6);
  auto expect_zero = [&](const std::string& text) {
    auto rs = ReductionSystem::build(t, 3);
    CHECK(rs.normal_form(poly(t, text)).is_zero());
  };
  expect_zero("x2*x1 + x1*x2");
  expect_zero("y2*y1 - y1*y2");
  for (const char* c : {"x1*y1 - y1*x1", "x1*y2 - y2*x1", "x2*y1 - y1*x2", "x2*y2 - y2*x2"}) expect_zero(c);

  auto k = free_algebra(f, {}, {});
  CHECK(tensor(x, k) == x);
  auto clash = tensor(x, x);
  CHECK(clash.gens().name(0) == "a_x1");
  CHECK(clash.gens().name(2) == "b_x1");
  CHECK(kind_of([&] { (void)tensor(x, commutative(gf(5), 1)); }) == ErrorKind::FieldMismatch);
}

TEST_CASE("tensor is associative on Hilbert functions") {
  auto f = gf(5);
  auto a = skew_ring(SkewMatrix::uniform(f, 2, sc(f, 2)), {"a1", "a2"});
  auto b = quotient(free_algebra(f, {"b1"}, {1}), {});
  auto c = quotient(free_algebra(f, {"c1", "c2"}, {1, 2}), {});
  c = quotient(c, {poly(c, "c1*c1*c1")});
  auto left = tensor(tensor(a, b), c), right = tensor(a, tensor(b, c));
  CHECK(ReductionSystem::build(left, 5).hilbert() == ReductionSystem::build(right, 5).hilbert());
}

TEST_CASE("central extensions") {
  auto f = gf(7);
  auto a = skew_uniform(f, 2, 3);
  CHECK(adjoin_central(a, 0) == a);
  auto c = adjoin_central(a, 1);
  CHECK(c.num_generators() == 3);
  CHECK(c.gens().name(2) == "t1");
  auto rs = ReductionSystem::build(c, 3);
  CHECK(rs.normal_form(poly(c, "t1*x1 - x1*t1")).is_zero());
  CHECK(rs.normal_form(poly(c, "t1*x2 - x2*t1")).is_zero());

  auto fr = adjoin_central(free_on(f, 1), 2);
  auto rs2 = ReductionSystem::build(fr, 3);
  CHECK(rs2.normal_form(poly(fr, "t2*t1 - t1*t2")).is_zero());
  CHECK(rs2.normal_form(poly(fr, "t1*x1 - x1*t1")).is_zero());
}

TEST_CASE("eliminating degree-one elements") {
  auto f = gf(7);
  auto a = skew_uniform(f, 2, 3);
  auto c = adjoin_central(a, 1);
  auto back = eliminate_degree_one(c, {poly(c, "t1")});
  CHECK(back == a);
  CHECK(eliminate_degree_one(a, {}) == a);
  CHECK(kind_of([&] { (void)eliminate_degree_one(a, {poly(a, "x1"), poly(a, "2*x1")}); }) ==
        ErrorKind::DependentElements);
  CHECK(ReductionSystem::build(back, 6).hilbert() == ReductionSystem::build(a, 6).hilbert());

  for (std::size_t n = 1; n <= 3; ++n) {
    auto ext = adjoin_central(quotient(a, {poly(a, "x1^2*x2")}), n);
    std::vector<NcPoly> ts;
    for (std::size_t i = 0; i < n; ++i) ts.push_back(poly(ext, "t" + std::to_string(i + 1)));
    auto res = eliminate_degree_one(ext, ts);
    CHECK(ReductionSystem::build(res, 5).hilbert() ==
          ReductionSystem::build(quotient(a, {poly(a, "x1^2*x2")}), 5).hilbert());
  }

  // eliminating a non-generator element: x1 - x2 in the commutative plane
  auto k = commutative(f, 2);
  auto line = eliminate_degree_one(k, {poly(k, "x1 - x2")});
  CHECK(ReductionSystem::build(line, 4).hilbert() == std::vector<std::size_t>{1, 1, 1, 1, 1});
}

#include "support.hpp"

using namespace testing;

namespace {

SyntaxError syntax_error_of(const std::string& src) {
  try {
    (void)parse_presentation(src);
  } catch (const SyntaxError& e) {
    return e;
  }
  FAIL("expected a syntax error");
  return SyntaxError(0, 0, {}, "");
}

}  // namespace

TEST_CASE("parsing presentations") {
  auto p = parse_presentation("field GF 7\ngens x:1 y:1\nskew q(x,y)=3\n");
  auto f = gf(7);
  CHECK(p == skew_ring(SkewMatrix::from_upper(f, 2, {{0, 1, sc(f, 3)}}), {"x", "y"}));

  auto cube = parse_presentation("field Q\ngens x:1\nrel x*x*x\n");
  CHECK(cube.field() == qq());
  CHECK(cube.relations().size() == 1);
  CHECK(to_string(cube.relations()[0]) == "x^3");

  // default field, comments, reversed skew pair, semicolons
  auto r = parse_presentation("# comment\ngens a:1 b:1 ; skew q(b,a)=2 # trailing\n");
  CHECK(r.field() == qq());
  CHECK((*r.skew())(0, 1) == Scalar::parse(qq(), "1/2"));

  auto adj = parse_presentation("field GF 5\ngens x:1 y:1\nskew q(x,y)=2\nadjoin s:2\nrel s1*x^2 - y^3\n");
  CHECK(adj.num_generators() == 4);
  CHECK(adj.gens().name(3) == "s2");
  CHECK(adj.relations().back() == poly(adj, "s1*x^2 - y^3"));

  auto comm = parse_presentation("gens x:1 y:1\nrel [x,y]\nrel 2/3*(x + y)^2 - 2/3*x^2 - 2/3*y^2 - 4/3*x*y\n");
  REQUIRE(comm.relations().size() == 2);
  CHECK(comm.relations()[1] == comm.relations()[0]);  // relations are stored monic
}

TEST_CASE("parse errors") {
  CHECK(kind_of([] { (void)parse_presentation("gens x:1\nrel x + x*x\n"); }) == ErrorKind::InhomogeneousRelation);
  CHECK(kind_of([] { (void)parse_presentation("gens x:1\nrel x*z\n"); }) == ErrorKind::UnknownGenerator);
  CHECK(kind_of([] { (void)parse_presentation("field GF 8\ngens x:1\n"); }) == ErrorKind::NonPrimeModulus);
  CHECK(kind_of([] { (void)parse_presentation("gens x:1 y:1\nskew q(x,y)=0\n"); }) == ErrorKind::InvalidSkewMatrix);

  auto e = syntax_error_of("gens x:1\nrel x +\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 8);
  CHECK(e.expected() == std::set<std::string>{"'('", "'['", "identifier", "integer"});
  CHECK(e.found() == "newline");
  CHECK(e.kind() == ErrorKind::Syntax);

  auto k = syntax_error_of("gens x:1\nfrobnicate\n");
  CHECK(k.line() == 2);
  CHECK(k.expected().count("'rel'") == 1);

  auto late = syntax_error_of("gens x:1\nfield Q\n");
  CHECK(late.expected().count("'field'") == 0);
  CHECK(syntax_error_of("field GF 7\ntensor { field Q } { gens y:1 }\n").line() == 2);
  CHECK(syntax_error_of("gens x:1 $\n").column() == 10);
}

TEST_CASE("tensor blocks inherit the field") {
  auto t = parse_presentation("field GF 7\ntensor {\n  gens x1:1 x2:1\n  skew q(x1,x2)=-1\n} {\n  gens y1:2 y2:2\n  skew\n}\n");
  CHECK(t.field() == gf(7));
  CHECK(t.num_generators() == 4);
  CHECK(t.gens().degree(2) == 2);
  CHECK(ReductionSystem::build(t, 4).hilbert() == std::vector<std::size_t>{1, 2, 5, 8, 14});
}

TEST_CASE("polynomial parsing") {
  auto p = parse_presentation("field GF 7\ngens x:1 y:1\n");
  CHECK(poly(p, "[x,y]") == poly(p, "x*y - y*x"));
  CHECK(poly(p, "(x+y)^2") == poly(p, "x^2 + x*y + y*x + y^2"));
  CHECK(poly(p, "1/2*x") == poly(p, "4*x"));
  CHECK(poly(p, "-x - (-y)") == poly(p, "y - x"));
  CHECK(kind_of([&] { (void)poly(p, "x*"); }) == ErrorKind::Syntax);
  CHECK(kind_of([&] { (void)poly(p, "x/7"); }) == ErrorKind::Syntax);
  CHECK(kind_of([&] { (void)poly(p, "1/7*x"); }) == ErrorKind::DivisionByZero);
}

TEST_CASE("print then parse is the identity") {
  Rng rng(91);
  for (int trial = 0; trial < 60; ++trial) {
    FieldSpec f = trial % 3 == 0 ? qq() : gf(trial % 3 == 1 ? 5 : 7);
    std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
    Presentation p = trial % 2 == 0 ? skew_ring(random_skew_matrix(f, n, false, rng)) : free_on(f, n);
    std::vector<NcPoly> extra;
    for (int k = 0; k < 2; ++k) extra.push_back(random_homogeneous(p.generators(), f, 2 + k, 3, rng));
    p = quotient(p, extra);
    if (trial % 5 == 0) p = adjoin_central(p, 1);
    if (trial % 7 == 0) p = tensor(p, commutative(f, 1));
    std::string text = print_presentation(p);
    CHECK_MESSAGE(parse_presentation(text) == p, text);
  }
}

TEST_CASE("emitted JSON shapes") {
  CHECK(emit(hilbert_json({1, 2, 3, 4, 5}, 4), Format::Json) == "{\"hilbert\":[1,2,3,4,5],\"D\":4}\n");
  auto f = gf(7);
  IsoVerdict v;
  v.isomorphic = true;
  v.witness = ElementaryChange{{1, 0}, {sc(f, 1), sc(f, 1)}};
  v.checked_degree = 6;
  CHECK(emit(verdict_json(v), Format::Json) ==
        "{\"isomorphic\":true,\"sigma\":[2,1],\"scalars\":[\"1 mod 7\",\"1 mod 7\"],\"checked_degree\":6}\n");
  Json empty;
  empty["characters"] = Json::array();
  CHECK(emit(empty, Format::Json) == "{\"characters\":[]}\n");
  CHECK(scalar_json(Scalar::parse(qq(), "3/2")) == "3/2");
  CHECK(emit(hilbert_json({1, 2}, 1), Format::Table) == "hilbert: 1 2\nD: 1\n");
  auto s = Subspace::span(f, 2, {Vector{sc(f, 2), sc(f, 4)}});
  CHECK(subspace_json(s)["rows"].dump() == "[[\"1 mod 7\",\"2 mod 7\"]]");
}

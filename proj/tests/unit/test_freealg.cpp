#include "support.hpp"

using namespace testing;

namespace {

GeneratorsPtr three() { return make_generators({"x1", "x2", "x3"}, {1, 1, 1}); }

NcPoly random_poly(const GeneratorsPtr& g, const FieldSpec& f, Rng& rng) {
  NcPoly out(g, f);
  for (int d = 0; d <= 3; ++d) out += random_homogeneous(g, f, d, 3, rng);
  return out;
}

Word random_word(std::size_t n, Rng& rng) {
  std::uniform_int_distribution<int> len(0, 4);
  std::uniform_int_distribution<std::size_t> letter(0, n - 1);
  Word w;
  for (int i = len(rng); i > 0; --i) w.letters.push_back(static_cast<Letter>(letter(rng)));
  return w;
}

}  // namespace

TEST_CASE("generator sets") {
  CHECK(kind_of([] { (void)make_generators({"x", "x"}, {1, 1}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { (void)make_generators({"x"}, {0}); }) == ErrorKind::InvalidArgument);
  auto g = make_generators({"x", "y"}, {1, 2});
  CHECK(g->degree(Word{0, 1, 1}) == 5);
  CHECK(g->degree(Word{}) == 0);
  CHECK(*g->find("y") == 1);
  CHECK_FALSE(g->find("z"));
}

TEST_CASE("products and commutators") {
  auto g = three();
  auto f = gf(7);
  NcPoly x1 = NcPoly::generator(g, f, 0), x2 = NcPoly::generator(g, f, 1);
  CHECK(x1 * x2 == NcPoly::monomial(g, Word{0, 1}, Scalar::one(f)));
  CHECK(to_string(commutator(x2, x1)) == "x2*x1 + 6*x1*x2");
  CHECK(commutator(x1 + x2, x1 + x2).is_zero());
  CHECK(to_string(power(x1 + x2, 2)) == "x2^2 + x2*x1 + x1*x2 + x1^2");
  auto other = make_generators({"a"}, {1});
  CHECK(kind_of([&] { (void)(x1 + NcPoly::generator(other, f, 0)); }) == ErrorKind::GeneratorSetMismatch);
}

TEST_CASE("deglex order") {
  auto g = three();
  CHECK(deglex_compare(*g, Word{0}, Word{0, 1}) < 0);
  CHECK(deglex_compare(*g, Word{0, 1}, Word{1, 0}) < 0);
  CHECK(deglex_compare(*g, Word{2, 2}, Word{2, 2}) == 0);
  auto weighted = make_generators({"x", "y"}, {1, 2});
  CHECK(deglex_compare(*weighted, Word{1}, Word{0, 0, 0}) < 0);
}

TEST_CASE("deglex is a total order compatible with multiplication") {
  auto g = three();
  Rng rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    Word u = random_word(3, rng), v = random_word(3, rng), w = random_word(3, rng);
    auto uv = deglex_compare(*g, u, v);
    CHECK((uv == 0) == (u == v));
    CHECK(deglex_compare(*g, v, u) == (0 <=> uv));
    if (uv < 0) {
      CHECK(deglex_compare(*g, w * u, w * v) < 0);
      CHECK(deglex_compare(*g, u * w, v * w) < 0);
      if (deglex_compare(*g, v, w) < 0) CHECK(deglex_compare(*g, u, w) < 0);
    }
  }
}

TEST_CASE("ring axioms on random polynomials") {
  auto g = three();
  Rng rng(22);
  for (const auto& f : {gf(5), qq()}) {
    for (int trial = 0; trial < 60; ++trial) {
      NcPoly a = random_poly(g, f, rng), b = random_poly(g, f, rng), c = random_poly(g, f, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(commutator(a, b) == -commutator(b, a));
    }
  }
}

TEST_CASE("homogeneous components") {
  auto g = three();
  auto f = gf(7);
  NcPoly x1 = NcPoly::generator(g, f, 0), x2 = NcPoly::generator(g, f, 1);
  NcPoly p = x1 + x1 * x2;
  CHECK(p.homogeneous_component(1) == x1);
  CHECK(p.homogeneous_component(2) == x1 * x2);
  CHECK(NcPoly(g, f).homogeneous_component(3).is_zero());
  CHECK_FALSE(p.homogeneous_degree());
  CHECK(*(x1 * x2).homogeneous_degree() == 2);

  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    NcPoly r = random_poly(g, f, rng);
    NcPoly sum(g, f);
    for (int d = 0; d <= 3; ++d) {
      NcPoly c = r.homogeneous_component(d);
      CHECK(c.is_homogeneous());
      sum += c;
    }
    CHECK(sum == r);
  }
}

TEST_CASE("substitution is an algebra map") {
  auto g = three();
  auto f = gf(11);
  Rng rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<NcPoly> images;
    for (int i = 0; i < 3; ++i) images.push_back(random_homogeneous(g, f, 1, 2, rng));
    NcPoly a = random_poly(g, f, rng), b = random_poly(g, f, rng);
    CHECK(substitute(a * b, images) == substitute(a, images) * substitute(b, images));
    CHECK(substitute(a + b, images) == substitute(a, images) + substitute(b, images));
  }
}

#include "support.hpp"

using namespace testing;

namespace {

Vector vec(const FieldSpec& f, std::initializer_list<long long> xs) {
  Vector v;
  for (auto x : xs) v.push_back(sc(f, x));
  return v;
}

Matrix random_matrix(const FieldSpec& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(f, rows, cols);
  // Sparse-ish entries give rank-deficient cases often.
  std::bernoulli_distribution zero(0.5);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = zero(rng) ? Scalar::zero(f) : random_scalar(f, rng);
  }
  return m;
}

Subspace random_subspace(const FieldSpec& f, std::size_t amb, Rng& rng) {
  std::uniform_int_distribution<std::size_t> count(0, amb);
  return Subspace::row_space(random_matrix(f, count(rng), amb, rng));
}

}  // namespace

TEST_CASE("rref examples") {
  auto q = qq();
  auto id = Matrix::identity(q, 3);
  auto r = rref(id);
  CHECK(r.rank == 3);
  CHECK(r.reduced == id);
  CHECK(rref(Matrix(q, 2, 3)).rank == 0);
  auto m = Matrix::from_rows(q, 2, {vec(q, {1, 2}), vec(q, {2, 4})});
  auto e = rref(m);
  CHECK(e.rank == 1);
  CHECK(e.reduced.row_vectors()[0] == vec(q, {1, 2}));
  CHECK(is_zero(e.reduced.row_vectors()[1]));
}

TEST_CASE("rref is idempotent and preserves rank and row space") {
  Rng rng(31);
  for (const auto& f : {gf(2), gf(7), qq()}) {
    for (int trial = 0; trial < 50; ++trial) {
      Matrix m = random_matrix(f, 4, 5, rng);
      auto e = rref(m);
      CHECK(rref(e.reduced).reduced == e.reduced);
      CHECK(rank(e.reduced) == e.rank);
      CHECK(Subspace::row_space(m) == Subspace::row_space(e.reduced));
    }
  }
}

TEST_CASE("subspace lattice examples") {
  auto f = gf(5);
  auto e1 = vec(f, {1, 0, 0}), e2 = vec(f, {0, 1, 0}), e3 = vec(f, {0, 0, 1});
  auto u = Subspace::span(f, 3, {e1, e2});
  CHECK(u.intersection(u) == u);
  CHECK(Subspace::span(f, 3, {e1}).intersection(Subspace::span(f, 3, {e2})).dim() == 0);
  CHECK(u.intersection(Subspace::span(f, 3, {e2, e3})) == Subspace::span(f, 3, {e2}));
  CHECK(kind_of([&] { (void)u.sum(Subspace::zero(f, 4)); }) == ErrorKind::AmbientMismatch);
}

TEST_CASE("modular dimension formula") {
  Rng rng(32);
  for (const auto& f : {gf(2), gf(3), qq()}) {
    for (int trial = 0; trial < 80; ++trial) {
      Subspace u = random_subspace(f, 6, rng), v = random_subspace(f, 6, rng);
      Subspace s = u.sum(v), i = u.intersection(v);
      CHECK(u.dim() + v.dim() == s.dim() + i.dim());
      CHECK(s.contains(u));
      CHECK(u.contains(i));
      CHECK(v.contains(i));
    }
  }
}

TEST_CASE("membership agrees with the rank test") {
  Rng rng(33);
  auto f = gf(3);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix m = random_matrix(f, 3, 5, rng);
    Vector v = random_matrix(f, 1, 5, rng).row_vectors()[0];
    Matrix bigger = m;
    bigger.append_row(v);
    CHECK(Subspace::row_space(m).contains(v) == (rank(bigger) == rank(m)));
  }
}

TEST_CASE("kernels") {
  auto f = gf(5);
  CHECK(kernel_basis(Matrix::identity(f, 3)).dim() == 0);
  CHECK(kernel_basis(Matrix(f, 2, 3)).dim() == 3);
  auto k = kernel_basis(Matrix::from_rows(f, 2, {vec(f, {1, 1})}));
  CHECK(k == Subspace::span(f, 2, {vec(f, {1, 4})}));

  Rng rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix m = random_matrix(f, 3, 5, rng);
    auto ker = kernel_basis(m);
    CHECK(ker.dim() == 5 - rank(m));
    for (const auto& v : ker.basis()) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Scalar dot = Scalar::zero(f);
        for (std::size_t c = 0; c < 5; ++c) dot += m(r, c) * v[c];
        CHECK(dot.is_zero());
      }
    }
  }
}

TEST_CASE("echelon builder matches rref spans") {
  Rng rng(35);
  auto f = gf(7);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix m = random_matrix(f, 6, 5, rng);
    EchelonBuilder b(f, 5);
    for (const auto& row : m.row_vectors()) b.insert(row);
    CHECK(b.dim() == rank(m));
    CHECK(b.to_subspace() == Subspace::row_space(m));
  }
}

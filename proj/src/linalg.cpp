#include "galg/linalg.hpp"

#include <algorithm>

#include "galg/error.hpp"

namespace galg {

Vector zero_vector(const FieldSpec& field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::from_rows(FieldSpec field, std::size_t cols, std::vector<Vector> rows) {
  Matrix m(field, 0, cols);
  m.data_.reserve(rows.size() * cols);
  for (auto& r : rows) m.append_row(r);
  return m;
}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
  return out;
}

void Matrix::append_row(std::span<const Scalar> row) {
  if (row.size() != cols_) throw Error(ErrorKind::AmbientMismatch, "row length differs from column count");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RrefResult rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
    }
    Scalar inv = m(lead_row, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      Scalar f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (!m(lead_row, k).is_zero()) m(r, k) -= f * m(lead_row, k);
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(m), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Subspace::Subspace(FieldSpec field, std::size_t ambient_dim) : field_(field), ambient_(ambient_dim) {}

Subspace Subspace::full(FieldSpec field, std::size_t ambient_dim) {
  return row_space(Matrix::identity(field, ambient_dim));
}

Subspace Subspace::span(FieldSpec field, std::size_t ambient_dim, std::vector<Vector> vectors) {
  return row_space(Matrix::from_rows(field, ambient_dim, std::move(vectors)));
}

Subspace Subspace::row_space(const Matrix& m) {
  RrefResult r = rref(m);
  Subspace s(m.field(), m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    s.basis_.emplace_back(r.reduced.row(i).begin(), r.reduced.row(i).end());
  }
  s.pivots_ = std::move(r.pivots);
  return s;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(field_, ambient_, basis_); }

void Subspace::check_ambient(const Subspace& other) const {
  if (ambient_ != other.ambient_) {
    throw Error(ErrorKind::AmbientMismatch, "subspaces of " + std::to_string(ambient_) + " and " +
                                                std::to_string(other.ambient_) + " dimensional spaces");
  }
  if (!(field_ == other.field_)) throw Error(ErrorKind::FieldMismatch, "subspaces over different fields");
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::AmbientMismatch, "vector length differs from ambient");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar f = v[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t k = pivots_[i]; k < ambient_; ++k) {
      if (!basis_[i][k].is_zero()) v[k] -= f * basis_[i][k];
    }
  }
  return v;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  return is_zero(reduce(Vector(v.begin(), v.end())));
}

bool Subspace::contains(const Subspace& other) const {
  check_ambient(other);
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Vector& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
  check_ambient(other);
  std::vector<Vector> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return span(field_, ambient_, std::move(rows));
}

Subspace Subspace::intersection(const Subspace& other) const {
  check_ambient(other);
  if (basis_.empty() || other.basis_.empty()) return Subspace(field_, ambient_);
  const std::size_t n = ambient_;
  Matrix z(field_, 0, 2 * n);
  Vector row = zero_vector(field_, 2 * n);
  for (const auto& u : basis_) {
    std::copy(u.begin(), u.end(), row.begin());
    std::copy(u.begin(), u.end(), row.begin() + static_cast<std::ptrdiff_t>(n));
    z.append_row(row);
  }
  for (const auto& v : other.basis_) {
    std::copy(v.begin(), v.end(), row.begin());
    std::fill(row.begin() + static_cast<std::ptrdiff_t>(n), row.end(), Scalar::zero(field_));
    z.append_row(row);
  }
  RrefResult r = rref(std::move(z));
  std::vector<Vector> meet;
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (r.pivots[i] >= n) {
      auto rw = r.reduced.row(i);
      meet.emplace_back(rw.begin() + static_cast<std::ptrdiff_t>(n), rw.end());
    }
  }
  return span(field_, n, std::move(meet));
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

Subspace kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> kernel;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[f] = Scalar::one(m.field());
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, f);
    kernel.push_back(std::move(v));
  }
  return Subspace::span(m.field(), m.cols(), std::move(kernel));
}

EchelonBuilder::EchelonBuilder(FieldSpec field, std::size_t ambient_dim)
    : field_(field), ambient_(ambient_dim), row_of_pivot_(ambient_dim, -1) {}

Vector EchelonBuilder::reduce(Vector v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::AmbientMismatch, "vector length differs from ambient");
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (v[c].is_zero() || row_of_pivot_[c] < 0) continue;
    const Vector& row = rows_[static_cast<std::size_t>(row_of_pivot_[c])];
    Scalar f = v[c];
    for (std::size_t k = c; k < ambient_; ++k) {
      if (!row[k].is_zero()) v[k] -= f * row[k];
    }
  }
  return v;
}

const Vector* EchelonBuilder::insert(Vector v) {
  v = reduce(std::move(v));
  auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (it == v.end()) return nullptr;
  std::size_t pivot = static_cast<std::size_t>(it - v.begin());
  Scalar inv = v[pivot].inverse();
  for (std::size_t k = pivot; k < ambient_; ++k) v[k] *= inv;
  row_of_pivot_[pivot] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(v));
  return &rows_.back();
}

Subspace EchelonBuilder::to_subspace() const { return Subspace::span(field_, ambient_, rows_); }

}  // namespace galg

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "galg/scalar.hpp"

namespace galg {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& field, std::size_t n);
bool is_zero(std::span<const Scalar> v);

/// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix from_rows(FieldSpec field, std::size_t cols, std::vector<Vector> rows);
  static Matrix identity(FieldSpec field, std::size_t n);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Vector> row_vectors() const;

  void append_row(std::span<const Scalar> row);

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; pivots are the leftmost nonzero column of each row.
RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Row space of a matrix, stored as its nonzero RREF rows, so two subspaces are
/// equal exactly when their stored bases are identical.
class Subspace {
 public:
  Subspace(FieldSpec field, std::size_t ambient_dim);

  static Subspace zero(FieldSpec field, std::size_t ambient_dim) { return {field, ambient_dim}; }
  static Subspace full(FieldSpec field, std::size_t ambient_dim);
  static Subspace span(FieldSpec field, std::size_t ambient_dim, std::vector<Vector> vectors);
  static Subspace row_space(const Matrix& m);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Matrix basis_matrix() const;

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  /// v minus its projection along the stored basis onto the pivot coordinates.
  Vector reduce(Vector v) const;

  Subspace sum(const Subspace& other) const;
  /// Zassenhaus intersection.
  Subspace intersection(const Subspace& other) const;
  /// Rows whose pivot satisfies keep(pivot); still a canonical basis.
  template <class Pred>
  Subspace filter_by_pivot(Pred keep) const {
    Subspace out(field_, ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (keep(pivots_[i])) {
        out.basis_.push_back(basis_[i]);
        out.pivots_.push_back(pivots_[i]);
      }
    }
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  void check_ambient(const Subspace& other) const;

  FieldSpec field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Basis of the right null space {v : m v = 0}.
Subspace kernel_basis(const Matrix& m);

/// Incrementally grown echelon basis (not fully reduced). Each stored row has a
/// unit pivot at its first nonzero column and zeros at earlier pivots.
class EchelonBuilder {
 public:
  EchelonBuilder(FieldSpec field, std::size_t ambient_dim);

  /// Reduces v against the stored rows; stores and returns the normalized
  /// remainder when nonzero.
  const Vector* insert(Vector v);
  Vector reduce(Vector v) const;

  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<Vector>& rows() const noexcept { return rows_; }
  Subspace to_subspace() const;

 private:
  FieldSpec field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::ptrdiff_t> row_of_pivot_;
};

}  // namespace galg

#pragma once

#include <string>
#include <vector>

#include "phantom/ring/polynomial.hpp"

namespace phantom {

// Dense matrix over the ambient polynomial ring, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(RingPtr ring, std::size_t rows, std::size_t cols);

  static Matrix identity(RingPtr ring, std::size_t n);
  static Matrix from_columns(RingPtr ring, std::size_t rows, const std::vector<Vector>& columns);
  static Matrix from_rows(RingPtr ring, std::size_t cols, const std::vector<std::vector<Polynomial>>& rows);
  static Matrix scalar(RingPtr ring, std::size_t n, const Polynomial& f);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Polynomial f);

  Vector column(std::size_t j) const;
  std::vector<Vector> columns() const;
  Vector apply(const Vector& v) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

  // Entrywise q-th powers.
  Matrix frobenius(std::uint64_t q) const;
  Matrix kronecker(const Matrix& o) const;
  Matrix hconcat(const Matrix& o) const;
  Matrix vconcat(const Matrix& o) const;
  // Block matrix; blocks in one row share a row count, in one column a column count.
  static Matrix blocks(const std::vector<std::vector<Matrix>>& grid);

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> entries_;
};

}  // namespace phantom

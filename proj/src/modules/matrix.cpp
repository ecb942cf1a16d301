#include "phantom/modules/matrix.hpp"

#include "phantom/ring/errors.hpp"

namespace phantom {

Matrix::Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

Matrix Matrix::identity(RingPtr ring, std::size_t n) { return scalar(ring, n, Polynomial::constant(ring, 1)); }

Matrix Matrix::scalar(RingPtr ring, std::size_t n, const Polynomial& f) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, f);
  return m;
}

Matrix Matrix::from_columns(RingPtr ring, std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(ring, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].rank() != rows) throw InputError("column length does not match row count");
    auto coords = columns[j].coordinates();
    for (std::size_t i = 0; i < rows; ++i) m.set(i, j, std::move(coords[i]));
  }
  return m;
}

Matrix Matrix::from_rows(RingPtr ring, std::size_t cols, const std::vector<std::vector<Polynomial>>& rows) {
  Matrix m(ring, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InputError("matrix row has the wrong length");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, Polynomial f) {
  if (i >= rows_ || j >= cols_) throw InputError("matrix index out of range");
  if (!f.ring()) f = Polynomial(ring_);
  require_same_ring(ring_, f.ring(), "matrix entry");
  entries_[i * cols_ + j] = std::move(f);
}

Vector Matrix::column(std::size_t j) const {
  std::vector<Polynomial> coords;
  coords.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) coords.push_back(at(i, j));
  return Vector::from_coordinates(ring_, coords);
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.rank() != cols_) throw InputError("vector length does not match matrix");
  auto coords = v.coordinates();
  Vector out(ring_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (!coords[j].is_zero()) out = out + column(j) * coords[j];
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix shapes do not compose");
  Matrix m(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < o.cols_; ++j) {
      Polynomial acc(ring_);
      for (std::size_t k = 0; k < cols_; ++k) {
        if (!at(i, k).is_zero() && !o.at(k, j).is_zero()) acc += at(i, k) * o.at(k, j);
      }
      m.set(i, j, std::move(acc));
    }
  }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shapes differ");
  Matrix m(ring_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] + o.entries_[k];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shapes differ");
  Matrix m(ring_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] - o.entries_[k];
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

bool Matrix::is_zero() const {
  for (const auto& f : entries_) {
    if (!f.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::frobenius(std::uint64_t q) const {
  Matrix m(ring_, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k].frobenius(q);
  return m;
}

Matrix Matrix::kronecker(const Matrix& o) const {
  Matrix m(ring_, rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < o.rows_; ++k) {
        for (std::size_t l = 0; l < o.cols_; ++l) {
          if (!o.at(k, l).is_zero()) m.set(i * o.rows_ + k, j * o.cols_ + l, at(i, j) * o.at(k, l));
        }
      }
    }
  }
  return m;
}

Matrix Matrix::hconcat(const Matrix& o) const {
  if (rows_ != o.rows_) throw InputError("hconcat: row counts differ");
  Matrix m(ring_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
    for (std::size_t j = 0; j < o.cols_; ++j) m.set(i, cols_ + j, o.at(i, j));
  }
  return m;
}

Matrix Matrix::vconcat(const Matrix& o) const {
  if (cols_ != o.cols_) throw InputError("vconcat: column counts differ");
  Matrix m(ring_, rows_ + o.rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < rows_; ++i) m.set(i, j, at(i, j));
    for (std::size_t i = 0; i < o.rows_; ++i) m.set(rows_ + i, j, o.at(i, j));
  }
  return m;
}

Matrix Matrix::blocks(const std::vector<std::vector<Matrix>>& grid) {
  if (grid.empty() || grid.front().empty()) throw InputError("empty block matrix");
  Matrix result;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    Matrix row = grid[r].front();
    for (std::size_t c = 1; c < grid[r].size(); ++c) row = row.hconcat(grid[r][c]);
    result = r == 0 ? row : result.vconcat(row);
  }
  return result;
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += at(i, j).to_string();
    }
  }
  return s + "]";
}

}  // namespace phantom

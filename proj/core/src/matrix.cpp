#include "carnot/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace carnot {

namespace {

// Row echelon reduction in place. Returns pivot columns; when track_det is
// non-null it accumulates the determinant factor (sign swaps only; rows are
// never rescaled).
std::vector<int> echelon(std::vector<std::vector<Rational>>& m, int* sign) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r) {
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      std::swap(m[pivot], m[row]);
      if (sign) *sign = -*sign;
    }
    for (int r = row + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[row][col];
      for (int c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, Rational(0)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative dimension");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Rational> RationalMatrix::col(int c) const {
  std::vector<Rational> out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

void RationalMatrix::set_col(int c, const std::vector<Rational>& values) {
  if (static_cast<int>(values.size()) != rows_)
    throw std::invalid_argument("matrix: column length mismatch");
  for (int r = 0; r < rows_; ++r) at(r, c) = values[r];
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix: shape mismatch in +");
  RationalMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix: shape mismatch in -");
  RationalMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix: shape mismatch in *");
  RationalMatrix out(rows_, other.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(r, k);
      if (a == 0) continue;
      for (int c = 0; c < other.cols_; ++c) {
        const Rational& b = other.at(k, c);
        if (b == 0) continue;
        out.at(r, c) += a * b;
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& s) const {
  RationalMatrix out(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
  return out;
}

bool RationalMatrix::operator==(const RationalMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("matrix: vector length mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (at(r, c) != 0 && v[c] != 0) out[r] += at(r, c) * v[c];
  return out;
}

RationalMatrix RationalMatrix::hcat(const RationalMatrix& other) const {
  if (rows_ != other.rows_) throw std::invalid_argument("matrix: row mismatch in hcat");
  RationalMatrix out(rows_, cols_ + other.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
    for (int c = 0; c < other.cols_; ++c) out.at(r, cols_ + c) = other.at(r, c);
  }
  return out;
}

int RationalMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m[r][c] = at(r, c);
  return static_cast<int>(echelon(m, nullptr).size());
}

Rational RationalMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("matrix: det of non-square matrix");
  if (rows_ == 0) return Rational(1);
  std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m[r][c] = at(r, c);
  int sign = 1;
  const auto pivots = echelon(m, &sign);
  if (static_cast<int>(pivots.size()) < rows_) return Rational(0);
  Rational d(sign);
  for (int i = 0; i < rows_; ++i) d *= m[i][i];
  return d;
}

std::vector<std::vector<Rational>> RationalMatrix::nullspace() const {
  std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m[r][c] = at(r, c);
  int sign = 1;
  const auto pivots = echelon(m, &sign);

  // Back-substitute once into reduced form.
  for (int p = static_cast<int>(pivots.size()) - 1; p >= 0; --p) {
    const int col = pivots[p];
    Rational lead = m[p][col];
    for (int c = col; c < cols_; ++c) m[p][c] /= lead;
    for (int r = 0; r < p; ++r) {
      if (m[r][col] == 0) continue;
      Rational factor = m[r][col];
      for (int c = col; c < cols_; ++c) m[r][c] -= factor * m[p][c];
    }
  }

  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (int free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(cols_, Rational(0));
    v[free_col] = 1;
    for (size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -m[p][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace carnot

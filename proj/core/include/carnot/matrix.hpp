#pragma once

#include <vector>

#include "carnot/rational.hpp"

namespace carnot {

/// Dense matrix over exact rationals. Rank, determinant, and kernel are
/// computed by exact Gaussian elimination; no tolerances anywhere.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);

  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return data_[index(r, c)]; }
  const Rational& at(int r, int c) const { return data_[index(r, c)]; }

  std::vector<Rational> col(int c) const;
  void set_col(int c, const std::vector<Rational>& values);

  RationalMatrix operator+(const RationalMatrix& other) const;
  RationalMatrix operator-(const RationalMatrix& other) const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix scaled(const Rational& s) const;
  bool operator==(const RationalMatrix& other) const;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  /// [this | other] side by side.
  RationalMatrix hcat(const RationalMatrix& other) const;

  /// Exact rank.
  int rank() const;

  /// Exact determinant; square matrices only.
  Rational det() const;

  /// Basis of the right null space {v : Av = 0}.
  std::vector<std::vector<Rational>> nullspace() const;

 private:
  int index(int r, int c) const { return r * cols_ + c; }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace carnot

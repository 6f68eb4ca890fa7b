#pragma once

#include "spinforge/coeff/field.hpp"
#include "spinforge/error.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace spinforge {

// Dense row-major matrix over a coefficient field.
template <CoefficientField F>
class Matrix {
 public:
  using Value = typename F::value_type;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix out(field, n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = field.one();
    return out;
  }
  // Anti-diagonal identity J.
  static Matrix anti_identity(const F& field, std::size_t n) {
    Matrix out(field, n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, n - 1 - i) = field.one();
    return out;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Value& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Value& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix out(a.field_, a.rows_, b.cols_);
    const Value zero = a.field_.zero();
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Value& aik = a(i, k);
        if (aik == zero) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Value& bkj = b(k, j);
          if (bkj == zero) continue;
          out(i, j) = out(i, j) + aik * bkj;
        }
      }
    }
    return out;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = a.data_[i] + b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = a.data_[i] - b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a) {
    for (auto& v : a.data_) v = -v;
    return a;
  }
  friend Matrix operator*(const Value& s, Matrix a) {
    for (auto& v : a.data_) v = s * v;
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!(v == field_.zero())) return false;
    return true;
  }

  // Determinant by fraction-based Gaussian elimination.
  Value determinant() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of a non-square matrix");
    Matrix a = *this;
    Value det = field_.one();
    const std::size_t n = rows_;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t pivot = c;
      while (pivot < n && a(pivot, c) == field_.zero()) ++pivot;
      if (pivot == n) return field_.zero();
      if (pivot != c) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(c, j));
        det = -det;
      }
      det = det * a(c, c);
      const Value inv = require_inv(field_, a(c, c));
      for (std::size_t r = c + 1; r < n; ++r) {
        if (a(r, c) == field_.zero()) continue;
        const Value factor = a(r, c) * inv;
        for (std::size_t j = c; j < n; ++j) a(r, j) = a(r, j) - factor * a(c, j);
      }
    }
    return det;
  }

  std::size_t rank() const {
    Matrix a = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t pivot = r;
      while (pivot < rows_ && a(pivot, c) == field_.zero()) ++pivot;
      if (pivot == rows_) continue;
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a(pivot, j), a(r, j));
      const Value inv = require_inv(field_, a(r, c));
      for (std::size_t i = r + 1; i < rows_; ++i) {
        if (a(i, c) == field_.zero()) continue;
        const Value factor = a(i, c) * inv;
        for (std::size_t j = c; j < cols_; ++j) a(i, j) = a(i, j) - factor * a(r, j);
      }
      ++r;
    }
    return r;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Value> data_;
};

// Incremental sparse row echelon form for homogeneous systems. Each stored row
// is normalized so that its leading (smallest) column has coefficient 1.
template <CoefficientField F>
class SparseEchelon {
 public:
  using Value = typename F::value_type;
  using Row = std::map<std::size_t, Value>;

  SparseEchelon(F field, std::size_t unknowns) : field_(std::move(field)), unknowns_(unknowns) {}

  std::size_t unknowns() const { return unknowns_; }
  std::size_t rank() const { return pivots_.size(); }

  // Reduces the equation against existing pivots; returns true when it was new.
  bool add_row(Row row) {
    erase_zeros(row);
    while (!row.empty()) {
      auto lead = row.begin();
      auto it = pivots_.find(lead->first);
      if (it == pivots_.end()) {
        const Value inv = require_inv(field_, lead->second);
        for (auto& [col, v] : row) v = v * inv;
        pivots_.emplace(lead->first, std::move(row));
        return true;
      }
      const Value factor = lead->second;
      for (const auto& [col, v] : it->second) {
        auto [slot, inserted] = row.try_emplace(col, field_.zero());
        slot->second = slot->second - factor * v;
        if (slot->second == field_.zero()) row.erase(slot);
      }
    }
    return false;
  }

  // Basis of the solution space, one vector per free column (free column set to 1).
  std::vector<std::vector<Value>> nullspace() const {
    std::vector<std::vector<Value>> basis;
    for (std::size_t free = 0; free < unknowns_; ++free) {
      if (pivots_.count(free)) continue;
      std::vector<Value> x(unknowns_, field_.zero());
      x[free] = field_.one();
      // back substitution from the largest pivot column down
      for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        Value acc = field_.zero();
        for (const auto& [col, v] : it->second) {
          if (col == it->first) continue;
          if (!(x[col] == field_.zero())) acc = acc + v * x[col];
        }
        x[it->first] = -acc;
      }
      basis.push_back(std::move(x));
    }
    return basis;
  }

 private:
  void erase_zeros(Row& row) const {
    std::erase_if(row, [&](const auto& kv) { return kv.second == field_.zero(); });
  }

  F field_;
  std::size_t unknowns_;
  std::map<std::size_t, Row> pivots_;
};

template <CoefficientField F>
std::vector<std::vector<std::string>> matrix_to_strings(const Matrix<F>& a) {
  std::vector<std::vector<std::string>> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i].push_back(a.field().to_string(a(i, j)));
  return out;
}

}  // namespace spinforge

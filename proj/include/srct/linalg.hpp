#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "srct/composition.hpp"

namespace srct {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix over T.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T(0)) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw invalid_input("matrix product: dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r].assign(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using RationalMatrix = Matrix<Rational>;

/// Sparse linear equation sum coeff * x[var] = 0.
using SparseRow = std::map<std::size_t, Rational>;

/// Basis of {x : row . x = 0 for every row} over the rationals, computed by
/// incremental reduction to reduced row echelon form.
inline std::vector<std::vector<Rational>> nullspace(const std::vector<SparseRow>& equations, std::size_t num_vars) {
  std::map<std::size_t, SparseRow> pivots;  // pivot column -> normalized row (pivot coefficient 1)
  for (const auto& eq : equations) {
    SparseRow row;
    for (const auto& [v, c] : eq)
      if (c != 0) row[v] = c;
    // eliminate existing pivots
    for (auto it = row.begin(); it != row.end();) {
      auto p = pivots.find(it->first);
      if (p == pivots.end()) {
        ++it;
        continue;
      }
      const Rational factor = it->second;
      const std::size_t col = it->first;
      for (const auto& [v, c] : p->second) {
        Rational& slot = row[v];
        slot -= factor * c;
      }
      for (auto jt = row.begin(); jt != row.end();) jt = (jt->second == 0) ? row.erase(jt) : std::next(jt);
      it = row.upper_bound(col);
    }
    if (row.empty()) continue;
    const std::size_t col = row.begin()->first;
    const Rational lead = row.begin()->second;
    for (auto& [v, c] : row) c /= lead;
    // keep fully reduced: remove the new pivot column from older rows
    for (auto& [pc, prow] : pivots) {
      auto hit = prow.find(col);
      if (hit == prow.end()) continue;
      const Rational factor = hit->second;
      for (const auto& [v, c] : row) prow[v] -= factor * c;
      for (auto jt = prow.begin(); jt != prow.end();) jt = (jt->second == 0) ? prow.erase(jt) : std::next(jt);
    }
    pivots.emplace(col, std::move(row));
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < num_vars; ++free) {
    if (pivots.contains(free)) continue;
    std::vector<Rational> vec(num_vars, Rational(0));
    vec[free] = 1;
    for (const auto& [pc, prow] : pivots) {
      auto hit = prow.find(free);
      if (hit != prow.end()) vec[pc] = -hit->second;
    }
    basis.push_back(std::move(vec));
  }
  return basis;
}

}  // namespace srct

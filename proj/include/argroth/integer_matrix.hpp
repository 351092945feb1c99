#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace argroth {

/// Exact integer used for every entry, invariant factor and multiplicity.
using Integer = boost::multiprecision::cpp_int;

using IntVector = std::vector<Integer>;

/// Dense row-major matrix over the integers.
class IntMatrix {
public:
  IntMatrix() = default;

  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw std::invalid_argument("IntMatrix: entry count does not match shape");
  }

  // Nested-list construction; every row must have the same length.
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
      if (row.size() != cols_)
        throw std::invalid_argument("IntMatrix: ragged initializer");
      for (long long v : row)
        entries_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<IntVector> &rows,
                             std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw std::invalid_argument("IntMatrix: row length mismatch");
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }

  Integer &operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Integer &operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Integer> entries() const { return entries_; }

  IntVector row(std::size_t i) const {
    return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     entries_.begin() +
                         static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  IntVector col(std::size_t j) const {
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      out[i] = (*this)(i, j);
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
      return;
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap((*this)(i, a), (*this)(i, b));
  }

  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src,
                        const Integer &factor) {
    if (factor == 0)
      return;
    for (std::size_t j = 0; j < cols_; ++j)
      (*this)(dst, j) += factor * (*this)(src, j);
  }

  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src,
                        const Integer &factor) {
    if (factor == 0)
      return;
    for (std::size_t i = 0; i < rows_; ++i)
      (*this)(i, dst) += factor * (*this)(i, src);
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j)
      (*this)(i, j) = -(*this)(i, j);
  }

  // Rows of `other` appended below; column counts must agree.
  IntMatrix stacked(const IntMatrix &other) const {
    if (other.cols_ != cols_)
      throw std::invalid_argument("IntMatrix::stacked: column mismatch");
    IntMatrix out(rows_ + other.rows_, cols_);
    std::copy(entries_.begin(), entries_.end(), out.entries_.begin());
    std::copy(other.entries_.begin(), other.entries_.end(),
              out.entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size()));
    return out;
  }

  // Columns of `other` appended to the right; row counts must agree.
  IntMatrix beside(const IntMatrix &other) const {
    if (other.rows_ != rows_)
      throw std::invalid_argument("IntMatrix::beside: row mismatch");
    IntMatrix out(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j)
        out(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < other.cols_; ++j)
        out(i, cols_ + j) = other(i, j);
    }
    return out;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Integer &v) { return v == 0; });
  }

  friend bool operator==(const IntMatrix &a, const IntMatrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("IntMatrix: product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer &aik = a(i, k);
        if (aik == 0)
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend IntMatrix operator-(const IntMatrix &a, const IntMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("IntMatrix: difference shape mismatch");
    IntMatrix c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
      c.entries_[k] = a.entries_[k] - b.entries_[k];
    return c;
  }

  friend IntVector operator*(const IntMatrix &a, std::span<const Integer> x) {
    if (a.cols_ != x.size())
      throw std::invalid_argument("IntMatrix: vector length mismatch");
    IntVector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        y[i] += a(i, j) * x[j];
    return y;
  }

  IntMatrix scaled(const Integer &factor) const {
    IntMatrix out = *this;
    for (auto &v : out.entries_)
      v *= factor;
    return out;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

inline std::string to_string(std::span<const Integer> v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? " " : "") << v[i];
  os << ']';
  return os.str();
}

inline std::ostream &operator<<(std::ostream &os, const IntMatrix &m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    os << to_string(m.row(i)) << '\n';
  return os;
}

} // namespace argroth

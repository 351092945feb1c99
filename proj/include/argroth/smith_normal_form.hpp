#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "argroth/integer_matrix.hpp"

namespace argroth {

/// Result of diagonalising A by unimodular row and column operations.
///
/// `left * A * right == diagonal`, both transforms have determinant +-1, and
/// the diagonal entries d1 | d2 | ... are nonnegative with zeros trailing.
/// The diagonal is unique; the transforms are not.
struct SNFResult {
  IntMatrix diagonal;
  IntMatrix left;  // rows x rows
  IntMatrix right; // cols x cols

  std::size_t rank() const {
    std::size_t r = 0;
    const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
    while (r < n && diagonal(r, r) != 0)
      ++r;
    return r;
  }

  /// Nonzero diagonal entries in divisibility order.
  std::vector<Integer> factors() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < rank(); ++i)
      out.push_back(diagonal(i, i));
    return out;
  }
};

namespace detail {

// Position of the nonzero entry of least absolute value in the lower-right
// block starting at (t, t).
inline std::optional<std::pair<std::size_t, std::size_t>>
smallest_pivot(const IntMatrix &s, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0)
        continue;
      Integer a = abs(s(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = std::move(a);
        if (best_abs == 1)
          return best;
      }
    }
  return best;
}

} // namespace detail

inline SNFResult smith_normal_form(const IntMatrix &a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SNFResult res{a, IntMatrix::identity(m), IntMatrix::identity(n)};
  IntMatrix &s = res.diagonal;
  IntMatrix &u = res.left;
  IntMatrix &v = res.right;

  auto swap_rows = [&](std::size_t x, std::size_t y) {
    s.swap_rows(x, y);
    u.swap_rows(x, y);
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    s.swap_cols(x, y);
    v.swap_cols(x, y);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    auto pivot = detail::smallest_pivot(s, t);
    if (!pivot)
      break;
    swap_rows(t, pivot->first);
    swap_cols(t, pivot->second);

    for (;;) {
      bool dirty = false;

      // Clear column t below the pivot; a nonzero remainder becomes the
      // new (strictly smaller) pivot.
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0)
          continue;
        Integer q = s(i, t) / s(t, t);
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) {
          swap_rows(t, i);
          dirty = true;
        }
      }
      if (dirty)
        continue;

      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0)
          continue;
        Integer q = s(t, j) / s(t, t);
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (s(t, j) != 0) {
          swap_cols(t, j);
          dirty = true;
        }
      }
      if (dirty)
        continue;

      // Pivot must divide the remaining block; otherwise fold the offending
      // row into row t and reduce again.
      for (std::size_t i = t + 1; i < m && !dirty; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (s(i, j) % s(t, t) != 0) {
            s.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            dirty = true;
            break;
          }
      if (!dirty)
        break;
    }

    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return res;
}

/// Rank over the rationals.
inline std::size_t rational_rank(const IntMatrix &a) {
  return smith_normal_form(a).rank();
}

/// Basis of the integer kernel {x : A x = 0}, one column per basis vector.
inline IntMatrix integer_kernel(const IntMatrix &a) {
  const SNFResult snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  IntMatrix basis(a.cols(), a.cols() - r);
  for (std::size_t k = r; k < a.cols(); ++k)
    for (std::size_t i = 0; i < a.cols(); ++i)
      basis(i, k - r) = snf.right(i, k);
  return basis;
}

/// Integer row span of a matrix, with exact membership tests.
///
/// Membership of x is decided by writing x = G^T y: with U G^T V = S we need
/// S z = U x, which is solvable exactly when each (U x)_i is divisible by the
/// matching invariant factor and vanishes past the rank. Then y = V z.
class Lattice {
public:
  Lattice(const IntMatrix &generators)
      : dim_(generators.cols()), snf_(smith_normal_form(generators.transpose())),
        rank_(snf_.rank()) {}

  std::size_t ambient_dimension() const { return dim_; }
  std::size_t rank() const { return rank_; }

  /// Coefficients y with sum_k y_k * generator_k == x, if any exist.
  std::optional<IntVector> coordinates(std::span<const Integer> x) const {
    if (x.size() != dim_)
      throw std::invalid_argument("Lattice: vector length mismatch");
    const IntVector ux = snf_.left * x;
    const std::size_t gens = snf_.right.rows();
    IntVector z(gens);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (i < rank_) {
        const Integer &d = snf_.diagonal(i, i);
        if (ux[i] % d != 0)
          return std::nullopt;
        z[i] = ux[i] / d;
      } else if (ux[i] != 0) {
        return std::nullopt;
      }
    }
    return snf_.right * std::span<const Integer>(z);
  }

  bool contains(std::span<const Integer> x) const {
    return coordinates(x).has_value();
  }

private:
  std::size_t dim_;
  SNFResult snf_;
  std::size_t rank_;
};

} // namespace argroth

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "latkern/matrix.hpp"

namespace latkern {

// Exact Gauss-Jordan elimination over a field (Rational or RatFun).
// Pivots are chosen per column by minimal cost: bit size for rationals,
// total polynomial degree for rational functions (first row on ties).

inline long pivot_cost(const Rational& q) {
  return static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2));
}
inline long pivot_cost(const RatFun& r) { return r.total_degree(); }

template <class T>
struct RowEchelon {
  Matrix<T> reduced;                     // reduced row echelon form
  std::vector<std::size_t> pivot_cols;  // pivot column of each nonzero row
};

template <class T>
RowEchelon<T> rref(Matrix<T> a) {
  RowEchelon<T> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::optional<std::size_t> best;
    long best_cost = 0;
    for (std::size_t i = r; i < a.rows(); ++i) {
      if (a(i, c) == T{}) continue;
      const long cost = pivot_cost(a(i, c));
      if (!best || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (!best) continue;
    a.swap_rows(r, *best);
    const T inv = T(1) / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == T{}) continue;
      const T factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (a(r, j) == T{}) continue;
        a(i, j) = a(i, j) - factor * a(r, j);
      }
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.reduced = std::move(a);
  return out;
}

template <class T>
std::size_t rank(const Matrix<T>& a) {
  return rref(a).pivot_cols.size();
}

/// Basis of the right kernel {x : a x = 0}, one vector per column. Each
/// vector is scaled so that its first nonzero entry is 1.
template <class T>
Matrix<T> nullspace(const Matrix<T>& a) {
  const auto e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<T> basis(a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    std::vector<T> v(a.cols(), T{});
    v[f] = T(1);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.reduced(r, f);
    for (const auto& x : v) {
      if (x == T{}) continue;
      const T inv = T(1) / x;
      for (auto& y : v) y = y * inv;
      break;
    }
    basis.set_column(k, v);
  }
  return basis;
}

/// Some solution x of a x = b, or nullopt if the system is inconsistent.
template <class T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b) {
  const auto e = rref(hstack(a, b));
  const std::size_t n = a.cols();
  Matrix<T> x(n, b.cols());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    const std::size_t c = e.pivot_cols[r];
    if (c >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(c, j) = e.reduced(r, n + j);
  }
  return x;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
  if (!a.is_square()) return std::nullopt;
  const std::size_t n = a.rows();
  const auto e = rref(hstack(a, Matrix<T>::identity(n)));
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
  return e.reduced.columns(n, n);
}

template <class T>
T determinant(Matrix<T> a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  T det(1);
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::optional<std::size_t> best;
    long best_cost = 0;
    for (std::size_t i = c; i < n; ++i) {
      if (a(i, c) == T{}) continue;
      const long cost = pivot_cost(a(i, c));
      if (!best || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (!best) return T{};
    if (*best != c) {
      a.swap_rows(c, *best);
      det = -det;
    }
    det = det * a(c, c);
    const T inv = T(1) / a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == T{}) continue;
      const T factor = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) = a(i, j) - factor * a(c, j);
    }
  }
  return det;
}

}  // namespace latkern

#include "latkern/polynomial_modules.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "latkern/errors.hpp"
#include "latkern/linalg.hpp"
#include "latkern/transfer_matrix.hpp"

namespace latkern {

PolyMatrix to_poly_matrix(const TransferMatrix& m) {
  return m.map([](const RatFun& r) {
    if (!r.is_polynomial()) throw PreconditionError("entry " + r.to_string() + " is not a polynomial");
    return r.num();
  });
}

Poly poly_determinant(const PolyMatrix& p) {
  const RatFun det = determinant(to_transfer(p));
  if (!det.is_polynomial()) throw InternalError("determinant of a polynomial matrix is not polynomial");
  return det.num();
}

bool is_unimodular(const PolyMatrix& u) {
  if (!u.is_square()) return false;
  const Poly det = poly_determinant(u);
  return !det.is_zero() && det.degree() == 0;
}

std::vector<long> column_degrees(const PolyMatrix& p) {
  std::vector<long> deg(p.cols(), -1);
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) deg[j] = std::max(deg[j], p(i, j).degree());
  return deg;
}

ConstMatrix leading_column_matrix(const PolyMatrix& p) {
  const auto deg = column_degrees(p);
  ConstMatrix lead(p.rows(), p.cols());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (deg[j] >= 0) lead(i, j) = p(i, j).coeff(static_cast<std::size_t>(deg[j]));
  return lead;
}

namespace {

void row_axpy(PolyMatrix& m, std::size_t target, const Poly& factor, std::size_t source) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m(source, j).is_zero()) m(target, j) -= factor * m(source, j);
}

}  // namespace

Gcrd hermite_gcrd(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix s = vstack(a, b);
  const std::size_t n = s.rows();
  const std::size_t k = s.cols();
  PolyMatrix u = PolyMatrix::identity(n);
  std::size_t row = 0;
  for (std::size_t c = 0; c < k; ++c) {
    while (true) {
      std::size_t best = n;
      for (std::size_t i = row; i < n; ++i) {
        if (s(i, c).is_zero()) continue;
        if (best == n || s(i, c).degree() < s(best, c).degree()) best = i;
      }
      if (best == n) throw PreconditionError("stacked polynomial matrix is not of full column rank");
      s.swap_rows(row, best);
      u.swap_rows(row, best);
      bool cleared = true;
      for (std::size_t i = row + 1; i < n; ++i) {
        if (s(i, c).is_zero()) continue;
        const Poly q = divmod(s(i, c), s(row, c)).first;
        row_axpy(s, i, q, row);
        row_axpy(u, i, q, row);
        if (!s(i, c).is_zero()) cleared = false;
      }
      if (cleared) break;
    }
    const Rational inv = 1 / s(row, c).leading();
    for (std::size_t j = 0; j < k; ++j) s(row, j) *= inv;
    for (std::size_t j = 0; j < n; ++j) u(row, j) *= inv;
    for (std::size_t i = 0; i < row; ++i) {
      if (s(i, c).is_zero()) continue;
      const Poly q = divmod(s(i, c), s(row, c)).first;
      if (q.is_zero()) continue;
      row_axpy(s, i, q, row);
      row_axpy(u, i, q, row);
    }
    ++row;
  }
  return {s.row_block(0, k), std::move(u)};
}

PolyColumnReduction column_reduce_poly(const PolyMatrix& p) {
  if (!p.is_square()) throw PreconditionError("column reduction requires a square matrix");
  if (poly_determinant(p).is_zero()) throw PreconditionError("column reduction requires a nonsingular matrix");
  const std::size_t k = p.cols();
  PolyColumnReduction out{p, PolyMatrix::identity(k)};
  while (true) {
    const auto deg = column_degrees(out.P);
    const ConstMatrix ker = nullspace(leading_column_matrix(out.P));
    if (ker.cols() == 0) break;
    const auto alpha = ker.column(0);
    std::size_t j = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (alpha[i] == 0) continue;
      if (j == k || deg[i] >= deg[j]) j = i;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (i == j || alpha[i] == 0) continue;
      const Poly c = Poly::monomial(alpha[i] / alpha[j], static_cast<std::size_t>(deg[j] - deg[i]));
      for (std::size_t r = 0; r < k; ++r) {
        out.P(r, j) += c * out.P(r, i);
        out.V(r, j) += c * out.V(r, i);
      }
    }
  }
  return out;
}

namespace {

Poly lcm(const Poly& a, const Poly& b) { return divmod(a * b, gcd(a, b)).first.monic(); }

}  // namespace

CoprimeFraction right_coprime_fraction(const TransferMatrix& v) {
  const std::size_t m = v.cols();
  Poly d(1);
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t j = 0; j < m; ++j) d = lcm(d, v(i, j).den());
  const PolyMatrix a_bar = v.map([&d](const RatFun& r) { return divmod(d, r.den()).first * r.num(); });
  PolyMatrix d_eye(m, m);
  for (std::size_t i = 0; i < m; ++i) d_eye(i, i) = d;
  const Gcrd g = hermite_gcrd(a_bar, d_eye);
  const TransferMatrix r_inv = invert(to_transfer(g.R));
  const PolyMatrix n = to_poly_matrix(to_transfer(a_bar) * r_inv);
  const PolyMatrix p = to_poly_matrix(to_transfer(d_eye) * r_inv);
  const PolyColumnReduction red = column_reduce_poly(p);
  CoprimeFraction out;
  out.N = n * red.V;
  out.P = red.P;
  out.column_degrees = column_degrees(out.P);
  return out;
}

ReachabilityIndices reachability_indices(const TransferMatrix& v) {
  const CoprimeFraction cf = right_coprime_fraction(v);
  ReachabilityIndices out;
  out.sigma = cf.column_degrees;
  std::sort(out.sigma.begin(), out.sigma.end(), std::greater<>());
  out.n = poly_determinant(cf.P).degree();
  if (std::accumulate(out.sigma.begin(), out.sigma.end(), 0L) != out.n)
    throw InternalError("column degrees of a reduced denominator do not sum to its determinant degree");
  return out;
}

PolyMatrix polynomial_kernel_module(const TransferMatrix& f) {
  if (function_rank(f) < f.cols()) throw PreconditionError("polynomial kernel module requires an injective map");
  return right_coprime_fraction(f).P;
}

}  // namespace latkern

#include "latkern/proper_bases.hpp"

#include <algorithm>
#include <numeric>

#include "latkern/errors.hpp"
#include "latkern/linalg.hpp"
#include "latkern/transfer_matrix.hpp"

namespace latkern {

ConstMatrix leading_matrix(const TransferMatrix& cols) {
  ConstMatrix lead(cols.rows(), cols.cols());
  for (std::size_t j = 0; j < cols.cols(); ++j) lead.set_column(j, leading_vector(cols.column(j)));
  return lead;
}

std::vector<long> column_orders(const TransferMatrix& cols) {
  std::vector<long> out(cols.cols());
  for (std::size_t j = 0; j < cols.cols(); ++j) {
    const ExtOrder o = vector_order(cols.column(j));
    if (o.is_infinite()) throw PreconditionError("column " + std::to_string(j) + " is zero");
    out[j] = o.value();
  }
  return out;
}

IndependenceCheck proper_independence_check(const TransferMatrix& cols) {
  IndependenceCheck out;
  out.leading_matrix = leading_matrix(cols);
  for (std::size_t j = 0; j < cols.cols(); ++j)
    if (vector_order(cols.column(j)).is_infinite()) return out;
  out.independent = rank(out.leading_matrix) == cols.cols();
  return out;
}

ProperBasis make_proper_basis(const TransferMatrix& cols) {
  auto check = proper_independence_check(cols);
  if (!check.independent) throw PreconditionError("columns are not properly independent");
  ProperBasis b;
  b.columns = cols;
  b.orders = column_orders(cols);
  b.leading_matrix = std::move(check.leading_matrix);
  b.ordered = std::is_sorted(b.orders.begin(), b.orders.end());
  return b;
}

namespace {

// Stable permutation putting orders in nondecreasing order.
std::vector<std::size_t> order_permutation(const std::vector<long>& orders) {
  std::vector<std::size_t> perm(orders.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return orders[a] < orders[b]; });
  return perm;
}

TransferMatrix permute_columns(const TransferMatrix& m, const std::vector<std::size_t>& perm) {
  TransferMatrix out(m.rows(), m.cols());
  for (std::size_t j = 0; j < perm.size(); ++j) out.set_column(j, m.column(perm[j]));
  return out;
}

}  // namespace

ColumnReduction column_reduce_at_infinity(const TransferMatrix& m) {
  const std::size_t k = m.cols();
  if (function_rank(m) < k)
    throw PreconditionError("matrix is not of full column rank; drop dependent columns first");
  TransferMatrix cols = m;
  TransferMatrix w = TransferMatrix::identity(k);
  while (true) {
    const auto orders = column_orders(cols);
    const ConstMatrix lead = leading_matrix(cols);
    const ConstMatrix ker = nullspace(lead);
    if (ker.cols() == 0) break;
    const auto alpha = ker.column(0);
    std::size_t j = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (alpha[i] == 0) continue;
      if (j == k || orders[i] >= orders[j]) j = i;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (i == j || alpha[i] == 0) continue;
      const RatFun c = RatFun(Rational(alpha[i] / alpha[j])) * RatFun::z_power(orders[i] - orders[j]);
      for (std::size_t r = 0; r < cols.rows(); ++r) cols(r, j) += c * cols(r, i);
      for (std::size_t r = 0; r < k; ++r) w(r, j) += c * w(r, i);
    }
  }
  const auto perm = order_permutation(column_orders(cols));
  ColumnReduction out;
  out.basis = make_proper_basis(permute_columns(cols, perm));
  out.W = permute_columns(w, perm);
  return out;
}

ConstMatrix extend_to_proper_basis(const ProperBasis& partial, std::size_t n) {
  if (partial.columns.cols() > 0 && partial.leading_matrix.rows() != n)
    throw PreconditionError("ambient dimension does not match the partial basis");
  const std::size_t k = partial.columns.cols();
  if (k > 0 && rank(partial.leading_matrix) != k) throw PreconditionError("partial basis is not proper");
  ConstMatrix acc = k > 0 ? partial.leading_matrix : ConstMatrix(n, 0);
  std::size_t r = k;
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < n && r < n; ++i) {
    ConstMatrix e(n, 1);
    e(i, 0) = 1;
    ConstMatrix trial = hstack(acc, e);
    if (rank(trial) > r) {
      acc = std::move(trial);
      ++r;
      picked.push_back(i);
    }
  }
  ConstMatrix out(n, picked.size());
  for (std::size_t c = 0; c < picked.size(); ++c) out(picked[c], c) = 1;
  return out;
}

TransferMatrix SmithAtInfinity::delta() const {
  TransferMatrix d(B1.rows(), B2.rows());
  for (std::size_t i = 0; i < sigma.size(); ++i) d(i, i) = RatFun::z_power(-sigma[i]);
  return d;
}

SmithAtInfinity smith_at_infinity(const TransferMatrix& f) {
  if (f.is_zero()) throw PreconditionError("Smith form at infinity of the zero matrix is undefined");
  const std::size_t p = f.rows();
  const std::size_t m = f.cols();
  TransferMatrix a = f;
  SmithAtInfinity s;
  s.B1 = TransferMatrix::identity(p);
  s.B2 = TransferMatrix::identity(m);
  // invariant: f = B1 * a * B2
  for (std::size_t t = 0; t < std::min(p, m); ++t) {
    std::size_t pi = p;
    std::size_t pj = m;
    ExtOrder best = ExtOrder::infinity();
    for (std::size_t i = t; i < p; ++i)
      for (std::size_t j = t; j < m; ++j) {
        const ExtOrder o = ord(a(i, j));
        if (o < best) {
          best = o;
          pi = i;
          pj = j;
        }
      }
    if (best.is_infinite()) break;
    a.swap_rows(t, pi);
    s.B1.swap_cols(t, pi);
    a.swap_cols(t, pj);
    s.B2.swap_rows(t, pj);

    const RatFun piv_inv = a(t, t).inverse();
    for (std::size_t i = t + 1; i < p; ++i) {
      if (a(i, t).is_zero()) continue;
      const RatFun c = a(i, t) * piv_inv;
      for (std::size_t j = t; j < m; ++j)
        if (!a(t, j).is_zero()) a(i, j) -= c * a(t, j);
      for (std::size_t r = 0; r < p; ++r)
        if (!s.B1(r, i).is_zero()) s.B1(r, t) += c * s.B1(r, i);
    }
    for (std::size_t j = t + 1; j < m; ++j) {
      if (a(t, j).is_zero()) continue;
      const RatFun c = a(t, j) * piv_inv;
      a(t, j) = RatFun();
      for (std::size_t r = 0; r < m; ++r)
        if (!s.B2(j, r).is_zero()) s.B2(t, r) += c * s.B2(j, r);
    }
    const long sigma = best.value();
    const RatFun unit = a(t, t) * RatFun::z_power(sigma);
    a(t, t) = RatFun::z_power(-sigma);
    for (std::size_t r = 0; r < p; ++r) s.B1(r, t) *= unit;
    s.sigma.push_back(sigma);
  }
  return s;
}

std::size_t OrderChain::mu_at(long j) const {
  if (mu.empty() || j < k_lower) return 0;
  if (j >= k_upper) return rank;
  return mu[static_cast<std::size_t>(j - k_lower)];
}

ConstMatrix OrderChain::subspace_at(long j) const {
  if (subspaces.empty()) return {};
  if (j < k_lower) return ConstMatrix(subspaces.front().rows(), 0);
  if (j >= k_upper) return subspaces.back();
  return subspaces[static_cast<std::size_t>(j - k_lower)];
}

OrderChain order_chain(const TransferMatrix& d) {
  const ProperBasis b = make_proper_basis(d);
  OrderChain chain;
  chain.rank = d.cols();
  if (d.cols() == 0) return chain;
  chain.k_lower = *std::min_element(b.orders.begin(), b.orders.end());
  chain.k_upper = *std::max_element(b.orders.begin(), b.orders.end());
  const auto perm = order_permutation(b.orders);
  for (long j = chain.k_lower; j <= chain.k_upper; ++j) {
    std::vector<std::size_t> picked;
    for (auto c : perm)
      if (b.orders[c] <= j) picked.push_back(c);
    ConstMatrix basis(d.rows(), picked.size());
    for (std::size_t c = 0; c < picked.size(); ++c) basis.set_column(c, b.leading_matrix.column(picked[c]));
    chain.mu.push_back(picked.size());
    chain.subspaces.push_back(std::move(basis));
  }
  return chain;
}

}  // namespace latkern

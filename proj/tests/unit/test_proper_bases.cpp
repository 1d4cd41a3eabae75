#include <gtest/gtest.h>

#include "latkern/latkern.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace latkern;
using latkern::testing::Gen;

namespace {

const RatFun z = RatFun(Poly::z());
RatFun zp(long k) { return RatFun::z_power(k); }
RatFun c(long a, long b = 1) { return RatFun(Rational(a, b)); }

TransferMatrix cols(std::initializer_list<RatVector> vs) {
  const std::size_t n = vs.begin()->size();
  TransferMatrix m(n, vs.size());
  std::size_t j = 0;
  for (const auto& v : vs) m.set_column(j++, v);
  return m;
}

// Random full-column-rank n x k matrix with entries of order in [-2, 2].
TransferMatrix random_full_rank(Gen& g, std::size_t n, std::size_t k) {
  while (true) {
    TransferMatrix m(n, k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (g.coin(0.8)) m(i, j) = RatFun::z_power(g.integer(-2, 2)) * g.proper(2);
    // force some leading-coefficient collisions
    if (k >= 2 && g.coin(0.5)) {
      for (std::size_t i = 0; i < n; ++i) m(i, 1) = m(i, 0) + RatFun::z_power(-3) * g.proper(1);
    }
    if (function_rank(m) == k) return m;
  }
}

void expect_predictable_order(Gen& g, const ProperBasis& b, int trials) {
  const std::size_t k = b.columns.cols();
  for (int t = 0; t < trials; ++t) {
    RatVector sum(b.columns.rows());
    ExtOrder expected = ExtOrder::infinity();
    for (std::size_t i = 0; i < k; ++i) {
      const RatFun a = g.coin(0.85) ? g.ratfun(3) : RatFun();
      if (a.is_zero()) continue;
      expected = std::min(expected, ord(a) + ExtOrder(b.orders[i]));
      for (std::size_t r = 0; r < sum.size(); ++r) sum[r] += a * b.columns(r, i);
    }
    EXPECT_EQ(vector_order(sum), expected);
  }
}

}  // namespace

TEST(ProperIndependence, Examples) {
  auto r = proper_independence_check(cols({{c(1), zp(-1)}, {zp(-1), c(1)}}));
  EXPECT_TRUE(r.independent);
  EXPECT_EQ(r.leading_matrix, ConstMatrix::identity(2));
  EXPECT_FALSE(proper_independence_check(cols({{c(1), c(0)}, {c(1), zp(-1)}})).independent);
  EXPECT_FALSE(proper_independence_check(cols({{c(0), c(0)}})).independent);
}

TEST(ColumnReduce, SpecExample) {
  const auto m = cols({{c(1), c(0)}, {c(1), zp(-1)}});
  const auto red = column_reduce_at_infinity(m);
  EXPECT_EQ(red.basis.columns, cols({{c(1), c(0)}, {c(0), zp(-1)}}));
  EXPECT_EQ(red.W, (TransferMatrix{{c(1), c(-1)}, {c(0), c(1)}}));
  EXPECT_TRUE(is_bicausal(red.W));
  EXPECT_EQ(m * red.W, red.basis.columns);
  EXPECT_TRUE(red.basis.ordered);
}

TEST(ColumnReduce, AlreadyProperIsPermuted) {
  const TransferMatrix m{{z, c(0)}, {c(0), zp(3)}};
  const auto red = column_reduce_at_infinity(m);
  EXPECT_EQ(red.basis.orders, (std::vector<long>{-3, -1}));
  EXPECT_EQ(red.W, (TransferMatrix{{c(0), c(1)}, {c(1), c(0)}}));
}

TEST(ColumnReduce, DependentLeads) {
  Gen g(31);
  const auto m = cols({{zp(-1), zp(-1)}, {zp(-1), c(0)}});
  const auto red = column_reduce_at_infinity(m);
  EXPECT_TRUE(proper_independence_check(red.basis.columns).independent);
  EXPECT_TRUE(is_bicausal(red.W));
  EXPECT_EQ(m * red.W, red.basis.columns);
  expect_predictable_order(g, red.basis, 20);
}

TEST(ColumnReduce, RankDeficientRejected) {
  EXPECT_THROW(column_reduce_at_infinity(cols({{c(1), z}, {c(2), c(2) * z}})), PreconditionError);
}

TEST(ExtendProper, Examples) {
  const auto b = make_proper_basis(cols({{zp(-1), zp(-2)}}));
  EXPECT_EQ(extend_to_proper_basis(b, 2), (ConstMatrix{{0}, {1}}));
  const auto full = make_proper_basis(TransferMatrix::identity(2));
  EXPECT_EQ(extend_to_proper_basis(full, 2).cols(), 0U);
  EXPECT_EQ(extend_to_proper_basis(ProperBasis{}, 2), ConstMatrix::identity(2));
}

TEST(Smith, Examples) {
  const TransferMatrix d{{zp(-1), c(0)}, {c(0), zp(-3)}};
  auto s = smith_at_infinity(d);
  EXPECT_EQ(s.sigma, (std::vector<long>{1, 3}));
  EXPECT_EQ(s.B1, TransferMatrix::identity(2));
  EXPECT_EQ(s.B2, TransferMatrix::identity(2));

  const TransferMatrix t{{zp(-1), zp(-2)}, {c(0), zp(-3)}};
  s = smith_at_infinity(t);
  EXPECT_EQ(s.sigma, (std::vector<long>{1, 3}));
  EXPECT_EQ(s.B1 * s.delta() * s.B2, t);

  const TransferMatrix ones{{zp(-1), zp(-1)}, {zp(-1), zp(-1)}};
  s = smith_at_infinity(ones);
  EXPECT_EQ(s.sigma, (std::vector<long>{1}));
  EXPECT_EQ(s.delta(), (TransferMatrix{{zp(-1), c(0)}, {c(0), c(0)}}));
  EXPECT_EQ(s.B1 * s.delta() * s.B2, ones);
  EXPECT_THROW(smith_at_infinity(TransferMatrix(2, 2)), PreconditionError);
}

TEST(OrderChain, Examples) {
  auto ch = order_chain(TransferMatrix{{z, c(0)}, {c(0), zp(3)}});
  EXPECT_EQ(ch.k_lower, -3);
  EXPECT_EQ(ch.k_upper, -1);
  EXPECT_EQ(ch.mu, (std::vector<std::size_t>{1, 1, 2}));
  EXPECT_EQ(ch.subspace_at(-3), (ConstMatrix{{0}, {1}}));
  EXPECT_EQ(ch.mu_at(-4), 0U);
  EXPECT_EQ(ch.mu_at(5), 2U);

  ch = order_chain(z * TransferMatrix::identity(2));
  EXPECT_EQ(ch.k_lower, -1);
  EXPECT_EQ(ch.k_upper, -1);
  EXPECT_EQ(ch.mu, (std::vector<std::size_t>{2}));

  ch = order_chain(cols({{c(1), c(0)}, {c(0), zp(-1)}}));
  EXPECT_EQ(ch.subspace_at(0), (ConstMatrix{{1}, {0}}));
  EXPECT_EQ(ch.mu_at(1), 2U);
  EXPECT_THROW(order_chain(cols({{c(1), c(0)}, {c(1), zp(-1)}})), PreconditionError);
}

TEST(ProperProperties, PredictableOrderAndDimension) {
  Gen g(32);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const std::size_t k = static_cast<std::size_t>(g.integer(1, static_cast<long>(n)));
    const auto m = random_full_rank(g, n, k);
    const auto red = column_reduce_at_infinity(m);
    EXPECT_TRUE(is_bicausal(red.W));
    EXPECT_EQ(m * red.W, red.basis.columns);
    EXPECT_TRUE(std::is_sorted(red.basis.orders.begin(), red.basis.orders.end()));
    EXPECT_EQ(function_rank(red.basis.columns), rank(red.basis.leading_matrix));
    expect_predictable_order(g, red.basis, 30);
  }
}

TEST(ProperProperties, ProperDirectSumOrders) {
  Gen g(33);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3;
    const auto red = column_reduce_at_infinity(random_full_rank(g, n, static_cast<std::size_t>(g.integer(1, 2))));
    const ConstMatrix comp = extend_to_proper_basis(red.basis, n);
    EXPECT_EQ(rank(hstack(red.basis.leading_matrix, comp)), n);
    for (int k = 0; k < 10; ++k) {
      RatVector s1(n), s2(n);
      for (std::size_t j = 0; j < red.basis.columns.cols(); ++j) {
        const RatFun a = g.ratfun(2);
        for (std::size_t r = 0; r < n; ++r) s1[r] += a * red.basis.columns(r, j);
      }
      for (std::size_t j = 0; j < comp.cols(); ++j) {
        const RatFun a = g.ratfun(2);
        for (std::size_t r = 0; r < n; ++r) s2[r] += a * RatFun(comp(r, j));
      }
      RatVector sum(n);
      for (std::size_t r = 0; r < n; ++r) sum[r] = s1[r] + s2[r];
      EXPECT_EQ(vector_order(sum), std::min(vector_order(s1), vector_order(s2)));
    }
  }
}

TEST(ProperProperties, SmithMatchesMinorOracle) {
  Gen g(34);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = static_cast<std::size_t>(g.integer(1, 3));
    const auto m = static_cast<std::size_t>(g.integer(1, 3));
    const auto f = g.matrix(p, m, 3);
    if (f.is_zero()) continue;
    const auto s = smith_at_infinity(f);
    EXPECT_EQ(s.B1 * s.delta() * s.B2, f);
    EXPECT_TRUE(is_bicausal(s.B1));
    EXPECT_TRUE(is_bicausal(s.B2));
    EXPECT_TRUE(std::is_sorted(s.sigma.begin(), s.sigma.end()));
    EXPECT_EQ(s.sigma.size(), function_rank(f));
    long partial = 0;
    for (std::size_t k = 1; k <= s.sigma.size(); ++k) {
      partial += s.sigma[k - 1];
      EXPECT_EQ(latkern::testing::min_minor_order(f, k), partial);
    }
  }
}

TEST(ProperProperties, OrderChainNested) {
  Gen g(35);
  for (int trial = 0; trial < 20; ++trial) {
    const auto red = column_reduce_at_infinity(random_full_rank(g, 3, 3));
    const auto ch = order_chain(red.basis.columns);
    EXPECT_TRUE(std::is_sorted(ch.mu.begin(), ch.mu.end()));
    EXPECT_EQ(ch.mu.back(), 3U);
    for (long j = ch.k_lower; j < ch.k_upper; ++j) {
      const auto a = ch.subspace_at(j), b = ch.subspace_at(j + 1);
      EXPECT_EQ(rank(hstack(a, b)), rank(b));
    }
  }
}

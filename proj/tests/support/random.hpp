#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "latkern/latkern.hpp"

namespace latkern::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational rational(long bound = 5) {
    Rational q(integer(-bound, bound), integer(1, 3));
    q.canonicalize();
    return q;
  }
  Rational nonzero_rational(long bound = 5) {
    Rational q;
    do q = rational(bound);
    while (q == 0);
    return q;
  }

  Poly poly(long max_degree) {
    std::vector<Rational> c(static_cast<std::size_t>(integer(0, max_degree) + 1));
    for (auto& x : c) x = rational();
    return Poly(std::move(c));
  }
  Poly poly_exact(long degree) {
    std::vector<Rational> c(static_cast<std::size_t>(degree + 1));
    for (auto& x : c) x = rational();
    c.back() = nonzero_rational();
    return Poly(std::move(c));
  }
  Poly monic(long degree) {
    Poly p = poly_exact(degree);
    return p.monic();
  }

  RatFun ratfun(long max_degree) {
    Poly den;
    do den = poly(max_degree);
    while (den.is_zero());
    return RatFun(poly(max_degree), den);
  }
  RatFun nonzero_ratfun(long max_degree) {
    RatFun r;
    do r = ratfun(max_degree);
    while (r.is_zero());
    return r;
  }

  /// ord >= 1, denominator degree <= max_degree.
  RatFun strictly_proper(long max_degree) {
    const long dd = integer(1, std::max(1L, max_degree));
    const Poly den = monic(dd);
    Poly num = poly(dd - 1);
    return RatFun(num, den);
  }
  RatFun proper(long max_degree) { return RatFun(rational()) + strictly_proper(max_degree); }

  TransferMatrix matrix(std::size_t r, std::size_t c, long max_degree) {
    TransferMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = coin(0.8) ? ratfun(max_degree) : RatFun();
    return m;
  }

  ConstMatrix invertible_constant(std::size_t n) {
    while (true) {
      ConstMatrix a(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = rational(3);
      if (rank(a) == n) return a;
    }
  }

  /// Invertible constant term plus strictly proper entries.
  TransferMatrix bicausal(std::size_t n, long max_degree) {
    TransferMatrix b = to_transfer(invertible_constant(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (coin(0.6)) b(i, j) += strictly_proper(max_degree);
    return b;
  }

  /// B1 diag(z^-s) B2 with s_i in [1, max_sigma]; latency indices s_i - 1.
  TransferMatrix injective_strictly_causal(std::size_t p, std::size_t m, long max_sigma, long max_degree,
                                           std::vector<long>* sigma_out = nullptr) {
    std::vector<long> s(m);
    for (auto& x : s) x = integer(1, max_sigma);
    TransferMatrix delta(p, m);
    for (std::size_t i = 0; i < m; ++i) delta(i, i) = RatFun::z_power(-s[i]);
    if (sigma_out) *sigma_out = s;
    return bicausal(p, max_degree) * delta * bicausal(m, max_degree);
  }

  ConstMatrix constant(std::size_t r, std::size_t c, long bound = 3) {
    ConstMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = rational(bound);
    return a;
  }

  RatVector vector(std::size_t n, long max_degree) {
    RatVector v(n);
    for (auto& x : v) x = coin(0.85) ? ratfun(max_degree) : RatFun();
    return v;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace latkern::testing

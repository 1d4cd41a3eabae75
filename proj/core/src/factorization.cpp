#include "latkern/factorization.hpp"

#include <algorithm>

#include "latkern/errors.hpp"
#include "latkern/linalg.hpp"
#include "latkern/proper_bases.hpp"
#include "latkern/transfer_matrix.hpp"

namespace latkern {

FactorOutcome causal_factor(const TransferMatrix& f, const TransferMatrix& h) {
  if (h.cols() != f.cols())
    throw PreconditionError("F and H have different input dimensions: " + f.shape() + " vs " + h.shape());
  if (function_rank(f) < f.cols()) throw PreconditionError("causal factorization requires F of full column rank");

  FactorOutcome out;
  const LatencyKernel k = latency_kernel(f);
  for (std::size_t j = 0; j < k.D.cols(); ++j) {
    const RatVector d = k.D.column(j);
    const RatVector hd = apply(h, d);
    if (vector_order(hd) >= ExtOrder(0)) continue;
    const long shift_by = vector_order(apply(f, d)).value();
    RatVector u = d;
    const RatFun zk = RatFun::z_power(shift_by);
    for (auto& x : u) x *= zk;
    out.witness = std::move(u);
    return out;
  }

  const std::size_t p = f.rows();
  const ColumnReduction red = column_reduce_at_infinity(f);
  const ConstMatrix r = extend_to_proper_basis(red.basis, p);
  const TransferMatrix x = hstack(red.basis.columns, to_transfer(r));
  const TransferMatrix y = hstack(h * red.W, TransferMatrix(h.rows(), r.cols()));
  out.G = y * invert(x);
  if (!(out.G * f == h) || !is_causal(out.G)) throw InternalError("causal factor certificate failed");
  out.yes = true;
  return out;
}

EquivalenceOutcome bicausal_postequivalence(const TransferMatrix& f1, const TransferMatrix& f2) {
  return compensation_equivalence(f1, f2, EquivalenceMode::post);
}

EquivalenceOutcome bicausal_preequivalence(const TransferMatrix& f1, const TransferMatrix& f2) {
  return compensation_equivalence(f1, f2, EquivalenceMode::pre);
}

namespace {

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  return divmod(a * b, gcd(a, b)).first.monic();
}

}  // namespace

std::optional<ConstMatrix> static_factor(const TransferMatrix& f, const TransferMatrix& h) {
  if (h.cols() != f.cols())
    throw PreconditionError("F and H have different input dimensions: " + f.shape() + " vs " + h.shape());
  const std::size_t p = f.rows();
  const std::size_t q = h.rows();
  const std::size_t m = f.cols();
  if (h.is_zero()) return ConstMatrix(q, p);
  if (f.is_zero()) return std::nullopt;

  // G F - H has entries P/Q with Q | lcm of all denominators; a nonzero
  // such entry has order <= deg Q, so matching orders up to deg Q suffices.
  Poly den(1);
  for (const auto* mat : {&f, &h})
    for (std::size_t i = 0; i < mat->rows(); ++i)
      for (std::size_t j = 0; j < mat->cols(); ++j) den = lcm(den, (*mat)(i, j).den());
  const long kmin = std::min(map_order(f), map_order(h)).value();
  const long kmax = std::max(kmin, den.degree());
  const std::size_t window = static_cast<std::size_t>(kmax - kmin + 1);

  // Row i of G: g F_t = H_t(i, :) for every t; transposed, F_t^T g^T = H_t(i, :)^T.
  ConstMatrix lhs(window * m, p);
  ConstMatrix rhs(window * m, q);
  for (std::size_t w = 0; w < window; ++w) {
    const long t = kmin + static_cast<long>(w);
    const ConstMatrix ft = markov_coefficient(f, t);
    const ConstMatrix ht = markov_coefficient(h, t);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < p; ++k) lhs(w * m + j, k) = ft(k, j);
      for (std::size_t i = 0; i < q; ++i) rhs(w * m + j, i) = ht(i, j);
    }
  }
  const auto gt = solve(lhs, rhs);
  if (!gt) return std::nullopt;
  ConstMatrix g = gt->transpose();
  if (!(to_transfer(g) * f == h)) throw InternalError("static factor passed the coefficient window but not exactly");
  return g;
}

}  // namespace latkern

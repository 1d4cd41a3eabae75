#include "latkern/transfer_matrix.hpp"

#include <algorithm>

#include "latkern/linalg.hpp"

namespace latkern {

ConstMatrix markov_coefficient(const TransferMatrix& f, long k) {
  return f.map([k](const RatFun& r) { return coefficient(r, k); });
}

ExtOrder map_order(const TransferMatrix& f) {
  ExtOrder best = ExtOrder::infinity();
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) best = std::min(best, ord(f(i, j)));
  return best;
}

ExtOrder vector_order(const RatVector& v) {
  ExtOrder best = ExtOrder::infinity();
  for (const auto& x : v) best = std::min(best, ord(x));
  return best;
}

std::vector<Rational> leading_vector(const RatVector& v) {
  std::vector<Rational> lead(v.size(), Rational(0));
  const ExtOrder o = vector_order(v);
  if (o.is_infinite()) return lead;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (ord(v[i]) == o) lead[i] = leading_coeff(v[i]);
  return lead;
}

CausalityReport classify(const TransferMatrix& f) {
  CausalityReport rep;
  rep.map_order = map_order(f);
  rep.causal = rep.map_order >= ExtOrder(0);
  rep.strictly_causal = rep.map_order >= ExtOrder(1);
  if (rep.map_order.is_finite()) {
    const long k0 = rep.map_order.value();
    rep.order_consistent = rank(markov_coefficient(f, k0)) == f.cols();
    rep.instantaneous = rep.order_consistent && k0 == 0;
    rep.nonlatent = rep.order_consistent && k0 == 1;
  }
  if (f.is_square() && rep.causal && !f.empty()) {
    rep.bicausal = rank(markov_coefficient(f, 0)) == f.rows();
  }
  return rep;
}

bool is_causal(const TransferMatrix& f) { return map_order(f) >= ExtOrder(0); }

bool is_strictly_causal(const TransferMatrix& f) { return map_order(f) >= ExtOrder(1); }

bool is_bicausal(const TransferMatrix& f) { return classify(f).bicausal; }

bool is_polynomial(const TransferMatrix& f) {
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j)
      if (!f(i, j).is_polynomial()) return false;
  return true;
}

TransferMatrix invert(const TransferMatrix& f) {
  if (!f.is_square()) throw PreconditionError("cannot invert a non-square " + f.shape() + " matrix");
  auto inv = inverse(f);
  if (!inv) {
    const TransferMatrix ker = nullspace(f);
    throw SingularMatrixError("matrix is singular over the rational function field", ker.column(0));
  }
  return *inv;
}

StaticStrictSplit static_strict_split(const TransferMatrix& f) {
  if (!is_causal(f))
    throw PreconditionError("static/strictly-causal split requires a causal matrix (order " +
                            map_order(f).to_string() + ")");
  StaticStrictSplit s;
  s.constant = markov_coefficient(f, 0);
  s.strict = f - to_transfer(s.constant);
  return s;
}

RatVector apply(const TransferMatrix& f, const RatVector& u) {
  if (u.size() != f.cols())
    throw PreconditionError("input length " + std::to_string(u.size()) + " does not match " +
                            std::to_string(f.cols()) + " matrix columns");
  return (f * TransferMatrix::column_vector(u)).column(0);
}

TransposeRank transpose_rank(const TransferMatrix& f) { return {f.transpose(), function_rank(f)}; }

std::size_t function_rank(const TransferMatrix& f) { return rank(f); }

TransferMatrix shift(const TransferMatrix& f, long k) { return RatFun::z_power(k) * f; }

TransferMatrix z_diagonal(const std::vector<long>& powers) {
  TransferMatrix d(powers.size(), powers.size());
  for (std::size_t i = 0; i < powers.size(); ++i) d(i, i) = RatFun::z_power(powers[i]);
  return d;
}

}  // namespace latkern

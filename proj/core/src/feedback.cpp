#include "latkern/feedback.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "latkern/errors.hpp"
#include "latkern/factorization.hpp"
#include "latkern/latency.hpp"
#include "latkern/linalg.hpp"
#include "latkern/polynomial_modules.hpp"
#include "latkern/transfer_matrix.hpp"

namespace latkern {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

void require_injective_strictly_causal(const TransferMatrix& f) {
  require(is_strictly_causal(f), "f must be strictly causal (order " + map_order(f).to_string() + ")");
  require(function_rank(f) == f.cols(), "f must be injective");
}

void require_bicausal(const TransferMatrix& l, std::size_t m) {
  require(l.rows() == m && l.cols() == m, "precompensator must be " + std::to_string(m) + "x" + std::to_string(m));
  require(is_bicausal(l), "precompensator must be bicausal");
}

}  // namespace

ClosedLoopForms closed_loop_forms(const TransferMatrix& f, const TransferMatrix& g, const TransferMatrix& l_pr,
                                  const TransferMatrix& l_po) {
  const std::size_t p = f.rows();
  const std::size_t m = f.cols();
  require(g.rows() == m && g.cols() == p, "g must be " + std::to_string(m) + "x" + std::to_string(p));
  require(is_strictly_causal(f), "f must be strictly causal");
  require(is_causal(g), "g must be causal");
  require(l_pr.rows() == m && l_pr.cols() == m && is_bicausal(l_pr), "l_pr must be bicausal and " +
                                                                         std::to_string(m) + "x" + std::to_string(m));
  require(l_po.rows() == p && l_po.cols() == p && is_bicausal(l_po), "l_po must be bicausal and " +
                                                                         std::to_string(p) + "x" + std::to_string(p));
  const TransferMatrix in_loop = TransferMatrix::identity(m) + g * f;
  const TransferMatrix out_loop = TransferMatrix::identity(p) + f * g;
  if (!is_bicausal(in_loop) || !is_bicausal(out_loop)) throw InternalError("feedback loop is not well posed");
  return {l_po * f * invert(in_loop) * l_pr, l_po * invert(out_loop) * f * l_pr};
}

TransferMatrix closed_loop(const TransferMatrix& f, const TransferMatrix& g, const TransferMatrix& l_pr,
                           const TransferMatrix& l_po) {
  ClosedLoopForms forms = closed_loop_forms(f, g, l_pr, l_po);
  if (!(forms.series == forms.parallel)) throw InternalError("series and parallel closed-loop forms differ");
  return std::move(forms.series);
}

StaticFeedback static_feedback_realizable(const TransferMatrix& f, const TransferMatrix& l) {
  require_injective_strictly_causal(f);
  require_bicausal(l, f.cols());
  const TransferMatrix l_inv = invert(l);
  const StaticStrictSplit split = static_strict_split(l_inv);
  StaticFeedback out;
  out.L = split.constant;
  FactorOutcome fac = causal_factor(f, split.strict);
  if (!fac.yes) {
    out.witness = std::move(fac.witness);
    return out;
  }
  out.realizable = true;
  out.g = std::move(fac.G);
  if (!(to_transfer(out.L) + out.g * f == l_inv)) throw InternalError("static feedback identity failed");
  return out;
}

FeedbackRealization vg_representation(const TransferMatrix& f, const TransferMatrix& l) {
  require_injective_strictly_causal(f);
  const std::size_t m = f.cols();
  require_bicausal(l, m);
  const LatencyKernel k = latency_kernel(f);
  if (!k.D_poly) throw InternalError("missing strictly polynomial kernel basis");
  const TransferMatrix& d = *k.D_poly;
  const TransferMatrix l_inv = invert(l);
  const TransferMatrix n = (l_inv * d).map([](const RatFun& r) { return causal_part(r); });
  const TransferMatrix phi = n * invert(d);
  const FactorOutcome fac = causal_factor(f, phi);
  if (!fac.yes) throw InternalError("phi does not factor causally through f");

  FeedbackRealization out;
  out.v = invert(l_inv - phi);
  if (!is_bicausal(out.v)) throw InternalError("remainder v is not bicausal");
  out.rho = fac.G;
  out.g = out.v * out.rho;
  const TransferMatrix loop = TransferMatrix::identity(m) + out.g * f;
  if (!(invert(loop) * out.v == l)) throw InternalError("realization identity l = (I + g f)^-1 v failed");
  out.sigma = reachability_indices(out.v).sigma;
  out.nu = k.nu;
  for (std::size_t i = 0; i < m; ++i)
    if (out.sigma[i] > out.nu[i]) throw InternalError("reachability index exceeds latency index");
  return out;
}

WorstCase worst_case_precompensator(const TransferMatrix& f) {
  require_injective_strictly_causal(f);
  const std::size_t m = f.cols();
  const LatencyKernel k = latency_kernel(f);
  if (!k.D_poly) throw InternalError("missing strictly polynomial kernel basis");
  const TransferMatrix d1 = RatFun::z_power(-1) * *k.D_poly;
  const TransferMatrix d1_inv = invert(d1);
  const TransferMatrix sum = to_transfer(ConstMatrix::identity(m) - markov_coefficient(d1_inv, 0)) + d1_inv;
  WorstCase out;
  out.l = invert(sum);
  out.realization = vg_representation(f, out.l);
  const long total_sigma = std::accumulate(out.realization.sigma.begin(), out.realization.sigma.end(), 0L);
  const long total_nu = std::accumulate(k.nu.begin(), k.nu.end(), 0L);
  if (total_sigma != total_nu) throw InternalError("worst-case remainder does not reach the latency bound");
  return out;
}

TransferMatrix from_state_space(const StateSpace& s) {
  const std::size_t n = s.A.rows();
  require(s.A.is_square(), "A must be square");
  require(s.B.rows() == n, "B must have " + std::to_string(n) + " rows");
  if (s.C) require(s.C->cols() == n, "C must have " + std::to_string(n) + " columns");
  TransferMatrix zi_a = RatFun(Poly::z()) * TransferMatrix::identity(n) - to_transfer(s.A);
  TransferMatrix out = invert(zi_a) * to_transfer(s.B);
  if (s.C) out = to_transfer(*s.C) * out;
  return out;
}

namespace {

void require_state_output(const StateSpace& s) {
  if (s.C) require(*s.C == ConstMatrix::identity(s.A.rows()), "C must be the identity for an input/state map");
}

}  // namespace

NonlatencyReport is_nonlatency_check(const StateSpace& s) {
  require_state_output(s);
  const TransferMatrix f = from_state_space(s);
  NonlatencyReport rep;
  rep.injective = rank(s.B) == s.B.cols();
  if (rep.injective) {
    rep.nu = latency_kernel(f).nu;
    rep.nonlatent = std::all_of(rep.nu.begin(), rep.nu.end(), [](long v) { return v == 0; });
    if (!rep.nonlatent) throw InternalError("input/state map with injective B is latent");
    return rep;
  }
  rep.static_kernel = nullspace(s.B);
  if (!(f * to_transfer(rep.static_kernel)).is_zero()) throw InternalError("static kernel of B is not killed by f");
  return rep;
}

StaticStateFeedback static_state_feedback_test(const StateSpace& s, const TransferMatrix& l) {
  require_state_output(s);
  const TransferMatrix f = from_state_space(s);
  require(function_rank(f) == f.cols(), "(zI - A)^-1 B must be injective");
  require_bicausal(l, f.cols());
  const TransferMatrix l_inv = invert(l);
  const StaticStrictSplit split = static_strict_split(l_inv);
  const TransferMatrix p = to_transfer(polynomial_kernel_module(f));
  const TransferMatrix p_h = to_transfer(right_coprime_fraction(split.strict).P);

  StaticStateFeedback out;
  out.L = split.constant;
  out.polynomial_test = is_polynomial(l_inv * p);
  out.containment_test = is_polynomial(invert(p_h) * p);
  if (out.polynomial_test != out.containment_test)
    throw InternalError("polynomial and containment tests for static state feedback disagree");
  out.yes = out.polynomial_test;
  out.G = static_factor(f, split.strict);
  if (out.yes != out.G.has_value()) throw InternalError("static factor disagrees with the static state feedback test");
  return out;
}

}  // namespace latkern

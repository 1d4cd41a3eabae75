#include "latkern/latency.hpp"

#include <algorithm>

#include "latkern/errors.hpp"
#include "latkern/linalg.hpp"
#include "latkern/transfer_matrix.hpp"

namespace latkern {

LatencyKernel latency_kernel(const TransferMatrix& f) {
  const std::size_t m = f.cols();
  if (m == 0) throw PreconditionError("map has no inputs");
  if (function_rank(f) < m)
    throw PreconditionError("kernel not finitely generated: map is not injective (rank " +
                            std::to_string(function_rank(f)) + " < " + std::to_string(m) + ")");
  const SmithAtInfinity s = smith_at_infinity(f);
  // F u causal  <=>  diag(z^-sigma) B2 u causal
  const TransferMatrix d0 = invert(s.B2) * z_diagonal(s.sigma);
  ColumnReduction red = column_reduce_at_infinity(d0);

  LatencyKernel k;
  k.D = std::move(red.basis.columns);
  k.orders = std::move(red.basis.orders);
  for (auto it = k.orders.begin(); it != k.orders.end(); ++it) k.nu.push_back(-*it - 1);
  std::sort(k.nu.begin(), k.nu.end(), std::greater<>());
  k.chain = order_chain(k.D);
  k.strictly_causal_input = is_strictly_causal(f);
  if (k.strictly_causal_input) {
    k.D_poly = strictly_polynomial_basis(k.D);
  } else {
    try {
      k.D_poly = strictly_polynomial_basis(k.D);
    } catch (const InternalError&) {
      k.D_poly.reset();
    }
  }
  return k;
}

TransferMatrix strictly_polynomial_basis(const TransferMatrix& d) {
  TransferMatrix out = d.map([](const RatFun& r) { return RatFun(strictly_polynomial_part(r)); });
  auto inv = inverse(d);
  if (!inv) throw InternalError("generator of a latency kernel is singular");
  if (function_rank(out) < out.cols() || !is_bicausal(*inv * out))
    throw InternalError("strictly polynomial truncation does not generate the same module");
  return out;
}

std::vector<long> latency_indices(const LatencyKernel& k) { return k.nu; }

bool kernel_contains(const LatencyKernel& k, const RatVector& u) {
  const auto inv = inverse(k.D);
  if (!inv) throw InternalError("latency kernel generator is singular");
  return is_causal(*inv * TransferMatrix::column_vector(u));
}

Containment module_contains(const TransferMatrix& d1, const TransferMatrix& d2) {
  if (d1.rows() != d2.rows()) throw PreconditionError("generators act on spaces of different dimension");
  Containment c;
  c.R = invert(d1) * d2;
  ExtOrder worst = ExtOrder::infinity();
  for (std::size_t i = 0; i < c.R.rows(); ++i)
    for (std::size_t j = 0; j < c.R.cols(); ++j) {
      const ExtOrder o = ord(c.R(i, j));
      if (o < ExtOrder(0) && o < worst) {
        worst = o;
        c.witness = EntryWitness{i, j, o.value()};
      }
    }
  c.contained = !c.witness.has_value();
  c.equal = c.contained && c.R.is_square() && is_bicausal(c.R);
  return c;
}

std::string to_string(EquivalenceMode mode) {
  switch (mode) {
    case EquivalenceMode::post: return "post";
    case EquivalenceMode::pre: return "pre";
    case EquivalenceMode::two_sided: return "two-sided";
  }
  return "?";
}

EquivalenceMode parse_equivalence_mode(const std::string& text) {
  if (text == "post") return EquivalenceMode::post;
  if (text == "pre") return EquivalenceMode::pre;
  if (text == "two-sided" || text == "two_sided") return EquivalenceMode::two_sided;
  throw PreconditionError("unknown equivalence mode '" + text + "'");
}

namespace {

// Bicausal l with F2 = l F1, assuming equal latency kernels.
TransferMatrix post_compensator(const TransferMatrix& f1, const TransferMatrix& f2) {
  const std::size_t p = f1.rows();
  const ColumnReduction red = column_reduce_at_infinity(f1);
  const TransferMatrix m1 = red.basis.columns;
  const TransferMatrix f2w = f2 * red.W;
  const auto check = proper_independence_check(f2w);
  if (!check.independent || column_orders(f2w) != red.basis.orders)
    throw InternalError("equal latency kernels but the image map is not order preserving");
  const ConstMatrix r1 = extend_to_proper_basis(red.basis, p);
  const ConstMatrix r2 = extend_to_proper_basis(make_proper_basis(f2w), p);
  const TransferMatrix x = hstack(m1, to_transfer(r1));
  const TransferMatrix y = hstack(f2w, to_transfer(r2));
  TransferMatrix l = y * invert(x);
  if (!is_bicausal(l) || !(l * f1 == f2)) throw InternalError("post-compensator certificate failed");
  return l;
}

// First generator column of `from` that `f` maps to a non-causal vector.
std::optional<RatVector> escaping_column(const TransferMatrix& f, const TransferMatrix& from) {
  for (std::size_t j = 0; j < from.cols(); ++j) {
    const RatVector d = from.column(j);
    if (!is_causal(TransferMatrix::column_vector(apply(f, d)))) return d;
  }
  return std::nullopt;
}

EquivalenceOutcome decide_post(const TransferMatrix& f1, const TransferMatrix& f2) {
  EquivalenceOutcome out;
  out.mode = EquivalenceMode::post;
  const LatencyKernel k1 = latency_kernel(f1);
  const LatencyKernel k2 = latency_kernel(f2);
  out.nu1 = k1.nu;
  out.nu2 = k2.nu;
  const Containment a = module_contains(k1.D, k2.D);
  const Containment b = module_contains(k2.D, k1.D);
  if (a.contained && b.contained) {
    out.equivalent = true;
    out.l_po = post_compensator(f1, f2);
    return out;
  }
  if (!a.contained) {
    out.witness = escaping_column(f1, k2.D);
    out.reason = "witness lies in the latency kernel of F2 but not of F1";
  } else {
    out.witness = escaping_column(f2, k1.D);
    out.reason = "witness lies in the latency kernel of F1 but not of F2";
  }
  if (!out.witness) throw InternalError("kernel containment failed without an escaping generator");
  return out;
}

EquivalenceOutcome decide_pre(const TransferMatrix& f1, const TransferMatrix& f2) {
  EquivalenceOutcome out;
  if (f1.is_square()) {
    out = decide_post(f1.transpose(), f2.transpose());
    out.mode = EquivalenceMode::pre;
    if (out.equivalent) {
      out.l_pr = out.l_po.transpose();
      out.l_po = {};
      if (!(f1 * out.l_pr == f2)) throw InternalError("pre-compensator certificate failed");
    } else {
      out.reason += " (transposed maps)";
    }
    return out;
  }
  out.mode = EquivalenceMode::pre;
  out.nu1 = latency_kernel(f1).nu;
  out.nu2 = latency_kernel(f2).nu;
  const auto x = solve(f1, f2);
  if (!x) {
    out.reason = "F2 does not factor through F1 on the right";
    return out;
  }
  if (!is_bicausal(*x)) {
    out.reason = "unique right factor F1^-1 F2 is not bicausal";
    return out;
  }
  out.equivalent = true;
  out.l_pr = *x;
  return out;
}

EquivalenceOutcome decide_two_sided(const TransferMatrix& f1, const TransferMatrix& f2) {
  EquivalenceOutcome out;
  out.mode = EquivalenceMode::two_sided;
  const LatencyKernel k1 = latency_kernel(f1);
  const LatencyKernel k2 = latency_kernel(f2);
  out.nu1 = k1.nu;
  out.nu2 = k2.nu;
  if (k1.nu != k2.nu) {
    out.reason = "latency indices differ";
    return out;
  }
  out.l_pr = k1.D * invert(k2.D);
  if (!is_bicausal(out.l_pr)) throw InternalError("order-preserving isomorphism is not bicausal");
  out.l_po = post_compensator(f1 * out.l_pr, f2);
  out.equivalent = true;
  return out;
}

}  // namespace

EquivalenceOutcome compensation_equivalence(const TransferMatrix& f1, const TransferMatrix& f2,
                                            EquivalenceMode mode) {
  if (f1.rows() != f2.rows() || f1.cols() != f2.cols())
    throw PreconditionError("maps have different shapes: " + f1.shape() + " vs " + f2.shape());
  for (const auto* f : {&f1, &f2})
    if (function_rank(*f) < f->cols()) throw PreconditionError("compensation equivalence requires injective maps");
  switch (mode) {
    case EquivalenceMode::post: return decide_post(f1, f2);
    case EquivalenceMode::pre: return decide_pre(f1, f2);
    case EquivalenceMode::two_sided: return decide_two_sided(f1, f2);
  }
  throw PreconditionError("unknown equivalence mode");
}

}  // namespace latkern

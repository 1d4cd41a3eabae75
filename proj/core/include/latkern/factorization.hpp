#pragma once

#include <optional>

#include "latkern/latency.hpp"
#include "latkern/matrix.hpp"

namespace latkern {

/// H = G * F with G causal, or an input u with F u causal and H u not.
struct FactorOutcome {
  bool yes = false;
  TransferMatrix G;
  std::optional<RatVector> witness;
};

/// Requires F of full column rank; H any map with the same input space.
FactorOutcome causal_factor(const TransferMatrix& f, const TransferMatrix& h);

/// F2 = l F1 (post) or F2 = F1 l (pre) with l bicausal.
EquivalenceOutcome bicausal_postequivalence(const TransferMatrix& f1, const TransferMatrix& f2);
EquivalenceOutcome bicausal_preequivalence(const TransferMatrix& f1, const TransferMatrix& f2);

/// Constant G with H = G F, if one exists.
std::optional<ConstMatrix> static_factor(const TransferMatrix& f, const TransferMatrix& h);

}  // namespace latkern

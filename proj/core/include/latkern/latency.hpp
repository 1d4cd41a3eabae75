#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "latkern/matrix.hpp"
#include "latkern/proper_bases.hpp"

namespace latkern {

/// Module of inputs u with F*u causal, generated over the causal ring by
/// the columns of D.
struct LatencyKernel {
  TransferMatrix D;                     // ordered proper generator
  std::optional<TransferMatrix> D_poly; // strictly polynomial generator
  std::vector<long> orders;             // ord of the columns of D, nondecreasing
  std::vector<long> nu;                 // latency indices, nonincreasing
  OrderChain chain;
  bool strictly_causal_input = true;    // false: computed with a warning
};

/// Requires F of full column rank.
LatencyKernel latency_kernel(const TransferMatrix& f);

/// Truncates each entry to its z^k (k >= 1) terms and certifies that the
/// generated module is unchanged. Throws InternalError on failure.
TransferMatrix strictly_polynomial_basis(const TransferMatrix& d);

std::vector<long> latency_indices(const LatencyKernel& k);

/// u in the kernel, decided by D^-1 u causal.
bool kernel_contains(const LatencyKernel& k, const RatVector& u);

struct EntryWitness {
  std::size_t row = 0;
  std::size_t col = 0;
  long order = 0;
};

struct Containment {
  bool contained = false;
  bool equal = false;
  TransferMatrix R;                     // D1^-1 D2
  std::optional<EntryWitness> witness;  // entry of R with negative order
};

/// D2 * causal  inside  D1 * causal. D1 must be nonsingular.
Containment module_contains(const TransferMatrix& d1, const TransferMatrix& d2);

enum class EquivalenceMode { post, pre, two_sided };

std::string to_string(EquivalenceMode mode);
EquivalenceMode parse_equivalence_mode(const std::string& text);

/// post:      F2 = l * F1
/// pre:       F2 = F1 * l
/// two_sided: F2 = l_po * F1 * l_pr
/// with bicausal compensators.
struct EquivalenceOutcome {
  EquivalenceMode mode = EquivalenceMode::post;
  bool equivalent = false;
  TransferMatrix l_pr;                // pre and two_sided
  TransferMatrix l_po;                // post and two_sided
  std::vector<long> nu1;
  std::vector<long> nu2;
  std::optional<RatVector> witness;   // in one kernel but not the other
  std::string reason;
};

EquivalenceOutcome compensation_equivalence(const TransferMatrix& f1, const TransferMatrix& f2,
                                            EquivalenceMode mode);

}  // namespace latkern

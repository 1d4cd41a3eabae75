#pragma once

#include <optional>
#include <vector>

#include "latkern/matrix.hpp"

namespace latkern {

struct ClosedLoopForms {
  TransferMatrix series;    // l_po f (I + g f)^-1 l_pr
  TransferMatrix parallel;  // l_po (I + f g)^-1 f l_pr
};

/// Requires f strictly causal, g causal, l_pr and l_po bicausal.
ClosedLoopForms closed_loop_forms(const TransferMatrix& f, const TransferMatrix& g, const TransferMatrix& l_pr,
                                  const TransferMatrix& l_po);

/// Both forms, checked equal; returns the series form.
TransferMatrix closed_loop(const TransferMatrix& f, const TransferMatrix& g, const TransferMatrix& l_pr,
                           const TransferMatrix& l_po);

/// l^-1 = L + g f with L static and g causal.
struct StaticFeedback {
  bool realizable = false;
  ConstMatrix L;
  TransferMatrix g;
  std::optional<RatVector> witness;
};

StaticFeedback static_feedback_realizable(const TransferMatrix& f, const TransferMatrix& l);

/// l = (I + g f)^-1 v.
struct FeedbackRealization {
  TransferMatrix v;
  TransferMatrix g;
  TransferMatrix rho;
  std::vector<long> sigma;  // reachability indices of v, nonincreasing
  std::vector<long> nu;     // latency indices of f, nonincreasing
};

/// Requires f strictly causal and injective, l bicausal.
FeedbackRealization vg_representation(const TransferMatrix& f, const TransferMatrix& l);

struct WorstCase {
  TransferMatrix l;
  FeedbackRealization realization;
};

/// Precompensator whose remainder has total reachability index equal to
/// the total latency index of f.
WorstCase worst_case_precompensator(const TransferMatrix& f);

struct StateSpace {
  ConstMatrix A;
  ConstMatrix B;
  std::optional<ConstMatrix> C;  // identity when absent
};

/// C (zI - A)^-1 B.
TransferMatrix from_state_space(const StateSpace& s);

struct NonlatencyReport {
  bool injective = false;
  bool nonlatent = false;
  std::vector<long> nu;        // when injective
  ConstMatrix static_kernel;   // kernel of B, when not injective
};

/// For C = I. Throws InternalError if an injective pair is latent.
NonlatencyReport is_nonlatency_check(const StateSpace& s);

struct StaticStateFeedback {
  bool yes = false;
  bool polynomial_test = false;   // l^-1 P polynomial
  bool containment_test = false;  // P_h^-1 P polynomial
  ConstMatrix L;
  std::optional<ConstMatrix> G;   // l^-1 = L + G f when yes
};

/// For C = I, (zI - A)^-1 B injective and l bicausal.
StaticStateFeedback static_state_feedback_test(const StateSpace& s, const TransferMatrix& l);

}  // namespace latkern

#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "latkern/errors.hpp"
#include "latkern/matrix.hpp"

namespace latkern {

/// Causality classification of a transfer matrix, read off its Markov
/// coefficients.
struct CausalityReport {
  ExtOrder map_order;
  bool causal = false;
  bool strictly_causal = false;
  bool order_consistent = false;  // leading Markov coefficient injective
  bool instantaneous = false;     // order consistent with order 0
  bool nonlatent = false;         // order consistent with order 1
  bool bicausal = false;          // square, causal, A_0 invertible
};

/// Thrown by invert() on a singular matrix; carries a kernel vector.
class SingularMatrixError : public PreconditionError {
 public:
  SingularMatrixError(const std::string& what, RatVector witness)
      : PreconditionError(what), witness_(std::move(witness)) {}
  [[nodiscard]] const RatVector& witness() const { return witness_; }

 private:
  RatVector witness_;
};

/// Coefficient A_k of z^-k in the entrywise expansion.
ConstMatrix markov_coefficient(const TransferMatrix& f, long k);

/// Minimum entry order; infinity for the zero matrix.
ExtOrder map_order(const TransferMatrix& f);

/// Minimum order over the entries of a vector.
ExtOrder vector_order(const RatVector& v);

/// Coefficient of z^-ord(v) in each entry (zero for entries of higher
/// order). All zero for the zero vector.
std::vector<Rational> leading_vector(const RatVector& v);

CausalityReport classify(const TransferMatrix& f);

bool is_causal(const TransferMatrix& f);
bool is_strictly_causal(const TransferMatrix& f);
bool is_bicausal(const TransferMatrix& f);
bool is_polynomial(const TransferMatrix& f);

/// Exact inverse over the rational function field. Throws
/// SingularMatrixError (with a kernel vector) when singular and
/// PreconditionError when not square.
TransferMatrix invert(const TransferMatrix& f);

struct StaticStrictSplit {
  ConstMatrix constant;    // A_0(F)
  TransferMatrix strict;   // F - A_0(F)
};

/// Requires F causal.
StaticStrictSplit static_strict_split(const TransferMatrix& f);

/// Matrix-vector product; throws PreconditionError on dimension mismatch.
RatVector apply(const TransferMatrix& f, const RatVector& u);

struct TransposeRank {
  TransferMatrix transpose;
  std::size_t rank = 0;
};

TransposeRank transpose_rank(const TransferMatrix& f);

/// Rank over the rational function field.
std::size_t function_rank(const TransferMatrix& f);

/// z^k * F.
TransferMatrix shift(const TransferMatrix& f, long k);

/// Diagonal matrix with entries z^powers[i].
TransferMatrix z_diagonal(const std::vector<long>& powers);

}  // namespace latkern

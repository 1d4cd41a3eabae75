#pragma once

#include <cstddef>
#include <vector>

#include "latkern/matrix.hpp"

namespace latkern {

/// Columns with K-linearly independent leading coefficient vectors.
struct ProperBasis {
  TransferMatrix columns;
  std::vector<long> orders;  // orders[i] = ord(column i)
  ConstMatrix leading_matrix;
  bool ordered = false;      // orders nondecreasing
};

struct IndependenceCheck {
  bool independent = false;
  ConstMatrix leading_matrix;
};

/// Matrix whose column i is the leading coefficient vector of column i.
ConstMatrix leading_matrix(const TransferMatrix& cols);

/// Column orders; throws PreconditionError on a zero column.
std::vector<long> column_orders(const TransferMatrix& cols);

IndependenceCheck proper_independence_check(const TransferMatrix& cols);

/// Wraps already properly independent columns. Throws PreconditionError
/// otherwise.
ProperBasis make_proper_basis(const TransferMatrix& cols);

struct ColumnReduction {
  ProperBasis basis;
  TransferMatrix W;  // bicausal, basis.columns = M * W
};

/// Bicausal column operations turning M into an ordered proper basis.
/// Requires full column rank.
ColumnReduction column_reduce_at_infinity(const TransferMatrix& m);

/// Constant unit columns completing partial's leading coefficients to a
/// basis of K^n (n x (n - k)).
ConstMatrix extend_to_proper_basis(const ProperBasis& partial, std::size_t n);

/// F = B1 * Delta * B2, Delta(i,i) = z^-sigma[i].
struct SmithAtInfinity {
  TransferMatrix B1;
  std::vector<long> sigma;
  TransferMatrix B2;

  [[nodiscard]] TransferMatrix delta() const;
};

SmithAtInfinity smith_at_infinity(const TransferMatrix& f);

/// S_j = span of leading coefficients of module elements of order <= j,
/// for j in [k_lower, k_upper].
struct OrderChain {
  long k_lower = 0;
  long k_upper = 0;
  std::vector<ConstMatrix> subspaces;  // subspaces[j - k_lower], basis columns
  std::vector<std::size_t> mu;         // mu[j - k_lower] = dim S_j
  std::size_t rank = 0;

  /// dim S_j for any j (0 below the window, rank above).
  [[nodiscard]] std::size_t mu_at(long j) const;
  [[nodiscard]] ConstMatrix subspace_at(long j) const;
};

/// Requires properly independent generator columns.
OrderChain order_chain(const TransferMatrix& d);

}  // namespace latkern

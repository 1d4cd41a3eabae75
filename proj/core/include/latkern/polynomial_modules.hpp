#pragma once

#include <cstddef>
#include <vector>

#include "latkern/matrix.hpp"

namespace latkern {

/// Polynomial matrix from a transfer matrix with polynomial entries.
/// Throws PreconditionError otherwise.
PolyMatrix to_poly_matrix(const TransferMatrix& m);

Poly poly_determinant(const PolyMatrix& p);

/// det U is a nonzero constant.
bool is_unimodular(const PolyMatrix& u);

/// Degree of each column (-1 for a zero column).
std::vector<long> column_degrees(const PolyMatrix& p);

/// Coefficient of z^deg(col j) in each entry of column j.
ConstMatrix leading_column_matrix(const PolyMatrix& p);

struct Gcrd {
  PolyMatrix R;  // k x k
  PolyMatrix U;  // unimodular, U [A; B] = [R; 0]
};

/// Requires [A; B] of full column rank.
Gcrd hermite_gcrd(const PolyMatrix& a, const PolyMatrix& b);

struct PolyColumnReduction {
  PolyMatrix P;  // P_in * V
  PolyMatrix V;  // unimodular
};

/// Requires P square and nonsingular.
PolyColumnReduction column_reduce_poly(const PolyMatrix& p);

/// v = N P^-1, right coprime, P column reduced.
struct CoprimeFraction {
  PolyMatrix N;
  PolyMatrix P;
  std::vector<long> column_degrees;
};

CoprimeFraction right_coprime_fraction(const TransferMatrix& v);

struct ReachabilityIndices {
  std::vector<long> sigma;  // nonincreasing
  long n = 0;               // deg det P
};

ReachabilityIndices reachability_indices(const TransferMatrix& v);

/// Generator P of {u polynomial : F u polynomial} = P * K[z]^m.
/// Requires F injective.
PolyMatrix polynomial_kernel_module(const TransferMatrix& f);

}  // namespace latkern

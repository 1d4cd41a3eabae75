#pragma once

#include <vector>

#include "latkern/matrix.hpp"

namespace latkern::cli {

/// Output series of F u, one per row, obtained by convolving the
/// expansions of F and u (no rational arithmetic on the product).
/// Coefficients are exact for every index up to horizon.
std::vector<TruncatedSeries> simulate_response(const TransferMatrix& f, const RatVector& u, long horizon);

}  // namespace latkern::cli

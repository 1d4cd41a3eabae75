#include "cli/simulate.hpp"

#include <algorithm>

#include "latkern/errors.hpp"

namespace latkern::cli {

std::vector<TruncatedSeries> simulate_response(const TransferMatrix& f, const RatVector& u, long horizon) {
  if (u.size() != f.cols())
    throw PreconditionError("input has " + std::to_string(u.size()) + " entries, F has " +
                            std::to_string(f.cols()) + " columns");
  std::vector<TruncatedSeries> out;
  for (std::size_t i = 0; i < f.rows(); ++i) {
    TruncatedSeries acc;
    acc.start_index = horizon;
    acc.horizon = horizon;
    acc.coeffs.assign(1, Rational(0));
    for (std::size_t j = 0; j < f.cols(); ++j) {
      if (f(i, j).is_zero() || u[j].is_zero()) continue;
      const long of = ord(f(i, j)).value();
      const long ou = ord(u[j]).value();
      if (of + ou > horizon) continue;
      const TruncatedSeries term = convolve(expand(f(i, j), horizon - ou), expand(u[j], horizon - of));
      acc = add(acc, term);
    }
    // normalize to the first nonzero coefficient
    TruncatedSeries norm;
    norm.horizon = horizon;
    norm.start_index = horizon;
    norm.coeffs.assign(1, Rational(0));
    for (long t = acc.start_index; t <= horizon; ++t) {
      if (acc.at(t) == 0) continue;
      norm.start_index = t;
      norm.coeffs.clear();
      for (long s = t; s <= horizon; ++s) norm.coeffs.push_back(acc.at(s));
      break;
    }
    out.push_back(std::move(norm));
  }
  return out;
}

}  // namespace latkern::cli

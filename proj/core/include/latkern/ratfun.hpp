#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "latkern/poly.hpp"
#include "latkern/rational.hpp"

namespace latkern {

/// Order (valuation at infinity) of a Laurent series: a finite integer, or
/// infinity for the zero element. Never minus infinity.
class ExtOrder {
 public:
  constexpr ExtOrder() = default;  // infinity
  constexpr ExtOrder(long v) : value_(v), finite_(true) {}  // NOLINT

  static constexpr ExtOrder infinity() { return {}; }

  [[nodiscard]] constexpr bool is_finite() const { return finite_; }
  [[nodiscard]] constexpr bool is_infinite() const { return !finite_; }
  /// Precondition: is_finite().
  [[nodiscard]] long value() const;

  friend constexpr bool operator==(ExtOrder a, ExtOrder b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtOrder a, ExtOrder b) {
    if (!a.finite_ || !b.finite_) return b.finite_ <=> a.finite_;
    return a.value_ <=> b.value_;
  }
  friend ExtOrder operator+(ExtOrder a, ExtOrder b);

  [[nodiscard]] std::string to_string() const;

 private:
  long value_ = 0;
  bool finite_ = false;
};

/// Rational element of K((z^-1)), kept as a reduced fraction with monic
/// denominator so that equal values have equal representations.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RatFun(long c) : RatFun(Rational(c)) {}          // NOLINT
  RatFun(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RatFun(Poly num, Poly den);

  /// z^k for any integer k.
  static RatFun z_power(long k);

  [[nodiscard]] const Poly& num() const { return num_; }
  [[nodiscard]] const Poly& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_polynomial() const { return den_.degree() == 0; }
  [[nodiscard]] bool is_constant() const { return is_polynomial() && num_.is_constant(); }
  /// deg num + deg den; used as an elimination pivot cost.
  [[nodiscard]] long total_degree() const;

  [[nodiscard]] RatFun inverse() const;

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend RatFun operator-(RatFun a);
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  [[nodiscard]] std::string to_string() const;

 private:
  void canonicalize();
  Poly num_;
  Poly den_;
};

/// Finite window t0..horizon of an expansion sum_t s_t z^-t.
struct TruncatedSeries {
  long start_index = 0;
  long horizon = 0;
  std::vector<Rational> coeffs;  // coeffs[i] is the coefficient of z^-(start_index + i)

  /// Coefficient of z^-t for t <= horizon (zero before start_index).
  [[nodiscard]] Rational at(long t) const;
  [[nodiscard]] bool is_zero() const;
  /// Renders in descending powers of z, e.g. "z + 2 + z^-1 + O(z^-6)".
  [[nodiscard]] std::string to_string() const;
};

ExtOrder ord(const RatFun& r);

/// Coefficient of z^-ord(r). Throws std::domain_error on zero.
Rational leading_coeff(const RatFun& r);

/// Coefficient of z^-t in the expansion of r.
Rational coefficient(const RatFun& r, long t);

/// Laurent expansion in z^-1 through index `horizon`.
TruncatedSeries expand(const RatFun& r, long horizon);

/// Product / sum of truncated series on the window where both are known.
TruncatedSeries convolve(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);

struct SplitParts {
  Poly plus;     // terms with t <= 0 (polynomial part including the constant)
  RatFun minus;  // terms with t >= 0 (proper part including the constant)
};

/// The two truncations overlap at t = 0: plus + minus - A_0 = r.
SplitParts split_parts(const RatFun& r);

/// Terms z^k with k >= 1 only.
Poly strictly_polynomial_part(const RatFun& r);

/// Causal truncation: terms z^-t with t >= 0.
RatFun causal_part(const RatFun& r);

}  // namespace latkern

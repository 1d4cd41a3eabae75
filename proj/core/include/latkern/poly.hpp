#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "latkern/rational.hpp"

namespace latkern {

/// Univariate polynomial in z over the rationals. Coefficients are stored
/// ascending by power and trimmed so the last stored entry is nonzero; the
/// zero polynomial stores nothing.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(const Rational& c, std::size_t power);
  static Poly z() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Coefficient of z^k (zero beyond the degree).
  [[nodiscard]] Rational coeff(std::size_t k) const;
  [[nodiscard]] const Rational& leading() const;
  /// Smallest power with a nonzero coefficient; -1 for zero.
  [[nodiscard]] long low_degree() const;

  [[nodiscard]] Poly monic() const;
  [[nodiscard]] Poly shifted(std::size_t k) const;  // z^k * p
  [[nodiscard]] Rational eval(const Rational& x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  [[nodiscard]] std::string to_string(char var = 'z') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws on b == 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

}  // namespace latkern

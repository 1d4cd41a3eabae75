#include "latkern/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace latkern {

namespace {
const Rational kZero(0);
}

Poly::Poly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, std::size_t power) {
  Poly p;
  if (c == 0) return p;
  p.coeffs_.assign(power + 1, Rational(0));
  p.coeffs_[power] = c;
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : kZero; }

const Rational& Poly::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

long Poly::low_degree() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return static_cast<long>(k);
  return -1;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly p = *this;
  const Rational inv = 1 / Rational(leading());
  for (auto& c : p.coeffs_) c *= inv;
  return p;
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  Poly p;
  p.coeffs_.assign(k, Rational(0));
  p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return p;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  const long db = b.degree();
  const Rational inv_lead = 1 / Rational(b.leading());
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  for (long k = a.degree(); k >= db; --k) {
    const Rational& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    const Rational q = top * inv_lead;
    quot[static_cast<std::size_t>(k - db)] = q;
    for (long j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a, p))
    if (e & 1) r = mul_mod(r, a, p);
  return r;
}

// Image of p in F_q[z]; empty when a denominator or the leading
// coefficient vanishes mod q.
std::vector<u64> reduce_mod(const Poly& a, u64 q) {
  std::vector<u64> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) {
    const u64 d = mpz_fdiv_ui(c.get_den_mpz_t(), q);
    if (d == 0) return {};
    out.push_back(mul_mod(mpz_fdiv_ui(c.get_num_mpz_t(), q), pow_mod(d, q - 2, q), q));
  }
  if (out.back() == 0) return {};
  return out;
}

// Degree of gcd over F_q.
long gcd_degree_mod(std::vector<u64> a, std::vector<u64> b, u64 q) {
  auto trim = [](std::vector<u64>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  while (!b.empty()) {
    const u64 inv = pow_mod(b.back(), q - 2, q);
    while (a.size() >= b.size()) {
      const u64 f = mul_mod(a.back(), inv, q);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + q - mul_mod(f, b[j], q)) % q;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<long>(a.size()) - 1;
}

// True only when gcd(a, b) = 1 is certified: if both leading
// coefficients survive reduction mod q, deg gcd over Q <= deg gcd mod q.
bool certified_coprime(const Poly& a, const Poly& b) {
  static constexpr u64 primes[] = {2305843009213693951ULL, 4611686018427387847ULL, 1000000007ULL};
  for (u64 q : primes) {
    const auto ra = reduce_mod(a, q);
    const auto rb = reduce_mod(b, q);
    if (ra.empty() || rb.empty()) continue;
    if (gcd_degree_mod(ra, rb, q) == 0) return true;
  }
  return false;
}

using ZPoly = std::vector<mpz_class>;  // ascending, no trailing zeros

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Divides out the content and makes the leading coefficient positive.
void make_primitive(ZPoly& p) {
  if (p.empty()) return;
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly primitive_integer(const Poly& a) {
  mpz_class den = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    mpz_divexact(out[i].get_mpz_t(), den.get_mpz_t(), a.coeffs()[i].get_den_mpz_t());
    out[i] *= a.coeffs()[i].get_num();
  }
  make_primitive(out);
  return out;
}

// Pseudo-remainder of a by b.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const mpz_class la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(a[shift + j].get_mpz_t(), la.get_mpz_t(), b[j].get_mpz_t());
    trim(a);
  }
  return a;
}

}  // namespace

Poly gcd(Poly a, Poly b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0 || certified_coprime(a, b)) return Poly(1);
  // primitive remainder sequence over Z
  ZPoly x = primitive_integer(a);
  ZPoly y = primitive_integer(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    ZPoly r = pseudo_remainder(std::move(x), y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rational> c(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) c[i] = Rational(x[i], x.back());
  for (auto& q : c) q.canonicalize();
  return Poly(std::move(c));
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = degree(); k >= 0; --k) {
    Rational c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    const bool unit = c == 1;
    if (k == 0 || !unit) {
      os << latkern::to_string(c);
      if (k != 0) os << '*';
    }
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

}  // namespace latkern

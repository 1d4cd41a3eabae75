#include "latkern/ratfun.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace latkern {

long ExtOrder::value() const {
  if (!finite_) throw std::domain_error("order is infinite");
  return value_;
}

ExtOrder operator+(ExtOrder a, ExtOrder b) {
  if (a.is_infinite() || b.is_infinite()) return ExtOrder::infinity();
  return a.value_ + b.value_;
}

std::string ExtOrder::to_string() const { return finite_ ? std::to_string(value_) : "inf"; }

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  canonicalize();
}

void RatFun::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RatFun RatFun::z_power(long k) {
  if (k >= 0) return RatFun(Poly::monomial(1, static_cast<std::size_t>(k)));
  RatFun r;
  r.num_ = Poly(1);
  r.den_ = Poly::monomial(1, static_cast<std::size_t>(-k));
  return r;
}

long RatFun::total_degree() const { return std::max(num_.degree(), 0L) + den_.degree(); }

RatFun RatFun::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero rational function");
  return RatFun(den_, num_);
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    canonicalize();
    return *this;
  }
  // a/b + c/d with g = gcd(b, d): only g can share factors with the sum
  const Poly g = gcd(den_, o.den_);
  if (g.degree() == 0) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  const Poly b = divmod(den_, g).first;
  const Poly d = divmod(o.den_, g).first;
  num_ = num_ * d + o.num_ * b;
  den_ = b * o.den_;
  if (num_.is_zero()) {
    den_ = Poly(1);
    return *this;
  }
  const Poly h = gcd(num_, g);
  if (h.degree() > 0) {
    num_ = divmod(num_, h).first;
    den_ = divmod(den_, h).first;
  }
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = o;
  if (o.is_constant()) {
    num_ *= o.num_.leading();
    return *this;
  }
  // cross-cancel; both operands are already reduced
  const Poly g1 = gcd(num_, o.den_);
  const Poly g2 = gcd(o.num_, den_);
  Poly a = g1.degree() > 0 ? divmod(num_, g1).first : num_;
  Poly d = g1.degree() > 0 ? divmod(o.den_, g1).first : o.den_;
  Poly c = g2.degree() > 0 ? divmod(o.num_, g2).first : o.num_;
  Poly b = g2.degree() > 0 ? divmod(den_, g2).first : den_;
  num_ = a * c;
  den_ = b * d;
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun operator-(RatFun a) {
  a.num_ = -a.num_;
  return a;
}

std::string RatFun::to_string() const {
  if (is_polynomial()) return num_.to_string();
  std::ostringstream os;
  const auto terms = std::count_if(num_.coeffs().begin(), num_.coeffs().end(),
                                   [](const Rational& c) { return c != 0; });
  if (terms > 1)
    os << '(' << num_.to_string() << ')';
  else
    os << num_.to_string();
  os << "/(" << den_.to_string() << ')';
  return os.str();
}

ExtOrder ord(const RatFun& r) {
  if (r.is_zero()) return ExtOrder::infinity();
  return r.den().degree() - r.num().degree();
}

Rational leading_coeff(const RatFun& r) {
  if (r.is_zero()) throw std::domain_error("leading coefficient of zero undefined");
  return r.num().leading() / r.den().leading();
}

TruncatedSeries expand(const RatFun& r, long horizon) {
  TruncatedSeries s;
  s.horizon = horizon;
  if (r.is_zero() || horizon < ord(r).value()) {
    s.start_index = horizon;
    s.coeffs.assign(1, Rational(0));
    return s;
  }
  const long o = ord(r).value();
  const auto& n = r.num().coeffs();
  const auto& d = r.den().coeffs();
  const long dn = r.num().degree();
  const long dd = r.den().degree();
  // In w = z^-1: r = w^o * N(w) / D(w), with N, D the reversed coefficient lists.
  auto n_rev = [&](long i) { return i <= dn ? n[static_cast<std::size_t>(dn - i)] : Rational(0); };
  auto d_rev = [&](long i) { return i <= dd ? d[static_cast<std::size_t>(dd - i)] : Rational(0); };
  const long terms = horizon - o + 1;
  s.start_index = o;
  s.coeffs.resize(static_cast<std::size_t>(terms));
  const Rational inv_d0 = 1 / d_rev(0);
  for (long i = 0; i < terms; ++i) {
    Rational acc = n_rev(i);
    for (long j = 1; j <= std::min(i, dd); ++j) acc -= d_rev(j) * s.coeffs[static_cast<std::size_t>(i - j)];
    s.coeffs[static_cast<std::size_t>(i)] = acc * inv_d0;
  }
  return s;
}

Rational coefficient(const RatFun& r, long t) {
  if (r.is_zero() || t < ord(r).value()) return 0;
  return expand(r, t).at(t);
}

Rational TruncatedSeries::at(long t) const {
  if (t > horizon) throw std::out_of_range("coefficient index beyond series horizon");
  if (t < start_index) return 0;
  return coeffs[static_cast<std::size_t>(t - start_index)];
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Rational c = coeffs[i];
    if (c == 0) continue;
    const long t = start_index + static_cast<long>(i);
    const bool neg = c < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (t == 0 || c != 1) {
      os << latkern::to_string(c);
      if (t != 0) os << '*';
    }
    if (t == -1)
      os << 'z';
    else if (t != 0)
      os << "z^" << -t;
  }
  if (first) os << '0';
  os << " + O(z^" << -(horizon + 1) << ')';
  return os.str();
}

TruncatedSeries convolve(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out;
  out.start_index = a.start_index + b.start_index;
  out.horizon = std::min(a.horizon + b.start_index, b.horizon + a.start_index);
  if (out.horizon < out.start_index) out.horizon = out.start_index;
  for (long t = out.start_index; t <= out.horizon; ++t) {
    Rational acc = 0;
    for (long i = a.start_index; i <= t - b.start_index; ++i) acc += a.at(i) * b.at(t - i);
    out.coeffs.push_back(acc);
  }
  return out;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out;
  out.start_index = std::min(a.start_index, b.start_index);
  out.horizon = std::max(std::min(a.horizon, b.horizon), out.start_index);
  for (long t = out.start_index; t <= out.horizon; ++t)
    out.coeffs.push_back((t <= a.horizon ? a.at(t) : Rational(0)) + (t <= b.horizon ? b.at(t) : Rational(0)));
  return out;
}

SplitParts split_parts(const RatFun& r) {
  auto [q, rem] = divmod(r.num(), r.den());
  RatFun minus = RatFun(rem, r.den()) + RatFun(q.coeff(0));
  return {std::move(q), std::move(minus)};
}

Poly strictly_polynomial_part(const RatFun& r) {
  Poly q = divmod(r.num(), r.den()).first;
  return q - Poly(q.coeff(0));
}

RatFun causal_part(const RatFun& r) { return split_parts(r).minus; }

}  // namespace latkern

#include "chered/cyclotomic.hpp"

#include "chered/error.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace chered {

namespace {

unsigned g_conductor_cap = 120;

std::vector<unsigned> divisors_of(unsigned n) {
  std::vector<unsigned> d;
  for (unsigned k = 1; k * k <= n; ++k) {
    if (n % k == 0) {
      d.push_back(k);
      if (k != n / k) d.push_back(n / k);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

// Exact quotient of integer polynomials, requires divisor monic and division
// to be exact. Coefficients ascending.
std::vector<Integer> exact_div(std::vector<Integer> num, const std::vector<Integer>& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw Error("cyclotomic: bad polynomial division");
  std::vector<Integer> quot(num.size() - dd, Integer(0));
  for (std::size_t i = num.size(); i-- > dd;) {
    Integer lead = num[i];
    if (lead == 0) continue;
    quot[i - dd] = lead;
    for (std::size_t k = 0; k <= dd; ++k) num[i - dd + k] -= lead * den[k];
  }
  for (const auto& c : num)
    if (c != 0) throw Error("cyclotomic: inexact polynomial division");
  return quot;
}

}  // namespace

unsigned totient(unsigned n) {
  unsigned result = n, m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(unsigned n) {
  static std::map<unsigned, std::vector<Integer>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n == 0) throw Error("cyclotomic: conductor must be positive");
  std::vector<Integer> poly;
  if (n == 1) {
    poly = {Integer(-1), Integer(1)};
  } else {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
    std::vector<Integer> num(n + 1, Integer(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d : divisors_of(n)) {
      if (d == n) continue;
      num = exact_div(std::move(num), cyclotomic_polynomial(d));
    }
    poly = std::move(num);
  }
  if (poly.size() != totient(n) + 1) throw Error("cyclotomic: degree mismatch");
  return cache.emplace(n, std::move(poly)).first->second;
}

unsigned Cyclotomic::conductor_cap() { return g_conductor_cap; }

void Cyclotomic::set_conductor_cap(unsigned cap) {
  if (cap < 1) throw Error("cyclotomic: cap must be positive");
  g_conductor_cap = cap;
}

Cyclotomic::Cyclotomic() : n_(1), c_{Rational(0)} {}

Cyclotomic::Cyclotomic(Rational r) : n_(1), c_{std::move(r)} {}

Cyclotomic::Cyclotomic(long v) : n_(1), c_{Rational(v)} {}

Cyclotomic::Cyclotomic(unsigned n, std::vector<Rational> coeffs) : n_(n) {
  if (n == 0) throw Error("cyclotomic: conductor must be positive");
  if (n > g_conductor_cap)
    throw ConductorError("cyclotomic: conductor " + std::to_string(n) +
                         " exceeds cap " + std::to_string(g_conductor_cap));
  reduce_(std::move(coeffs));
}

void Cyclotomic::reduce_(std::vector<Rational> raw) {
  const auto& phi = cyclotomic_polynomial(n_);
  const std::size_t deg = phi.size() - 1;
  if (raw.size() > deg) {
    for (std::size_t i = raw.size(); i-- > deg;) {
      Rational lead = raw[i];
      if (lead == 0) continue;
      raw[i] = 0;
      for (std::size_t k = 0; k < deg; ++k) {
        if (phi[k] != 0) raw[i - deg + k] -= lead * Rational(phi[k]);
      }
    }
  }
  raw.resize(deg, Rational(0));
  c_ = std::move(raw);
}

Cyclotomic Cyclotomic::zeta(unsigned n) { return root_of_unity(n, 1); }

Cyclotomic Cyclotomic::root_of_unity(unsigned n, long power) {
  if (n == 0) throw Error("cyclotomic: conductor must be positive");
  long p = power % static_cast<long>(n);
  if (p < 0) p += n;
  std::vector<Rational> coeffs(static_cast<std::size_t>(p) + 1, Rational(0));
  coeffs.back() = 1;
  return Cyclotomic(n, std::move(coeffs));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return c_[0];
}

Cyclotomic Cyclotomic::coerced(unsigned m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw Error("cyclotomic: coercion target must be a multiple");
  if (m > g_conductor_cap)
    throw ConductorError("cyclotomic: conductor " + std::to_string(m) +
                         " exceeds cap " + std::to_string(g_conductor_cap));
  const unsigned stride = m / n_;
  std::vector<Rational> raw(c_.size() * stride, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) raw[i * stride] = c_[i];
  return Cyclotomic(m, std::move(raw));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  unsigned m = std::lcm(n_, o.n_);
  if (m != n_) *this = coerced(m);
  Cyclotomic rhs = (o.n_ == m) ? o : o.coerced(m);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  unsigned m = std::lcm(n_, o.n_);
  if (m != n_) *this = coerced(m);
  Cyclotomic rhs = (o.n_ == m) ? o : o.coerced(m);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  unsigned m = std::lcm(n_, o.n_);
  Cyclotomic lhs = (n_ == m) ? *this : coerced(m);
  Cyclotomic rhs = (o.n_ == m) ? o : o.coerced(m);
  std::vector<Rational> prod(lhs.c_.size() + rhs.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
    if (lhs.c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      if (rhs.c_[j] == 0) continue;
      prod[i + j] += lhs.c_[i] * rhs.c_[j];
    }
  }
  n_ = m;
  reduce_(std::move(prod));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : c_) c *= r;
  return *this;
}

namespace {

using QPoly = std::vector<Rational>;

std::size_t qdeg(const QPoly& p) {
  std::size_t i = p.size();
  while (i > 0 && p[i - 1] == 0) --i;
  return i;  // number of coefficients up to the leading nonzero
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error("cyclotomic: inverse of zero");
  if (is_rational()) {
    Rational r = 1 / c_[0];
    Cyclotomic out;
    out.n_ = n_;
    out.c_.assign(c_.size(), Rational(0));
    out.c_[0] = r;
    return out;
  }
  // Extended Euclid in Q[x] against the (irreducible) cyclotomic polynomial:
  // u * this + v * Phi = 1, so u is the inverse mod Phi.
  const auto& phi_z = cyclotomic_polynomial(n_);
  QPoly r0(phi_z.size());
  for (std::size_t i = 0; i < phi_z.size(); ++i) r0[i] = Rational(phi_z[i]);
  QPoly r1 = c_;
  QPoly u0{Rational(0)}, u1{Rational(1)};
  while (true) {
    std::size_t d1 = qdeg(r1);
    if (d1 == 0) throw Error("cyclotomic: inverse failed");
    if (d1 == 1) {
      // r1 is a nonzero constant; u1 / r1[0] inverts the input.
      Rational inv = 1 / r1[0];
      QPoly out(u1.size());
      for (std::size_t i = 0; i < u1.size(); ++i) out[i] = u1[i] * inv;
      Cyclotomic result(n_, std::move(out));
      return result;
    }
    // r0 = q * r1 + rem
    QPoly rem = r0;
    QPoly q(qdeg(r0) >= d1 ? qdeg(r0) - d1 + 1 : 1, Rational(0));
    while (qdeg(rem) >= d1) {
      std::size_t dr = qdeg(rem);
      Rational f = rem[dr - 1] / r1[d1 - 1];
      q[dr - d1] = f;
      for (std::size_t k = 0; k < d1; ++k) rem[dr - d1 + k] -= f * r1[k];
      rem[dr - 1] = 0;
    }
    // u_next = u0 - q * u1
    QPoly un(std::max(u0.size(), q.size() + u1.size()), Rational(0));
    for (std::size_t i = 0; i < u0.size(); ++i) un[i] = u0[i];
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < u1.size(); ++j) un[i + j] -= q[i] * u1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(un);
  }
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (n_ == o.n_) return c_ == o.c_;
  unsigned m = std::lcm(n_, o.n_);
  return coerced(m).c_ == o.coerced(m).c_;
}

std::complex<double> Cyclotomic::to_complex() const {
  const long double two_pi = 6.283185307179586476925286766559L;
  long double re = 0, im = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    long double v = static_cast<long double>(mpq_get_d(c_[i].get_mpq_t()));
    long double ang = two_pi * static_cast<long double>(i) / static_cast<long double>(n_);
    re += v * std::cos(ang);
    im += v * std::sin(ang);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::string Cyclotomic::str() const {
  if (n_ == 1) return to_string(c_[0]);
  std::ostringstream os;
  os << "c(" << n_ << ";";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    os << (i ? "," : " ") << to_string(c_[i]);
  }
  os << ")";
  return os.str();
}

std::size_t Cyclotomic::hash() const {
  std::size_t h = hash_combine(0x5eed, n_);
  for (const auto& c : c_) h = hash_combine(h, hash_value(c));
  return h;
}

}  // namespace chered

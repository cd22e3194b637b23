#pragma once

#include "chered/rational.hpp"

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace chered {

/// Euler totient.
unsigned totient(unsigned n);

/// Coefficients of the n-th cyclotomic polynomial, ascending degree,
/// length totient(n) + 1, monic, integral. Cached per n.
const std::vector<Integer>& cyclotomic_polynomial(unsigned n);

/**
 * Element of the cyclotomic field Q(zeta_N) in the power basis
 * 1, zeta, ..., zeta^{phi(N)-1} modulo the N-th cyclotomic polynomial.
 *
 * The coefficient vector is the unique reduced representative at the stored
 * conductor; an element is zero exactly when every coefficient is zero.
 * Conductors are never minimized: binary operations coerce both sides into
 * Q(zeta_lcm) and comparisons do the same, so representations at different
 * conductors still compare equal when the values agree.
 */
class Cyclotomic {
 public:
  /// Zero in Q = Q(zeta_1).
  Cyclotomic();
  /// A rational constant at conductor 1.
  explicit Cyclotomic(Rational r);
  Cyclotomic(long v);
  /// Arbitrary coefficient list, reduced mod the conductor-n cyclotomic
  /// polynomial. n >= 1, n <= conductor cap.
  Cyclotomic(unsigned n, std::vector<Rational> coeffs);

  /// Primitive n-th root of unity.
  static Cyclotomic zeta(unsigned n);
  /// zeta_n^power with power taken mod n.
  static Cyclotomic root_of_unity(unsigned n, long power);

  /// Largest conductor arithmetic may produce; default 120.
  static unsigned conductor_cap();
  static void set_conductor_cap(unsigned cap);

  unsigned conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

  /// Multiplicative inverse; throws on zero.
  Cyclotomic inverse() const;
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
    return a * b.inverse();
  }

  Cyclotomic& operator*=(const Rational& r);
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// Same value viewed in Q(zeta_m); the current conductor must divide m.
  Cyclotomic coerced(unsigned m) const;

  /// Numerical image under zeta_N -> exp(2 pi i / N).
  std::complex<double> to_complex() const;

  /// Display form: a plain rational at conductor 1, otherwise
  /// "c(N; a0, a1, ...)" matching the run-configuration literal grammar.
  std::string str() const;

  std::size_t hash() const;

 private:
  unsigned n_;
  std::vector<Rational> c_;

  void reduce_(std::vector<Rational> raw);
};

}  // namespace chered

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chered/cyclotomic.hpp"
#include "chered/matrix.hpp"

namespace chered {

/// Exponent vector; length equals the variable count of the owning Poly.
using Monomial = std::vector<unsigned>;

unsigned monomial_degree(const Monomial& m);
Monomial monomial_mul(const Monomial& a, const Monomial& b);

/// Multivariate polynomial over the cyclotomic field. Terms are kept in a
/// map keyed by exponent vector, so iteration order is deterministic.
class Poly {
 public:
  Poly() = default;
  explicit Poly(unsigned nvars) : nvars_(nvars) {}

  static Poly constant(unsigned nvars, const Cyclotomic& c);
  static Poly variable(unsigned nvars, unsigned i);
  /// sum_i coeffs[i] x_i
  static Poly linear_form(const CycVector& coeffs);
  static Poly term(Monomial m, const Cyclotomic& c);

  unsigned nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Cyclotomic constant_term() const;
  /// Total degree; zero polynomial reports 0.
  unsigned degree() const;
  const std::map<Monomial, Cyclotomic>& terms() const { return terms_; }
  Cyclotomic coeff(const Monomial& m) const;

  void add_term(const Monomial& m, const Cyclotomic& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const;
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator*(const Cyclotomic& c) const;
  Poly pow(unsigned e) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative(unsigned i) const;
  Cyclotomic evaluate(const CycVector& point) const;
  /// Substitution x_i -> sum_j rows(i, j) x_j.
  Poly substitute_linear(const CycMatrix& rows) const;
  /// Quotient by the linear form sum_i alpha[i] x_i when the division is
  /// exact; nullopt otherwise.
  std::optional<Poly> try_divide_linear(const CycVector& alpha) const;

  std::string str() const;

 private:
  unsigned nvars_ = 0;
  std::map<Monomial, Cyclotomic> terms_;
};

std::string str(const Monomial& m);

}  // namespace chered

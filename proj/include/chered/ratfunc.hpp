#pragma once

#include <map>
#include <string>
#include <vector>

#include "chered/poly.hpp"

namespace chered {

/// Shared list of the linear forms allowed in denominators, indexed by
/// hyperplane id. Every RatFunc built over the same table may be combined.
struct LinearFormTable {
  unsigned nvars = 0;
  std::vector<CycVector> forms;

  Poly form_poly(int h) const { return Poly::linear_form(forms.at(h)); }
};

/// Rational function whose denominator is a monomial in the table's linear
/// forms. Kept reduced: the numerator is divisible by no active form, so
/// structural equality is semantic equality.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const LinearFormTable* t) : table_(t), num_(t->nvars) {}
  RatFunc(const LinearFormTable* t, Poly num);
  RatFunc(const LinearFormTable* t, Poly num, std::map<int, unsigned> den);

  static RatFunc constant(const LinearFormTable* t, const Cyclotomic& c);

  const LinearFormTable* table() const { return table_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  const Poly& numerator() const { return num_; }
  const std::map<int, unsigned>& denominator() const { return den_; }
  Poly denominator_poly() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  RatFunc operator-() const;
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  RatFunc operator*(const Cyclotomic& c) const;
  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc derivative(unsigned i) const;
  /// Value at a point where no active denominator form vanishes.
  Cyclotomic evaluate(const CycVector& point) const;

  std::string str() const;

 private:
  void cancel_();

  const LinearFormTable* table_ = nullptr;
  Poly num_;
  std::map<int, unsigned> den_;
};

}  // namespace chered

#include "chered/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chered/error.hpp"

namespace chered {

unsigned monomial_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0u);
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial out(a);
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Poly Poly::constant(unsigned nvars, const Cyclotomic& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(unsigned nvars, unsigned i) {
  Poly p(nvars);
  Monomial m(nvars, 0);
  m.at(i) = 1;
  p.add_term(m, Cyclotomic(1));
  return p;
}

Poly Poly::linear_form(const CycVector& coeffs) {
  Poly p(static_cast<unsigned>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Monomial m(coeffs.size(), 0);
    m[i] = 1;
    p.add_term(m, coeffs[i]);
  }
  return p;
}

Poly Poly::term(Monomial m, const Cyclotomic& c) {
  Poly p(static_cast<unsigned>(m.size()));
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0;
}

Cyclotomic Poly::constant_term() const {
  return coeff(Monomial(nvars_, 0));
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

Cyclotomic Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

void Poly::add_term(const Monomial& m, const Cyclotomic& c) {
  if (m.size() != nvars_) throw Error("poly: monomial arity mismatch");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) throw Error("poly: arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ != o.nvars_) throw Error("poly: arity mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw Error("poly: arity mismatch");
  Poly out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_mul(ma, mb), ca * cb);
  return out;
}

Poly Poly::operator*(const Cyclotomic& c) const {
  Poly out(nvars_);
  if (c.is_zero()) return out;
  for (const auto& [m, t] : terms_) out.add_term(m, t * c);
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly out = constant(nvars_, Cyclotomic(1));
  for (unsigned i = 0; i < e; ++i) out = out * (*this);
  return out;
}

bool Poly::operator==(const Poly& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (a->first != b->first || !(a->second == b->second)) return false;
  return true;
}

Poly Poly::derivative(unsigned i) const {
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial d(m);
    --d[i];
    out.add_term(d, c * Rational(m[i]));
  }
  return out;
}

Cyclotomic Poly::evaluate(const CycVector& point) const {
  if (point.size() != nvars_) throw Error("poly: evaluation arity mismatch");
  Cyclotomic acc;
  for (const auto& [m, c] : terms_) {
    Cyclotomic t = c;
    for (unsigned i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
    acc += t;
  }
  return acc;
}

Poly Poly::substitute_linear(const CycMatrix& rows) const {
  std::vector<Poly> image;
  image.reserve(nvars_);
  for (unsigned i = 0; i < nvars_; ++i) {
    CycVector coeffs(nvars_);
    for (unsigned j = 0; j < nvars_; ++j) coeffs[j] = rows.at(i, j);
    image.push_back(linear_form(coeffs));
  }
  Poly out(nvars_);
  for (const auto& [m, c] : terms_) {
    Poly t = constant(nvars_, c);
    for (unsigned i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) t = t * image[i];
    out += t;
  }
  return out;
}

std::optional<Poly> Poly::try_divide_linear(const CycVector& alpha) const {
  unsigned pivot = 0;
  while (pivot < alpha.size() && alpha[pivot].is_zero()) ++pivot;
  if (pivot == alpha.size()) throw Error("poly: division by zero form");

  // Synthetic division against the pivot variable. Each round eliminates the
  // remainder term maximal in (pivot degree, exponent vector) order; the
  // replacement terms are strictly smaller, so the loop terminates.
  Poly quotient(nvars_);
  Poly rem = *this;
  const Poly form = linear_form(alpha);
  while (!rem.is_zero()) {
    const std::pair<const Monomial, Cyclotomic>* top = nullptr;
    for (const auto& t : rem.terms_)
      if (!top || t.first[pivot] > top->first[pivot] ||
          (t.first[pivot] == top->first[pivot] && t.first > top->first))
        top = &t;
    if (top->first[pivot] == 0) return std::nullopt;
    Monomial m = top->first;
    --m[pivot];
    Poly qt = term(m, top->second * alpha[pivot].inverse());
    quotient += qt;
    rem -= qt * form;
  }
  return quotient;
}

std::string str(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << "x" << i;
    if (m[i] > 1) os << "^" << m[i];
  }
  if (first) os << "1";
  return os.str();
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (monomial_degree(m) > 0) os << "*" << chered::str(m);
  }
  return os.str();
}

}  // namespace chered

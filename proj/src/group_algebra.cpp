#include "chered/group_algebra.hpp"

#include "chered/error.hpp"

#include <sstream>

namespace chered {

Cyclotomic GroupAlgebraElement::coeff(int g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Cyclotomic(0) : it->second;
}

void GroupAlgebraElement::add_term(int g, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(g, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool GroupAlgebraElement::is_zero() const { return terms_.empty(); }

void GroupAlgebraElement::prune_() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

GroupAlgebraElement GroupAlgebraElement::operator-() const {
  GroupAlgebraElement r = *this;
  for (auto& [g, c] : r.terms_) c = -c;
  return r;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r(*W_);
  for (const auto& [g, cg] : terms_)
    for (const auto& [h, ch] : o.terms_) r.add_term(W_->product(g, h), cg * ch);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const Cyclotomic& s) const {
  GroupAlgebraElement r(*W_);
  if (s.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& [g, c] : r.terms_) c *= s;
  r.prune_();
  return r;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b) {
    if (a->first != b->first || a->second != b->second) return false;
  }
  return true;
}

GroupAlgebraElement GroupAlgebraElement::conjugated_by(int w) const {
  GroupAlgebraElement r(*W_);
  for (const auto& [g, c] : terms_) r.add_term(W_->conjugate(w, g), c);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::det_inverse_twist() const {
  GroupAlgebraElement r(*W_);
  for (const auto& [g, c] : terms_) r.add_term(g, c * W_->det(W_->inverse(g)));
  return r;
}

std::string GroupAlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*w" << g;
  }
  return os.str();
}

ParameterSet ParameterSet::zero(const ReflectionGroup& W) {
  ParameterSet k;
  for (const auto& orbit : W.hyperplane_orbits()) {
    unsigned m = W.hyperplanes()[orbit.front()].order;
    k.by_orbit.emplace_back(m, Rational(0));
  }
  return k;
}

void ParameterSet::validate(const ReflectionGroup& W) const {
  const auto& orbits = W.hyperplane_orbits();
  if (by_orbit.size() != orbits.size())
    throw Error("parameters: expected " + std::to_string(orbits.size()) + " orbit sequences");
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    unsigned m = W.hyperplanes()[orbits[o].front()].order;
    if (by_orbit[o].size() != m)
      throw Error("parameters: orbit " + std::to_string(o) + " needs length " +
                  std::to_string(m));
  }
}

const std::vector<Rational>& ParameterSet::for_hyperplane(const ReflectionGroup& W,
                                                          int h) const {
  int orbit = W.hyperplanes()[h].orbit;
  return by_orbit.at(orbit);
}

GroupAlgebraElement epsilon_element(const ReflectionGroup& W, int h, unsigned j) {
  const Hyperplane& hp = W.hyperplanes()[h];
  GroupAlgebraElement e(W);
  Rational inv_m(1, static_cast<long>(hp.order));
  inv_m.canonicalize();
  for (int s : hp.stabilizer) {
    // det(s)^{-j} via the inverse element: det(s^{-1})^j.
    Cyclotomic d(1);
    const Cyclotomic di = W.det(W.inverse(s));
    for (unsigned t = 0; t < j % hp.order; ++t) d *= di;
    e.add_term(s, d * inv_m);
  }
  return e;
}

GroupAlgebraElement a_element(const ReflectionGroup& W, int h, const ParameterSet& k) {
  const Hyperplane& hp = W.hyperplanes()[h];
  const auto& ks = k.for_hyperplane(W, h);
  GroupAlgebraElement a(W);
  for (unsigned j = 0; j < hp.order; ++j) {
    if (ks[j] == 0) continue;
    Rational w = ks[j] * static_cast<long>(hp.order);
    a += epsilon_element(W, h, j) * Cyclotomic(w);
  }
  return a;
}

GroupAlgebraElement gamma_element(const ReflectionGroup& W, int h, const ParameterSet& k) {
  GroupAlgebraElement a = a_element(W, h, k);
  return a.det_inverse_twist() - a;
}

}  // namespace chered

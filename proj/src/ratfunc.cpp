#include "chered/ratfunc.hpp"

#include <sstream>

#include "chered/error.hpp"

namespace chered {

RatFunc::RatFunc(const LinearFormTable* t, Poly num)
    : table_(t), num_(std::move(num)) {
  if (num_.nvars() != t->nvars) throw Error("ratfunc: arity mismatch");
}

RatFunc::RatFunc(const LinearFormTable* t, Poly num, std::map<int, unsigned> den)
    : table_(t), num_(std::move(num)), den_(std::move(den)) {
  if (num_.nvars() != t->nvars) throw Error("ratfunc: arity mismatch");
  std::erase_if(den_, [](const auto& e) { return e.second == 0; });
  cancel_();
}

RatFunc RatFunc::constant(const LinearFormTable* t, const Cyclotomic& c) {
  return RatFunc(t, Poly::constant(t->nvars, c));
}

Poly RatFunc::denominator_poly() const {
  Poly d = Poly::constant(table_->nvars, Cyclotomic(1));
  for (const auto& [h, e] : den_) d = d * table_->form_poly(h).pow(e);
  return d;
}

void RatFunc::cancel_() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0) {
      auto q = num_.try_divide_linear(table_->forms.at(it->first));
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (table_ != o.table_) throw Error("ratfunc: table mismatch");
  std::map<int, unsigned> den;
  for (const auto& [h, e] : den_) den[h] = e;
  for (const auto& [h, e] : o.den_) {
    auto it = den.find(h);
    if (it == den.end())
      den[h] = e;
    else
      it->second = std::max(it->second, e);
  }
  auto scale = [&](const Poly& n, const std::map<int, unsigned>& have) {
    Poly out = n;
    for (const auto& [h, e] : den) {
      unsigned got = 0;
      if (auto it = have.find(h); it != have.end()) got = it->second;
      for (unsigned i = got; i < e; ++i) out = out * table_->form_poly(h);
    }
    return out;
  };
  num_ = scale(num_, den_) + scale(o.num_, o.den_);
  den_ = std::move(den);
  cancel_();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.table_ != b.table_) throw Error("ratfunc: table mismatch");
  std::map<int, unsigned> den = a.den_;
  for (const auto& [h, e] : b.den_) den[h] += e;
  return RatFunc(a.table_, a.num_ * b.num_, std::move(den));
}

RatFunc RatFunc::operator*(const Cyclotomic& c) const {
  if (c.is_zero()) return RatFunc(table_);
  RatFunc out = *this;
  out.num_ = out.num_ * c;
  return out;
}

bool RatFunc::operator==(const RatFunc& o) const {
  return den_ == o.den_ && num_ == o.num_;
}

RatFunc RatFunc::derivative(unsigned i) const {
  RatFunc out(table_, num_.derivative(i), den_);
  for (const auto& [h, e] : den_) {
    const Cyclotomic& c = table_->forms.at(h).at(i);
    if (c.is_zero()) continue;
    std::map<int, unsigned> den = den_;
    ++den[h];
    out += RatFunc(table_, num_ * (c * Rational(-static_cast<long>(e))), std::move(den));
  }
  return out;
}

Cyclotomic RatFunc::evaluate(const CycVector& point) const {
  Cyclotomic d(1);
  for (const auto& [h, e] : den_) {
    Cyclotomic v = table_->form_poly(h).evaluate(point);
    if (v.is_zero()) throw Error("ratfunc: pole at evaluation point");
    for (unsigned i = 0; i < e; ++i) d *= v;
  }
  return num_.evaluate(point) * d.inverse();
}

std::string RatFunc::str() const {
  std::ostringstream os;
  os << "[" << num_.str() << "]";
  if (!den_.empty()) {
    os << "/(";
    bool first = true;
    for (const auto& [h, e] : den_) {
      if (!first) os << "*";
      first = false;
      os << "A" << h;
      if (e > 1) os << "^" << e;
    }
    os << ")";
  }
  return os.str();
}

}  // namespace chered

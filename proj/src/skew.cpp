#include "chered/skew.hpp"

#include <algorithm>
#include <sstream>

#include "chered/error.hpp"

namespace chered {

namespace {

LinearFormTable make_table(const ReflectionGroup& W) {
  LinearFormTable t;
  t.nvars = W.rank();
  for (const auto& h : W.hyperplanes()) t.forms.push_back(h.alpha);
  return t;
}

Cyclotomic pairing(const CycVector& covector, const CycVector& vec) {
  Cyclotomic acc;
  for (std::size_t i = 0; i < covector.size(); ++i) acc += covector[i] * vec[i];
  return acc;
}

}  // namespace

SkewContext SkewContext::subgroup_pair(const ReflectionGroup& W, const SubgroupLattice& L,
                                       int node) {
  SkewContext c;
  c.W_ = &W;
  c.L_ = &L;
  c.flavor_ = Flavor::Subgroup;
  c.node_ = node;
  c.carrier_ = L.node(node).normalizer;
  c.member_.assign(W.size(), 0);
  for (int g : c.carrier_) c.member_[g] = 1;
  c.hyps_ = L.node(node).hyperplanes;
  c.table_ = make_table(W);
  return c;
}

SkewContext SkewContext::lattice_pair(const ReflectionGroup& W, const SubgroupLattice& L) {
  SkewContext c;
  c.W_ = &W;
  c.L_ = &L;
  c.flavor_ = Flavor::Lattice;
  c.node_ = L.bottom();
  c.carrier_.resize(W.size());
  for (std::size_t g = 0; g < W.size(); ++g) c.carrier_[g] = static_cast<int>(g);
  c.member_.assign(W.size(), 1);
  c.hyps_.resize(W.hyperplanes().size());
  for (std::size_t h = 0; h < c.hyps_.size(); ++h) c.hyps_[h] = static_cast<int>(h);
  c.table_ = make_table(W);
  return c;
}

RatFunc SkewContext::act(int w, const RatFunc& f) const {
  int wi = W_->inverse(w);
  Poly num = f.numerator().substitute_linear(W_->matrix(wi));
  std::map<int, unsigned> den;
  Cyclotomic scale(1);
  for (const auto& [h, e] : f.denominator()) {
    den[W_->hyperplane_image(w, h)] += e;
    Cyclotomic cinv = W_->alpha_scale(w, h).inverse();
    for (unsigned i = 0; i < e; ++i) scale *= cinv;
  }
  return RatFunc(&table_, num * scale, std::move(den));
}

Poly SkewContext::conjugate_derivative(int w, const Monomial& dpow) const {
  const unsigned n = W_->rank();
  Poly out = Poly::constant(n, Cyclotomic(1));
  const CycMatrix& m = W_->matrix(w);
  for (unsigned i = 0; i < n; ++i) {
    if (dpow[i] == 0) continue;
    CycVector col(n);
    for (unsigned j = 0; j < n; ++j) col[j] = m.at(j, i);
    out = out * Poly::linear_form(col).pow(dpow[i]);
  }
  return out;
}

SkewOperator SkewOperator::one(const SkewContext* ctx) {
  return function(ctx, RatFunc::constant(&ctx->table(), Cyclotomic(1)));
}

SkewOperator SkewOperator::function(const SkewContext* ctx, RatFunc f) {
  SkewOperator op(ctx);
  op.add_term(SkewKey{Monomial(ctx->group().rank(), 0), ctx->flavor() == Flavor::Lattice
                                                            ? ctx->lattice().bottom()
                                                            : -1,
                      0},
              std::move(f));
  return op;
}

SkewOperator SkewOperator::coordinate(const SkewContext* ctx, unsigned i) {
  return function(ctx, RatFunc(&ctx->table(), Poly::variable(ctx->group().rank(), i)));
}

SkewOperator SkewOperator::covector(const SkewContext* ctx, const CycVector& x) {
  return function(ctx, RatFunc(&ctx->table(), Poly::linear_form(x)));
}

SkewOperator SkewOperator::derivative(const SkewContext* ctx, const CycVector& y) {
  SkewOperator op(ctx);
  const unsigned n = ctx->group().rank();
  int lam = ctx->flavor() == Flavor::Lattice ? ctx->lattice().bottom() : -1;
  for (unsigned i = 0; i < n; ++i) {
    if (y.at(i).is_zero()) continue;
    Monomial d(n, 0);
    d[i] = 1;
    op.add_term(SkewKey{d, lam, 0}, RatFunc::constant(&ctx->table(), y[i]));
  }
  return op;
}

SkewOperator SkewOperator::group_element(const SkewContext* ctx, int w) {
  if (!ctx->in_carrier(w)) throw Error("skew: element outside the carrier");
  SkewOperator op(ctx);
  int lam = ctx->flavor() == Flavor::Lattice ? ctx->lattice().bottom() : -1;
  op.add_term(SkewKey{Monomial(ctx->group().rank(), 0), lam, w},
              RatFunc::constant(&ctx->table(), Cyclotomic(1)));
  return op;
}

SkewOperator SkewOperator::group_sum(const SkewContext* ctx, const GroupAlgebraElement& a) {
  SkewOperator op(ctx);
  int lam = ctx->flavor() == Flavor::Lattice ? ctx->lattice().bottom() : -1;
  for (const auto& [g, c] : a.terms()) {
    if (!ctx->in_carrier(g)) throw Error("skew: element outside the carrier");
    op.add_term(SkewKey{Monomial(ctx->group().rank(), 0), lam, g},
                RatFunc::constant(&ctx->table(), c));
  }
  return op;
}

SkewOperator SkewOperator::idempotent(const SkewContext* ctx, int node) {
  if (ctx->flavor() != Flavor::Lattice) throw Error("skew: idempotent needs Lattice flavor");
  SkewOperator op(ctx);
  op.add_term(SkewKey{Monomial(ctx->group().rank(), 0), node, 0},
              RatFunc::constant(&ctx->table(), Cyclotomic(1)));
  return op;
}

void SkewOperator::add_term(const SkewKey& k, const RatFunc& f) {
  if (f.is_zero()) return;
  auto [it, fresh] = terms_.emplace(k, f);
  if (!fresh) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SkewOperator& SkewOperator::operator+=(const SkewOperator& o) {
  if (!ctx_) ctx_ = o.ctx_;
  if (ctx_ != o.ctx_) throw Error("skew: context mismatch");
  for (const auto& [k, f] : o.terms_) add_term(k, f);
  return *this;
}

SkewOperator& SkewOperator::operator-=(const SkewOperator& o) { return *this += -o; }

SkewOperator SkewOperator::operator-() const {
  SkewOperator out(ctx_);
  for (const auto& [k, f] : terms_) out.terms_.emplace(k, -f);
  return out;
}

namespace {

// One normal-ordered term product. The left group element sweeps the right
// coefficient and derivatives, idempotents join after transport, and the
// multi-index Leibniz rule reorders derivatives past the swept coefficient.
void multiply_term(SkewOperator& out, const SkewContext& ctx, const SkewKey& k1,
                   const RatFunc& f1, const SkewKey& k2, const RatFunc& f2) {
  const ReflectionGroup& W = ctx.group();
  const unsigned n = W.rank();
  RatFunc g = ctx.act(k1.w, f2);
  Poly dpoly = ctx.conjugate_derivative(k1.w, k2.dpow);
  int lam = -1;
  if (ctx.flavor() == Flavor::Lattice)
    lam = ctx.lattice().join(k1.lam, ctx.lattice().act(k1.w, k2.lam));
  const int w = W.product(k1.w, k2.w);

  Monomial c(n, 0);
  for (;;) {
    Rational mult(1);
    for (unsigned i = 0; i < n; ++i) mult *= Rational(binomial(k1.dpow[i], c[i]));
    RatFunc part = g;
    for (unsigned i = 0; i < n && !part.is_zero(); ++i)
      for (unsigned e = c[i]; e < k1.dpow[i]; ++e) part = part.derivative(i);
    if (!part.is_zero()) {
      Poly shifted = Poly::term(c, Cyclotomic(1)) * dpoly;
      for (const auto& [m, q] : shifted.terms())
        out.add_term(SkewKey{m, lam, w}, f1 * part * (q * Cyclotomic(mult)));
    }
    unsigned i = 0;
    while (i < n && c[i] == k1.dpow[i]) c[i++] = 0;
    if (i == n) break;
    ++c[i];
  }
}

}  // namespace

SkewOperator operator*(const SkewOperator& a, const SkewOperator& b) {
  if (a.ctx_ != b.ctx_) throw Error("skew: context mismatch");
  SkewOperator out(a.ctx_);
  for (const auto& [k1, f1] : a.terms_)
    for (const auto& [k2, f2] : b.terms_) multiply_term(out, *a.ctx_, k1, f1, k2, f2);
  return out;
}

SkewOperator SkewOperator::operator*(const Cyclotomic& c) const {
  SkewOperator out(ctx_);
  if (c.is_zero()) return out;
  for (const auto& [k, f] : terms_) out.add_term(k, f * c);
  return out;
}

bool SkewOperator::operator==(const SkewOperator& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (a->first != b->first || a->second != b->second) return false;
  return true;
}

SkewOperator SkewOperator::conjugated_by(int g) const {
  return group_element(ctx_, g) * (*this) * group_element(ctx_, ctx_->group().inverse(g));
}

int SkewOperator::order() const {
  int d = -1;
  for (const auto& [k, f] : terms_) d = std::max(d, static_cast<int>(monomial_degree(k.dpow)));
  return d;
}

SkewOperator SkewOperator::part_of_order(int d) const {
  SkewOperator out(ctx_);
  for (const auto& [k, f] : terms_)
    if (static_cast<int>(monomial_degree(k.dpow)) == d) out.terms_.emplace(k, f);
  return out;
}

std::string SkewOperator::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, f] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << f.str();
    if (monomial_degree(k.dpow) > 0) {
      os << "*d(";
      bool fi = true;
      for (std::size_t i = 0; i < k.dpow.size(); ++i) {
        if (k.dpow[i] == 0) continue;
        if (!fi) os << ",";
        fi = false;
        os << i;
        if (k.dpow[i] > 1) os << "^" << k.dpow[i];
      }
      os << ")";
    }
    if (k.lam >= 0) os << "*e" << k.lam;
    os << "*w" << k.w;
  }
  return os.str();
}

SkewOperator commutator(const SkewOperator& a, const SkewOperator& b) {
  return a * b - b * a;
}

SkewOperator symbol_product(const SkewOperator& a, const SkewOperator& b) {
  if (a.context().flavor() != b.context().flavor())
    throw Error("skew: context mismatch");
  const SkewContext& ctx = a.context();
  SkewOperator out(&ctx);
  for (const auto& [k1, f1] : a.terms())
    for (const auto& [k2, f2] : b.terms()) {
      RatFunc g = ctx.act(k1.w, f2);
      Poly dpoly = Poly::term(k1.dpow, Cyclotomic(1)) *
                   ctx.conjugate_derivative(k1.w, k2.dpow);
      int lam = -1;
      if (ctx.flavor() == Flavor::Lattice)
        lam = ctx.lattice().join(k1.lam, ctx.lattice().act(k1.w, k2.lam));
      int w = ctx.group().product(k1.w, k2.w);
      for (const auto& [m, q] : dpoly.terms())
        out.add_term(SkewKey{m, lam, w}, f1 * g * q);
    }
  return out;
}

SkewOperator reflection_sum(const SkewContext* ctx, int h, const ParameterSet& k) {
  GroupAlgebraElement a = a_element(ctx->group(), h, k);
  SkewOperator op = SkewOperator::group_sum(ctx, a);
  if (ctx->flavor() == Flavor::Lattice)
    op = op * SkewOperator::idempotent(ctx, ctx->atom_node(h));
  return op;
}

SkewOperator dunkl_operator(const SkewContext* ctx, const CycVector& y,
                            const ParameterSet& k) {
  SkewOperator op = SkewOperator::derivative(ctx, y);
  const ReflectionGroup& W = ctx->group();
  for (int h : ctx->active_hyperplanes()) {
    Cyclotomic ay = pairing(W.hyperplanes().at(h).alpha, y);
    if (ay.is_zero()) continue;
    int lam = ctx->flavor() == Flavor::Lattice ? ctx->atom_node(h) : -1;
    GroupAlgebraElement a = a_element(W, h, k);
    for (const auto& [g, c] : a.terms()) {
      RatFunc coeff(&ctx->table(), Poly::constant(W.rank(), ay * c), {{h, 1}});
      op.add_term(SkewKey{Monomial(W.rank(), 0), lam, g}, coeff);
    }
  }
  return op;
}

SkewOperator euler_operator(const SkewContext* ctx, const ParameterSet& k) {
  const unsigned n = ctx->group().rank();
  SkewOperator acc(ctx);
  for (unsigned i = 0; i < n; ++i) {
    CycVector ei(n);
    ei[i] = Cyclotomic(1);
    acc += SkewOperator::coordinate(ctx, i) * dunkl_operator(ctx, ei, k);
  }
  for (int h : ctx->active_hyperplanes()) acc -= reflection_sum(ctx, h, k);
  return acc;
}

SkewOperator euler_vector_field(const SkewContext* ctx) {
  const unsigned n = ctx->group().rank();
  SkewOperator acc(ctx);
  for (unsigned i = 0; i < n; ++i) {
    CycVector ei(n);
    ei[i] = Cyclotomic(1);
    acc += SkewOperator::coordinate(ctx, i) * SkewOperator::derivative(ctx, ei);
  }
  return acc;
}

SkewOperator specialize_idempotents(const SkewOperator& op, const SkewContext* target) {
  if (op.context().flavor() != Flavor::Lattice || target->flavor() != Flavor::Subgroup)
    throw Error("skew: specialization maps Lattice flavor onto Subgroup flavor");
  SkewOperator out(target);
  for (const auto& [k, f] : op.terms()) {
    if (!target->in_carrier(k.w)) throw Error("skew: element outside the carrier");
    out.add_term(SkewKey{k.dpow, -1, k.w},
                 RatFunc(&target->table(), f.numerator(), f.denominator()));
  }
  return out;
}

}  // namespace chered

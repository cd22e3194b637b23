#include "chered/straighten.hpp"

#include <algorithm>
#include <sstream>

#include "chered/error.hpp"

namespace chered {

Cyclotomic NormalElement::coeff(const NormalKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

void NormalElement::add_term(const NormalKey& k, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int NormalElement::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_)
    d = std::max(d, static_cast<int>(monomial_degree(k.xpow) + monomial_degree(k.ypow)));
  return d;
}

NormalElement& NormalElement::operator+=(const NormalElement& o) {
  if (!A_) A_ = o.A_;
  if (A_ != o.A_) throw Error("straighten: algebra mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

NormalElement& NormalElement::operator-=(const NormalElement& o) { return *this += -o; }

NormalElement NormalElement::operator-() const {
  NormalElement out(A_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

NormalElement operator*(const NormalElement& a, const NormalElement& b) {
  return a.algebra().product(a, b);
}

NormalElement NormalElement::operator*(const Cyclotomic& c) const {
  NormalElement out(A_);
  if (c.is_zero()) return out;
  for (const auto& [k, t] : terms_) out.add_term(k, t * c);
  return out;
}

bool NormalElement::operator==(const NormalElement& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (a->first != b->first || !(a->second == b->second)) return false;
  return true;
}

std::string NormalElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (monomial_degree(k.xpow) > 0) os << "*x[" << chered::str(k.xpow) << "]";
    if (k.lam >= 0) os << "*e" << k.lam;
    os << "*w" << k.w;
    if (monomial_degree(k.ypow) > 0) os << "*y[" << chered::str(k.ypow) << "]";
  }
  return os.str();
}

CherednikAlgebra::CherednikAlgebra(const SkewContext* ctx, ParameterSet k)
    : ctx_(ctx), k_(std::move(k)) {
  const ReflectionGroup& W = ctx_->group();
  k_.validate(W);
  const unsigned n = W.rank();
  gamma_.resize(W.hyperplanes().size(), GroupAlgebraElement(W));
  cpair_.resize(W.hyperplanes().size());
  for (int h : ctx_->active_hyperplanes()) {
    gamma_[h] = gamma_element(W, h, k_);
    const Hyperplane& hp = W.hyperplanes()[h];
    Cyclotomic d = Cyclotomic();
    for (unsigned i = 0; i < n; ++i) d += hp.alpha[i] * hp.v[i];
    Cyclotomic dinv = d.inverse();
    cpair_[h].assign(n * n, Cyclotomic());
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) cpair_[h][i * n + j] = hp.alpha[j] * hp.v[i] * dinv;
  }
}

NormalElement CherednikAlgebra::scalar(const Cyclotomic& c) const {
  NormalElement e(this);
  const unsigned n = ctx_->group().rank();
  e.add_term(NormalKey{Monomial(n, 0), base_lam_(), 0, Monomial(n, 0)}, c);
  return e;
}

int CherednikAlgebra::base_lam_() const {
  return ctx_->flavor() == Flavor::Lattice ? ctx_->lattice().bottom() : -1;
}

NormalElement CherednikAlgebra::x(unsigned i) const {
  const unsigned n = ctx_->group().rank();
  Monomial m(n, 0);
  m[i] = 1;
  NormalElement e(this);
  e.add_term(NormalKey{m, base_lam_(), 0, Monomial(n, 0)}, Cyclotomic(1));
  return e;
}

NormalElement CherednikAlgebra::y(unsigned i) const {
  const unsigned n = ctx_->group().rank();
  Monomial m(n, 0);
  m[i] = 1;
  NormalElement e(this);
  e.add_term(NormalKey{Monomial(n, 0), base_lam_(), 0, m}, Cyclotomic(1));
  return e;
}

NormalElement CherednikAlgebra::group(int w) const {
  if (!ctx_->in_carrier(w)) throw Error("straighten: element outside the carrier");
  const unsigned n = ctx_->group().rank();
  NormalElement e(this);
  e.add_term(NormalKey{Monomial(n, 0), base_lam_(), w, Monomial(n, 0)}, Cyclotomic(1));
  return e;
}

NormalElement CherednikAlgebra::idem(int node) const {
  if (ctx_->flavor() != Flavor::Lattice)
    throw Error("straighten: idempotent needs Lattice flavor");
  const unsigned n = ctx_->group().rank();
  NormalElement e(this);
  e.add_term(NormalKey{Monomial(n, 0), node, 0, Monomial(n, 0)}, Cyclotomic(1));
  return e;
}

NormalElement CherednikAlgebra::monomial(const NormalKey& k) const {
  NormalElement e(this);
  e.add_term(k, Cyclotomic(1));
  return e;
}

NormalElement CherednikAlgebra::euler() const {
  const ReflectionGroup& W = ctx_->group();
  const unsigned n = W.rank();
  NormalElement e(this);
  for (unsigned i = 0; i < n; ++i) {
    Monomial m(n, 0);
    m[i] = 1;
    e.add_term(NormalKey{m, base_lam_(), 0, m}, Cyclotomic(1));
  }
  for (int h : ctx_->active_hyperplanes()) {
    int lam = ctx_->flavor() == Flavor::Lattice ? ctx_->atom_node(h) : -1;
    GroupAlgebraElement a = a_element(W, h, k_);
    for (const auto& [g, c] : a.terms())
      e.add_term(NormalKey{Monomial(n, 0), lam, g, Monomial(n, 0)}, -c);
  }
  return e;
}

Word CherednikAlgebra::word_of(const NormalKey& k) const {
  Word w;
  for (std::size_t i = 0; i < k.xpow.size(); ++i)
    for (unsigned e = 0; e < k.xpow[i]; ++e) w.push_back({Letter::X, static_cast<int>(i)});
  if (k.lam >= 0 && k.lam != ctx_->lattice().bottom()) w.push_back({Letter::E, k.lam});
  if (k.w != 0) w.push_back({Letter::G, k.w});
  for (std::size_t i = 0; i < k.ypow.size(); ++i)
    for (unsigned e = 0; e < k.ypow[i]; ++e) w.push_back({Letter::Y, static_cast<int>(i)});
  return w;
}

NormalKey CherednikAlgebra::key_of_(const Word& w) const {
  const unsigned n = ctx_->group().rank();
  NormalKey k{Monomial(n, 0), base_lam_(), 0, Monomial(n, 0)};
  for (const Letter& l : w) {
    switch (l.kind) {
      case Letter::X: ++k.xpow[l.idx]; break;
      case Letter::E: k.lam = l.idx; break;
      case Letter::G: k.w = l.idx; break;
      case Letter::Y: ++k.ypow[l.idx]; break;
    }
  }
  return k;
}

bool CherednikAlgebra::reducible_(const Letter& a, const Letter& b) const {
  if (a.kind != b.kind) return a.kind > b.kind;
  switch (a.kind) {
    case Letter::X:
    case Letter::Y: return a.idx > b.idx;
    case Letter::E:
    case Letter::G: return true;
  }
  return false;
}

// Local rules. Every branch either swaps the pair into normal order, merges
// it, or replaces it by strictly fewer x/y letters, so rewriting terminates.
std::vector<CherednikAlgebra::Branch> CherednikAlgebra::rewrite_(const Letter& a,
                                                                 const Letter& b) const {
  const ReflectionGroup& W = ctx_->group();
  const unsigned n = W.rank();
  std::vector<Branch> out;
  if (a.kind == b.kind) {
    switch (a.kind) {
      case Letter::X:
      case Letter::Y:
        out.push_back({{b, a}, Cyclotomic(1)});
        break;
      case Letter::E:
        out.push_back({{{Letter::E, ctx_->lattice().join(a.idx, b.idx)}}, Cyclotomic(1)});
        break;
      case Letter::G:
        out.push_back({{{Letter::G, W.product(a.idx, b.idx)}}, Cyclotomic(1)});
        break;
    }
    return out;
  }
  if (a.kind == Letter::Y && b.kind == Letter::X) {
    out.push_back({{b, a}, Cyclotomic(1)});
    if (a.idx == b.idx) out.push_back({{}, Cyclotomic(1)});
    for (int h : ctx_->active_hyperplanes()) {
      const Cyclotomic& c = cpair_[h][b.idx * n + a.idx];
      if (c.is_zero()) continue;
      for (const auto& [g, gc] : gamma_[h].terms()) {
        Branch br;
        if (ctx_->flavor() == Flavor::Lattice)
          br.letters.push_back({Letter::E, ctx_->atom_node(h)});
        br.letters.push_back({Letter::G, g});
        br.coeff = c * gc;
        out.push_back(std::move(br));
      }
    }
    return out;
  }
  if (a.kind == Letter::Y && b.kind == Letter::G) {
    const CycMatrix& m = W.matrix(W.inverse(b.idx));
    for (unsigned i = 0; i < n; ++i) {
      Cyclotomic c = m.at(i, a.idx);
      if (!c.is_zero()) out.push_back({{b, {Letter::Y, static_cast<int>(i)}}, c});
    }
    return out;
  }
  if (a.kind == Letter::Y && b.kind == Letter::E) {
    out.push_back({{b, a}, Cyclotomic(1)});
    return out;
  }
  if (a.kind == Letter::G && b.kind == Letter::X) {
    const CycMatrix& m = W.matrix(W.inverse(a.idx));
    for (unsigned l = 0; l < n; ++l) {
      Cyclotomic c = m.at(b.idx, l);
      if (!c.is_zero()) out.push_back({{{Letter::X, static_cast<int>(l)}, a}, c});
    }
    return out;
  }
  if (a.kind == Letter::G && b.kind == Letter::E) {
    out.push_back({{{Letter::E, ctx_->lattice().act(a.idx, b.idx)}, a}, Cyclotomic(1)});
    return out;
  }
  if (a.kind == Letter::E && b.kind == Letter::X) {
    out.push_back({{b, a}, Cyclotomic(1)});
    return out;
  }
  throw Error("straighten: no rule for pair");
}

NormalElement CherednikAlgebra::straighten(const Word& w, PeelSide side) const {
  std::map<Word, Cyclotomic> frontier;
  frontier.emplace(w, Cyclotomic(1));
  NormalElement out(this);
  while (!frontier.empty()) {
    auto node = frontier.extract(frontier.begin());
    const Word& word = node.key();
    const Cyclotomic& coeff = node.mapped();
    if (coeff.is_zero()) continue;
    int pos = -1;
    if (side == PeelSide::Left) {
      for (std::size_t p = 0; p + 1 < word.size(); ++p)
        if (reducible_(word[p], word[p + 1])) {
          pos = static_cast<int>(p);
          break;
        }
    } else {
      for (std::size_t p = word.size(); p-- > 1;)
        if (reducible_(word[p - 1], word[p])) {
          pos = static_cast<int>(p - 1);
          break;
        }
    }
    if (pos < 0) {
      out.add_term(key_of_(word), coeff);
      continue;
    }
    for (const Branch& br : rewrite_(word[pos], word[pos + 1])) {
      Word next;
      next.reserve(word.size() + br.letters.size() - 2);
      next.insert(next.end(), word.begin(), word.begin() + pos);
      next.insert(next.end(), br.letters.begin(), br.letters.end());
      next.insert(next.end(), word.begin() + pos + 2, word.end());
      Cyclotomic c = coeff * br.coeff;
      auto [it, fresh] = frontier.emplace(std::move(next), c);
      if (!fresh) it->second += c;
    }
  }
  return out;
}

NormalElement CherednikAlgebra::product(const NormalElement& a, const NormalElement& b,
                                        PeelSide side) const {
  NormalElement out(this);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Word w = word_of(ka);
      Word wb = word_of(kb);
      w.insert(w.end(), wb.begin(), wb.end());
      out += straighten(w, side) * (ca * cb);
    }
  return out;
}

NormalElement CherednikAlgebra::commutator(const NormalElement& a,
                                           const NormalElement& b) const {
  return product(a, b) - product(b, a);
}

SkewOperator CherednikAlgebra::skew_image(const NormalElement& a) const {
  const unsigned n = ctx_->group().rank();
  std::vector<SkewOperator> dunkl;
  for (unsigned i = 0; i < n; ++i) {
    CycVector ei(n);
    ei[i] = Cyclotomic(1);
    dunkl.push_back(dunkl_operator(ctx_, ei, k_));
  }
  SkewOperator out(ctx_);
  for (const auto& [k, c] : a.terms()) {
    Poly xs = Poly::constant(n, c);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned e = 0; e < k.xpow[i]; ++e) xs = xs * Poly::variable(n, i);
    SkewOperator t = SkewOperator::function(ctx_, RatFunc(&ctx_->table(), xs));
    if (k.lam >= 0) t = t * SkewOperator::idempotent(ctx_, k.lam);
    if (k.w != 0) t = t * SkewOperator::group_element(ctx_, k.w);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned e = 0; e < k.ypow[i]; ++e) t = t * dunkl[i];
    out += t;
  }
  return out;
}

}  // namespace chered

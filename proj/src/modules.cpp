#include "chered/modules.hpp"

#include <algorithm>
#include <utility>

#include "chered/error.hpp"
#include "chered/group_algebra.hpp"

namespace chered {
namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw CheckError(msg);
}

unsigned node_position(const std::vector<int>& nodes, int node) {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), node);
  require(it != nodes.end() && *it == node, "node outside the module orbit");
  return static_cast<unsigned>(it - nodes.begin());
}

/// All exponent vectors of length n with entry sum d, in ascending lex
/// order (the map order used everywhere else).
std::vector<Monomial> monomials_of_degree(unsigned n, unsigned d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  Monomial cur(n, 0);
  auto rec = [&](auto&& self, unsigned i, unsigned r) -> void {
    if (i + 1 == n) {
      cur[i] = r;
      out.push_back(cur);
      cur[i] = 0;
      return;
    }
    for (unsigned v = 0; v <= r; ++v) {
      cur[i] = v;
      self(self, i + 1, r - v);
    }
    cur[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

Cyclotomic scalar_of(const CycMatrix& M, const char* msg) {
  require(M.rows() == M.cols() && M.rows() > 0, msg);
  Cyclotomic s = M.at(0, 0);
  for (unsigned i = 0; i < M.rows(); ++i)
    for (unsigned j = 0; j < M.cols(); ++j)
      require(i == j ? M.at(i, j) == s : M.at(i, j).is_zero(), msg);
  return s;
}

}  // namespace

CycMatrix SimpleModule::act_group(int w) const {
  const ReflectionGroup& W = L->group();
  const unsigned d = chi.dim;
  CycMatrix M(dim, dim);
  for (unsigned p = 0; p < nodes.size(); ++p) {
    unsigned q = node_position(nodes, L->act(w, nodes[p]));
    int n = W.product(W.inverse(transversal[q]), W.product(w, transversal[p]));
    const CycMatrix& B = chi.image_of(n);
    for (unsigned i = 0; i < d; ++i)
      for (unsigned j = 0; j < d; ++j) M.at(q * d + i, p * d + j) = B.at(i, j);
  }
  return M;
}

CycMatrix SimpleModule::act_idem(int node) const {
  const unsigned d = chi.dim;
  CycMatrix M(dim, dim);
  const Cyclotomic one{Rational(1)};
  for (unsigned p = 0; p < nodes.size(); ++p)
    if (L->leq(node, nodes[p]))
      for (unsigned i = 0; i < d; ++i) M.at(p * d + i, p * d + i) = one;
  return M;
}

SimpleModule build_simple(const SubgroupLattice& L, int orbit_index, Irrep chi) {
  const ReflectionGroup& W = L.group();
  SimpleModule E;
  E.L = &L;
  E.orbit_index = orbit_index;
  E.nodes = L.orbits().at(static_cast<std::size_t>(orbit_index));
  E.base_node = E.nodes.front();
  require(L.node(E.base_node).normalizer == chi.elements,
          "irrep is not one of the base normalizer");
  E.chi = std::move(chi);
  E.dim = static_cast<unsigned>(E.nodes.size()) * E.chi.dim;
  E.name = "orb" + std::to_string(orbit_index) + "." + E.chi.name;
  E.transversal.assign(E.nodes.size(), -1);
  for (std::size_t p = 0; p < E.nodes.size(); ++p) {
    for (int w = 0; w < static_cast<int>(W.size()); ++w)
      if (L.act(w, E.base_node) == E.nodes[p]) {
        E.transversal[p] = w;
        break;
      }
    require(E.transversal[p] >= 0, "orbit node unreachable from the base");
  }

  // Module axioms, exactly: generators against every group element, the
  // crossed relation against every node, and the idempotent semilattice.
  require(E.act_group(0).is_identity(), "identity must act as the identity");
  for (int g : W.generator_ids()) {
    const CycMatrix Mg = E.act_group(g);
    for (int h = 0; h < static_cast<int>(W.size()); ++h)
      require(Mg * E.act_group(h) == E.act_group(W.product(g, h)),
              "group action is not a homomorphism");
    for (int nu = 0; nu < static_cast<int>(L.size()); ++nu)
      require(Mg * E.act_idem(nu) == E.act_idem(L.act(g, nu)) * Mg,
              "crossed relation fails on the simple");
  }
  for (int a = 0; a < static_cast<int>(L.size()); ++a)
    for (int b = a; b < static_cast<int>(L.size()); ++b)
      require(E.act_idem(a) * E.act_idem(b) == E.act_idem(L.join(a, b)),
              "idempotent images do not multiply along joins");
  return E;
}

std::vector<SimpleModule> simple_modules(const SubgroupLattice& L) {
  const ReflectionGroup& W = L.group();
  std::vector<SimpleModule> out;
  for (std::size_t o = 0; o < L.orbits().size(); ++o) {
    int base = L.orbits()[o].front();
    for (Irrep& chi : subgroup_irreps(W, L.node(base).normalizer))
      out.push_back(build_simple(L, static_cast<int>(o), std::move(chi)));
  }
  return out;
}

Cyclotomic central_scalar(const SimpleModule& E, const ParameterSet& k) {
  const SubgroupLattice& L = *E.L;
  const ReflectionGroup& W = L.group();
  k.validate(W);
  CycMatrix M(E.dim, E.dim);
  for (int h = 0; h < static_cast<int>(W.hyperplanes().size()); ++h) {
    const CycMatrix P = E.act_idem(L.atom(h));
    GroupAlgebraElement a = a_element(W, h, k);
    for (const auto& [g, c] : a.terms()) M = M + E.act_group(g) * P * c;
  }
  return scalar_of(M, "hyperplane sum is not scalar on the simple");
}

Cyclotomic central_scalar(const SkewContext& ctx, const Irrep& chi, const ParameterSet& k) {
  const ReflectionGroup& W = ctx.group();
  require(ctx.flavor() == Flavor::Subgroup, "carrier scalar needs the subgroup flavor");
  require(chi.elements == ctx.carrier(), "irrep is not one of the carrier");
  k.validate(W);
  CycMatrix M(chi.dim, chi.dim);
  for (int h : ctx.active_hyperplanes()) {
    GroupAlgebraElement a = a_element(W, h, k);
    for (const auto& [g, c] : a.terms()) M = M + chi.image_of(g) * c;
  }
  return scalar_of(M, "hyperplane sum is not scalar through the irrep");
}

COrder order_compare(const Cyclotomic& cE, const Cyclotomic& cF) {
  const std::optional<Rational> d = (cE - cF).as_rational();
  if (!d || d->get_den() != 1 || *d == 0) return COrder::Incomparable;
  return *d > 0 ? COrder::Greater : COrder::Less;
}

StandardModule::StandardModule(const CherednikAlgebra& A, SimpleModule E, unsigned degree_cap)
    : A_(&A), E_(std::move(E)), cap_(degree_cap), fdim_(E_->dim) {
  require(A.context().flavor() == Flavor::Lattice, "simple fibers need the lattice flavor");
  require(E_->L == &A.context().lattice(), "fiber lattice differs from the algebra's");
  const unsigned n = A.context().group().rank();
  for (unsigned d = 0; d <= cap_; ++d) mons_.push_back(monomials_of_degree(n, d));
}

StandardModule::StandardModule(const CherednikAlgebra& A, Irrep chi, unsigned degree_cap)
    : A_(&A), chi_(std::move(chi)), cap_(degree_cap), fdim_(chi_->dim) {
  require(A.context().flavor() == Flavor::Subgroup, "carrier fibers need the subgroup flavor");
  require(chi_->elements == A.context().carrier(), "irrep is not one of the carrier");
  const unsigned n = A.context().group().rank();
  for (unsigned d = 0; d <= cap_; ++d) mons_.push_back(monomials_of_degree(n, d));
}

unsigned StandardModule::slice_dim(unsigned i) const {
  return static_cast<unsigned>(mons_.at(i).size()) * fdim_;
}

Cyclotomic StandardModule::lowest_scalar(const ParameterSet& k) const {
  if (E_) return central_scalar(*E_, k);
  return central_scalar(A_->context(), *chi_, k);
}

CycMatrix StandardModule::fiber_(int lam, int w) const {
  if (!E_) return chi_->image_of(w);
  CycMatrix M = E_->act_group(w);
  if (lam >= 0) M = E_->act_idem(lam) * M;
  return M;
}

CycMatrix StandardModule::action(const NormalElement& op, unsigned src, unsigned dst) const {
  const std::vector<Monomial>& smons = mons_.at(src);
  const std::vector<Monomial>& dmons = mons_.at(dst);
  std::map<Monomial, unsigned> dindex;
  for (unsigned t = 0; t < dmons.size(); ++t) dindex.emplace(dmons[t], t);
  const unsigned n = A_->context().group().rank();
  const int lam0 = E_ ? A_->context().lattice().bottom() : -1;
  const Monomial ytrivial(n, 0);
  CycMatrix M(static_cast<unsigned>(dmons.size()) * fdim_,
              static_cast<unsigned>(smons.size()) * fdim_);
  for (unsigned s = 0; s < smons.size(); ++s) {
    NormalElement img = A_->product(op, A_->monomial(NormalKey{smons[s], lam0, 0, ytrivial}));
    for (const auto& [key, c] : img.terms()) {
      if (monomial_degree(key.ypow) > 0) continue;  // kills the lowest weight fiber
      auto it = dindex.find(key.xpow);
      require(it != dindex.end(), "action term lands outside the target slice");
      const CycMatrix F = fiber_(key.lam, key.w);
      for (unsigned i = 0; i < fdim_; ++i)
        for (unsigned j = 0; j < fdim_; ++j)
          M.at(it->second * fdim_ + i, s * fdim_ + j) += F.at(i, j) * c;
    }
  }
  return M;
}

}  // namespace chered

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "chered/skew.hpp"

using namespace chered;

namespace {

ParameterSet odd_params(const ReflectionGroup& W) {
  ParameterSet k;
  for (const auto& orb : W.hyperplane_orbits()) {
    const unsigned m = W.hyperplanes()[orb[0]].order;
    std::vector<Rational> v{Rational(0)};
    for (unsigned j = 1; j < m; ++j) v.emplace_back(2 * j + 1, 7);
    k.by_orbit.push_back(v);
  }
  k.validate(W);
  return k;
}

std::vector<CycVector> standard_basis(unsigned n) {
  std::vector<CycVector> basis;
  for (unsigned i = 0; i < n; ++i) {
    CycVector e(n);
    e[i] = Cyclotomic(1);
    basis.push_back(e);
  }
  return basis;
}

}  // namespace

TEST_CASE("rank one commutation closes on the group algebra") {
  const ReflectionGroup W = ReflectionGroup::preset("G(2,1,1)");
  const SubgroupLattice L = SubgroupLattice::build(W);
  const SkewContext ctx = SkewContext::subgroup_pair(W, L, L.top());
  ParameterSet k;
  k.by_orbit = {{Rational(0), Rational(1, 3)}};

  const SkewOperator T = dunkl_operator(&ctx, {Cyclotomic(1)}, k);
  const SkewOperator X = SkewOperator::coordinate(&ctx, 0);
  const int s = 1;  // the nonidentity element
  const SkewOperator expect =
      SkewOperator::one(&ctx) +
      SkewOperator::group_element(&ctx, s) * Cyclotomic(Rational(2, 3));
  CHECK(commutator(T, X) == expect);
}

TEST_CASE("Dunkl operators commute and transform equivariantly") {
  for (const std::string name : {"S3", "B2", "G4"}) {
    CAPTURE(name);
    const ReflectionGroup W = ReflectionGroup::preset(name);
    const SubgroupLattice L = SubgroupLattice::build(W);
    const SkewContext ctxA = SkewContext::subgroup_pair(W, L, L.top());
    const SkewContext ctxB = SkewContext::lattice_pair(W, L);
    const ParameterSet k = odd_params(W);
    const auto basis = standard_basis(W.rank());

    for (const SkewContext* ctx : {&ctxA, &ctxB}) {
      CAPTURE(ctx->flavor() == Flavor::Subgroup);
      std::vector<SkewOperator> T;
      for (const auto& y : basis) T.push_back(dunkl_operator(ctx, y, k));

      for (unsigned i = 0; i < T.size(); ++i)
        for (unsigned j = i + 1; j < T.size(); ++j)
          CHECK(commutator(T[i], T[j]).is_zero());

      for (int g : W.generator_ids()) {
        CHECK(T[0].conjugated_by(g) == dunkl_operator(ctx, W.act_vector(g, basis[0]), k));
        const SkewOperator X = SkewOperator::coordinate(ctx, 0);
        CHECK(X.conjugated_by(g) == SkewOperator::covector(ctx, W.act_covector(g, basis[0])));
      }
    }
  }
}

TEST_CASE("Euler operator relations") {
  for (const std::string name : {"S3", "B2"}) {
    CAPTURE(name);
    const ReflectionGroup W = ReflectionGroup::preset(name);
    const SubgroupLattice L = SubgroupLattice::build(W);
    const SkewContext ctxA = SkewContext::subgroup_pair(W, L, L.top());
    const SkewContext ctxB = SkewContext::lattice_pair(W, L);
    const ParameterSet k = odd_params(W);

    for (const SkewContext* ctx : {&ctxA, &ctxB}) {
      const SkewOperator eu = euler_operator(ctx, k);
      CHECK(eu == euler_vector_field(ctx));

      const SkewOperator X = SkewOperator::coordinate(ctx, 0);
      CycVector e0(W.rank());
      e0[0] = Cyclotomic(1);
      const SkewOperator T = dunkl_operator(ctx, e0, k);
      CHECK(commutator(eu, X) == X);
      CHECK(commutator(eu, T) == -T);
      for (int g : W.generator_ids())
        CHECK(commutator(eu, SkewOperator::group_element(ctx, g)).is_zero());
    }

    // Lattice flavor: the idempotents are flat for the Euler operator.
    const SkewOperator eu = euler_operator(&ctxB, k);
    for (int node = 0; node < static_cast<int>(L.size()); ++node)
      CHECK(commutator(eu, SkewOperator::idempotent(&ctxB, node)).is_zero());
  }
}

TEST_CASE("idempotent specialization maps the lattice flavor onto the subgroup flavor") {
  const ReflectionGroup W = ReflectionGroup::preset("S3");
  const SubgroupLattice L = SubgroupLattice::build(W);
  const SkewContext ctxA = SkewContext::subgroup_pair(W, L, L.top());
  const SkewContext ctxB = SkewContext::lattice_pair(W, L);
  const ParameterSet k = odd_params(W);
  const auto basis = standard_basis(W.rank());

  for (unsigned i = 0; i < W.rank(); ++i) {
    const SkewOperator TB = dunkl_operator(&ctxB, basis[i], k);
    const SkewOperator TA = dunkl_operator(&ctxA, basis[i], k);
    CHECK(specialize_idempotents(TB, &ctxA) == TA);
  }
}

TEST_CASE("order filtration and top symbols") {
  const ReflectionGroup W = ReflectionGroup::preset("B2");
  const SubgroupLattice L = SubgroupLattice::build(W);
  const SkewContext ctx = SkewContext::subgroup_pair(W, L, L.top());
  const ParameterSet k = odd_params(W);
  CycVector e0(W.rank());
  e0[0] = Cyclotomic(1);
  const SkewOperator T = dunkl_operator(&ctx, e0, k);

  CHECK(T.order() == 1);
  const SkewOperator P = T * T;
  CHECK(P.order() == 2);
  CHECK(P.part_of_order(2) == symbol_product(T, T).part_of_order(2));
}

TEST_CASE("singular terms of x.T collapse onto regular reflection sums") {
  const ReflectionGroup W = ReflectionGroup::preset("S3");
  const SubgroupLattice L = SubgroupLattice::build(W);
  const SkewContext ctxA = SkewContext::subgroup_pair(W, L, L.top());
  const SkewContext ctxB = SkewContext::lattice_pair(W, L);
  const ParameterSet k = odd_params(W);

  for (const SkewContext* ctx : {&ctxA, &ctxB}) {
    SkewOperator xT(ctx);
    for (unsigned i = 0; i < W.rank(); ++i) {
      CycVector ei(W.rank());
      ei[i] = Cyclotomic(1);
      xT += SkewOperator::coordinate(ctx, i) * dunkl_operator(ctx, ei, k);
    }
    // All 1/alpha_H poles cancel, leaving polynomial group-algebra terms.
    SkewOperator regular = euler_vector_field(ctx);
    for (int h : ctx->active_hyperplanes()) regular += reflection_sum(ctx, h, k);
    CHECK(xT == regular);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "chered/irreps.hpp"
#include "chered/modules.hpp"
#include "chered/rational.hpp"
#include "chered/straighten.hpp"

using namespace chered;

namespace {

std::vector<unsigned> irrep_dims(const ReflectionGroup& W, const std::vector<int>& elems) {
  std::vector<unsigned> dims;
  for (const Irrep& r : subgroup_irreps(W, elems)) dims.push_back(r.dim);
  std::sort(dims.begin(), dims.end());
  return dims;
}

std::vector<int> whole_group(const ReflectionGroup& W) {
  std::vector<int> e;
  for (int g = 0; g < static_cast<int>(W.size()); ++g) e.push_back(g);
  return e;
}

}  // namespace

TEST_CASE("irreducible representation inventories") {
  struct Row {
    const char* name;
    std::vector<unsigned> dims;
  };
  const Row rows[] = {
      {"S3", {1, 1, 2}},
      {"B2", {1, 1, 1, 1, 2}},
      {"I2(5)", {1, 1, 2, 2}},
      {"I2(6)", {1, 1, 1, 1, 2, 2}},
      {"G4", {1, 1, 1, 2, 2, 2, 3}},
      {"S4", {1, 1, 2, 3, 3}},
      {"G(3,1,1)", {1, 1, 1}},
  };
  for (const Row& row : rows) {
    CAPTURE(row.name);
    const ReflectionGroup W = ReflectionGroup::preset(row.name);
    const auto irreps = subgroup_irreps(W, whole_group(W));
    CHECK(irrep_dims(W, whole_group(W)) == row.dims);
    for (const Irrep& r : irreps) verify_irrep(W, r);
  }
}

TEST_CASE("normalizer representations at an atom") {
  const ReflectionGroup W = ReflectionGroup::preset("B2");
  const SubgroupLattice L = SubgroupLattice::build(W);
  // N(W_H) for the first B2 atom is the full diagonal subgroup, 4 characters.
  CHECK(irrep_dims(W, L.node(L.atom(0)).normalizer) == std::vector<unsigned>{1, 1, 1, 1});
}

TEST_CASE("simple modules tile the lattice algebra") {
  for (const char* name : {"S3", "B2", "I2(5)", "G4", "S4", "G(3,1,1)"}) {
    CAPTURE(name);
    const ReflectionGroup W = ReflectionGroup::preset(name);
    const SubgroupLattice L = SubgroupLattice::build(W);
    const auto mods = simple_modules(L);
    unsigned long sumsq = 0;
    for (const SimpleModule& E : mods) sumsq += static_cast<unsigned long>(E.dim) * E.dim;
    CHECK(sumsq == L.size() * W.size());

    for (const SimpleModule& E : mods) {
      CHECK(E.dim == E.nodes.size() * E.chi.dim);
      // The group action is a homomorphism on a generating set.
      for (int g : W.generator_ids())
        for (int h : W.generator_ids())
          CHECK(E.act_group(W.product(g, h)) == E.act_group(g) * E.act_group(h));
      // Idempotent images: identity blocks over the orbit nodes, zero off it.
      CycMatrix sum(E.dim, E.dim);
      for (int node : E.nodes) sum = sum + E.act_idem(node);
      CHECK(sum.is_identity());
    }
  }
}

TEST_CASE("central scalars on the S3 lattice at k = (0, 1/2)") {
  const ReflectionGroup W = ReflectionGroup::preset("S3");
  const SubgroupLattice L = SubgroupLattice::build(W);
  ParameterSet k;
  k.by_orbit = {{Rational(0), Rational(1, 2)}};

  std::vector<Rational> bottom, atom, top;
  for (const SimpleModule& E : simple_modules(L)) {
    const Cyclotomic c = central_scalar(E, k);
    REQUIRE(c.is_rational());
    const Rational r = *c.as_rational();
    if (E.base_node == L.bottom())
      bottom.push_back(r);
    else if (E.base_node == L.top())
      top.push_back(r);
    else
      atom.push_back(r);
  }
  std::sort(bottom.begin(), bottom.end());
  std::sort(atom.begin(), atom.end());
  std::sort(top.begin(), top.end());
  CHECK(bottom == std::vector<Rational>{0, 0, 0});
  CHECK(atom == std::vector<Rational>{0, 1});
  CHECK(top == std::vector<Rational>{0, Rational(3, 2), 3});
}

TEST_CASE("subgroup-flavor central scalars at an atom") {
  const ReflectionGroup W = ReflectionGroup::preset("S3");
  const SubgroupLattice L = SubgroupLattice::build(W);
  const SkewContext ctx = SkewContext::subgroup_pair(W, L, L.atom(0));
  ParameterSet k;
  k.by_orbit = {{Rational(0), Rational(1, 2)}};

  const auto irs = subgroup_irreps(W, ctx.carrier());
  REQUIRE(irs.size() == 2);
  std::vector<Cyclotomic> vals;
  for (const Irrep& r : irs) vals.push_back(central_scalar(ctx, r, k));
  std::vector<Cyclotomic> want{Cyclotomic(0), Cyclotomic(1)};
  CHECK((vals == want || (vals[0] == want[1] && vals[1] == want[0])));
}

TEST_CASE("scalar comparisons detect integer gaps only") {
  const Cyclotomic zero(0), three(3), threehalf{Rational(3, 2)};
  CHECK(order_compare(three, zero) == COrder::Greater);
  CHECK(order_compare(zero, three) == COrder::Less);
  CHECK(order_compare(three, three) == COrder::Incomparable);
  CHECK(order_compare(threehalf, zero) == COrder::Incomparable);
  CHECK(order_compare(threehalf, threehalf + Cyclotomic(2)) == COrder::Less);
  CHECK(order_compare(Cyclotomic::zeta(3), Cyclotomic::zeta(3) + Cyclotomic(1)) ==
        COrder::Less);
  CHECK(order_compare(Cyclotomic::zeta(3), Cyclotomic(0)) == COrder::Incomparable);
}

TEST_CASE("standard module over the top sign character of S3") {
  const ReflectionGroup W = ReflectionGroup::preset("S3");
  const SubgroupLattice L = SubgroupLattice::build(W);
  const SkewContext ctx = SkewContext::lattice_pair(W, L);
  ParameterSet k;
  k.by_orbit = {{Rational(0), Rational(1, 2)}};
  CherednikAlgebra A(&ctx, k);

  const auto mods = simple_modules(L);
  const SimpleModule* sign = nullptr;
  for (const SimpleModule& E : mods)
    if (E.base_node == L.top() && E.chi.dim == 1 && central_scalar(E, k) == Cyclotomic(3))
      sign = &E;
  REQUIRE(sign != nullptr);

  StandardModule D(A, *sign, 3);
  CHECK(D.fiber_dim() == 1);
  CHECK(D.lowest_scalar(k) == Cyclotomic(3));
  for (unsigned i = 0; i <= 3; ++i) {
    CHECK(D.slice_dim(i) == i + 1);
    // The Euler element acts on slice i by i - c_E.
    CHECK(D.action(A.euler(), i, i) ==
          CycMatrix::identity(D.slice_dim(i)) * Cyclotomic(Rational(i) - Rational(3)));
  }

  // Lowering operators commute as maps between slices.
  const CycMatrix y0_21 = D.action(A.y(0), 2, 1);
  const CycMatrix y1_21 = D.action(A.y(1), 2, 1);
  const CycMatrix y0_10 = D.action(A.y(0), 1, 0);
  const CycMatrix y1_10 = D.action(A.y(1), 1, 0);
  CHECK(y0_10 * y1_21 == y1_10 * y0_21);
}

TEST_CASE("graded slice dimensions follow the free polynomial count") {
  for (const char* name : {"S3", "B2"}) {
    CAPTURE(name);
    const ReflectionGroup W = ReflectionGroup::preset(name);
    const SubgroupLattice L = SubgroupLattice::build(W);
    const SkewContext ctx = SkewContext::lattice_pair(W, L);
    const ParameterSet k = ParameterSet::zero(W);
    CherednikAlgebra A(&ctx, k);
    const unsigned n = W.rank();

    for (const SimpleModule& E : simple_modules(L)) {
      StandardModule D(A, E, 4);
      for (unsigned i = 0; i <= 4; ++i) {
        const Integer want = binomial(n + i - 1, i) * E.dim;
        CHECK(Integer(D.slice_dim(i)) == want);
      }
    }
  }
}

TEST_CASE("subgroup-flavor standard modules grade correctly") {
  const ReflectionGroup W = ReflectionGroup::preset("B2");
  const SubgroupLattice L = SubgroupLattice::build(W);
  const SkewContext ctx = SkewContext::subgroup_pair(W, L, L.atom(0));
  ParameterSet k;
  k.by_orbit = {{Rational(0), Rational(1, 3)}, {Rational(0), Rational(1, 5)}};
  CherednikAlgebra A(&ctx, k);

  for (const Irrep& chi : subgroup_irreps(W, ctx.carrier())) {
    StandardModule D(A, chi, 2);
    const Cyclotomic c = D.lowest_scalar(k);
    for (unsigned i = 0; i <= 2; ++i)
      CHECK(D.action(A.euler(), i, i) ==
            CycMatrix::identity(D.slice_dim(i)) * (Cyclotomic(Rational(i)) - c));
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <vector>

#include "chered/straighten.hpp"

using namespace chered;

namespace {

ParameterSet mod11_params(const ReflectionGroup& W) {
  ParameterSet k;
  for (const auto& orb : W.hyperplane_orbits()) {
    const unsigned m = W.hyperplanes()[orb[0]].order;
    std::vector<Rational> v{Rational(0)};
    for (unsigned j = 1; j < m; ++j) v.emplace_back(3 * j + 2, 11);
    k.by_orbit.push_back(v);
  }
  k.validate(W);
  return k;
}

std::vector<Monomial> monomials_up_to(unsigned n, unsigned degree) {
  std::vector<Monomial> out;
  for (unsigned d = 0; d <= degree; ++d) {
    Monomial m(n, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned left) {
      if (i == n - 1) {
        m[i] = left;
        out.push_back(m);
        return;
      }
      for (unsigned v = 0; v <= left; ++v) {
        m[i] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, d);
  }
  return out;
}

std::vector<Letter> full_alphabet(const ReflectionGroup& W, const SubgroupLattice& L,
                                  bool with_idempotents) {
  std::vector<Letter> alpha;
  for (unsigned i = 0; i < W.rank(); ++i) alpha.push_back({Letter::X, static_cast<int>(i)});
  for (unsigned i = 0; i < W.rank(); ++i) alpha.push_back({Letter::Y, static_cast<int>(i)});
  for (int g = 0; g < static_cast<int>(W.size()); ++g) alpha.push_back({Letter::G, g});
  if (with_idempotents)
    for (int nd = 0; nd < static_cast<int>(L.size()); ++nd) alpha.push_back({Letter::E, nd});
  return alpha;
}

}  // namespace

TEST_CASE("rank one normal form closes with the frozen commutator") {
  const ReflectionGroup W = ReflectionGroup::preset("G(2,1,1)");
  const SubgroupLattice L = SubgroupLattice::build(W);
  ParameterSet k;
  k.by_orbit = {{Rational(0), Rational(1, 3)}};

  // Subgroup flavor: y x = x y + 1 + 2c s with 2c = 2/3.
  const SkewContext ctxA = SkewContext::subgroup_pair(W, L, L.top());
  CherednikAlgebra A(&ctxA, k);
  CHECK(A.product(A.y(0), A.x(0)) ==
        A.product(A.x(0), A.y(0)) + A.scalar(Cyclotomic(1)) +
            A.group(1) * Cyclotomic(Rational(2, 3)));

  // Lattice flavor: the reflection term carries the atom idempotent.
  const SkewContext ctxB = SkewContext::lattice_pair(W, L);
  CherednikAlgebra B(&ctxB, k);
  CHECK(B.product(B.y(0), B.x(0)) ==
        B.product(B.x(0), B.y(0)) + B.scalar(Cyclotomic(1)) +
            B.product(B.idem(L.atom(0)), B.group(1)) * Cyclotomic(Rational(2, 3)));
}

TEST_CASE("left and right straightening agree on every short word") {
  for (const char* name : {"S3", "B2"}) {
    CAPTURE(name);
    const ReflectionGroup W = ReflectionGroup::preset(name);
    const SubgroupLattice L = SubgroupLattice::build(W);
    const SkewContext ctx = SkewContext::lattice_pair(W, L);
    CherednikAlgebra B(&ctx, mod11_params(W));

    const auto alpha = full_alphabet(W, L, true);
    for (const Letter& a : alpha)
      for (const Letter& b : alpha)
        for (const Letter& c : alpha) {
          const Word w{a, b, c};
          CHECK(B.straighten(w, PeelSide::Left) == B.straighten(w, PeelSide::Right));
        }
  }
}

TEST_CASE("normal forms are triangular with monomial leading terms") {
  for (const char* name : {"S3", "B2"}) {
    CAPTURE(name);
    const ReflectionGroup W = ReflectionGroup::preset(name);
    const SubgroupLattice L = SubgroupLattice::build(W);
    const SkewContext ctx = SkewContext::lattice_pair(W, L);
    CherednikAlgebra B(&ctx, mod11_params(W));
    const unsigned n = W.rank();

    const auto mons = monomials_up_to(n, 2);
    for (const Monomial& a : mons)
      for (const Monomial& b : mons)
        for (int g : {0, static_cast<int>(W.size() / 2), static_cast<int>(W.size() - 1)}) {
          Word w;
          for (unsigned i = 0; i < n; ++i)
            for (unsigned e = 0; e < b[i]; ++e) w.push_back({Letter::Y, static_cast<int>(i)});
          for (unsigned i = 0; i < n; ++i)
            for (unsigned e = 0; e < a[i]; ++e) w.push_back({Letter::X, static_cast<int>(i)});
          if (g != 0) w.push_back({Letter::G, g});
          const NormalElement nf = B.straighten(w);

          // Top degree: x^a g (g^{-1} y)^b, lower terms strictly smaller.
          const CycMatrix rows = W.matrix(W.inverse(g)).transpose();
          const Poly twist = Poly::term(b, Cyclotomic(1)).substitute_linear(rows);
          NormalElement top(&B);
          for (const auto& [m, c] : twist.terms())
            top.add_term(NormalKey{a, L.bottom(), g, m}, c);

          const int dtop = static_cast<int>(monomial_degree(a) + monomial_degree(b));
          NormalElement got(&B);
          for (const auto& [key, c] : nf.terms()) {
            const int d = static_cast<int>(monomial_degree(key.xpow) + monomial_degree(key.ypow));
            CHECK(d <= dtop);
            if (d == dtop) got.add_term(key, c);
          }
          CHECK(got == top);
        }
  }
}

TEST_CASE("straightening matches the operator realization") {
  const ReflectionGroup W = ReflectionGroup::preset("B2");
  const SubgroupLattice L = SubgroupLattice::build(W);
  const SkewContext ctx = SkewContext::lattice_pair(W, L);
  const ParameterSet k = mod11_params(W);
  CherednikAlgebra B(&ctx, k);
  const unsigned n = W.rank();

  const auto alpha = full_alphabet(W, L, true);
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 12; ++trial) {
    Word w;
    const unsigned len = 1 + rng() % 4;
    for (unsigned i = 0; i < len; ++i) w.push_back(alpha[rng() % alpha.size()]);

    SkewOperator direct = SkewOperator::one(&ctx);
    for (const Letter& l : w) {
      SkewOperator s(&ctx);
      switch (l.kind) {
        case Letter::X: s = SkewOperator::coordinate(&ctx, l.idx); break;
        case Letter::Y: {
          CycVector e(n);
          e[l.idx] = Cyclotomic(1);
          s = dunkl_operator(&ctx, e, k);
          break;
        }
        case Letter::G: s = SkewOperator::group_element(&ctx, l.idx); break;
        case Letter::E: s = SkewOperator::idempotent(&ctx, l.idx); break;
      }
      direct = direct * s;
    }
    CHECK(B.skew_image(B.straighten(w)) == direct);
  }
}

TEST_CASE("abstract Euler element is a grading element") {
  for (const char* name : {"S3", "B2"}) {
    CAPTURE(name);
    const ReflectionGroup W = ReflectionGroup::preset(name);
    const SubgroupLattice L = SubgroupLattice::build(W);
    const SkewContext ctx = SkewContext::lattice_pair(W, L);
    CherednikAlgebra B(&ctx, mod11_params(W));

    const NormalElement eu = B.euler();
    CHECK(B.commutator(eu, B.x(0)) == B.x(0));
    CHECK(B.commutator(eu, B.y(0)) == -B.y(0));
    CHECK(B.commutator(eu, B.group(W.generator_ids()[0])).is_zero());
    for (int nd = 0; nd < static_cast<int>(L.size()); ++nd)
      CHECK(B.commutator(eu, B.idem(nd)).is_zero());
  }
}

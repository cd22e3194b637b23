#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "chered/irreps.hpp"
#include "chered/modules.hpp"
#include "chered/monodromy.hpp"

using namespace chered;

namespace {

Path map_path(const CMatrix& Mw, const Path& p) {
  Path out;
  for (const Segment& s : p) {
    Segment t = s;
    t.base = Mw * s.base;
    t.dir = Mw * s.dir;
    out.push_back(t);
  }
  return out;
}

CMatrix mat_pow(const CMatrix& m, unsigned e) {
  CMatrix p = CMatrix::Identity(m.rows(), m.cols());
  for (unsigned i = 0; i < e; ++i) p = p * m;
  return p;
}

}  // namespace

TEST_CASE("exact data converts faithfully") {
  const Cyclotomic z = Cyclotomic::zeta(8);
  const Complex c = to_complex(z);
  CHECK(std::abs(c - std::polar(1.0, std::acos(-1.0) / 4)) < 1e-14);

  const ReflectionGroup W = ReflectionGroup::preset("S3");
  for (int g = 0; g < static_cast<int>(W.size()); ++g) {
    const CMatrix m = to_complex(W.matrix(g));
    CHECK((to_complex(W.matrix(W.inverse(g))) * m - CMatrix::Identity(2, 2)).norm() < 1e-14);
  }
}

TEST_CASE("basepoints clear the arrangement and their own loops") {
  for (const char* name : {"S3", "B2", "I2(5)", "G4", "G(3,1,1)"}) {
    CAPTURE(name);
    const ReflectionGroup W = ReflectionGroup::preset(name);
    const CVector x0 = default_basepoint(W);
    CHECK(arrangement_distance(W, x0) > 0.1);
    // Every braided loop from the default basepoint keeps a workable margin.
    const SubgroupLattice L = SubgroupLattice::build(W);
    const auto mods = simple_modules(L);
    const ComplexParams k0 = ComplexParams::zero(W);
    const Connection C = Connection::lattice(mods.front(), k0);
    for (int h = 0; h < static_cast<int>(W.hyperplanes().size()); ++h) {
      const BraidLoop loop = braided_loop(C, h, x0);
      CHECK(path_distance(W, loop.path) > 0.05);
    }
  }
}

TEST_CASE("zero parameters give the deck representation") {
  for (const char* name : {"S3", "B2"}) {
    CAPTURE(name);
    const ReflectionGroup W = ReflectionGroup::preset(name);
    const SubgroupLattice L = SubgroupLattice::build(W);
    const ComplexParams k0 = ComplexParams::zero(W);
    const CVector x0 = default_basepoint(W);
    int tested = 0;
    for (const SimpleModule& E : simple_modules(L)) {
      if (E.base_node != L.top() || E.dim < 2) continue;
      const Connection C = Connection::lattice(E, k0);
      for (int h = 0; h < static_cast<int>(W.hyperplanes().size()); ++h) {
        const unsigned m = W.hyperplanes()[h].order;
        const Monodromy mon = braided_monodromy(C, h, x0, 1e-10);
        CHECK((mon.matrix - C.fiber_action(W.hyperplanes()[h].distinguished)).norm() <= 1e-9);
        CHECK((mat_pow(mon.matrix, m) - CMatrix::Identity(E.dim, E.dim)).norm() <= 1e-8);
        const HeckeReport hk = check_hecke(mon.matrix, m);
        CHECK(hk.power_residual <= 1e-8);
        CHECK(hk.minpoly_degree <= m);
        ++tested;
      }
    }
    CHECK(tested > 0);
  }
}

TEST_CASE("rank one monodromy matches the closed form") {
  std::mt19937_64 rng(20260819);
  std::uniform_real_distribution<double> u(-0.21, 0.21);
  for (const unsigned m : {2u, 3u}) {
    CAPTURE(m);
    const ReflectionGroup W = ReflectionGroup::preset(m == 2 ? "G(2,1,1)" : "G(3,1,1)");
    const SubgroupLattice L = SubgroupLattice::build(W);
    const auto mods = simple_modules(L);
    const int g = W.generator_ids().at(0);
    const CVector x0 = default_basepoint(W);
    for (int draw = 0; draw < 3; ++draw) {
      ComplexParams k = ComplexParams::zero(W);
      for (auto& c : k.by_orbit[0]) c = Complex(u(rng), u(rng));
      k.by_orbit[0][0] = Complex(0, 0);
      for (const SimpleModule& E : mods) {
        if (E.base_node != L.top()) continue;
        long l = -1;
        for (unsigned cand = 0; cand < m; ++cand)
          if (E.chi.character(g) == Cyclotomic::root_of_unity(m, cand)) l = cand;
        REQUIRE(l >= 0);
        const Connection C = Connection::lattice(E, k);
        const Monodromy mon = braided_monodromy(C, 0, x0, 1e-10);
        CHECK(std::abs(mon.matrix(0, 0) -
                       rank1_oracle(m, static_cast<unsigned>(l), k.by_orbit[0][l])) <= 1e-7);
      }
    }
  }
}

TEST_CASE("bottom fibers are unramified up to deck order") {
  const ReflectionGroup W = ReflectionGroup::preset("S3");
  const SubgroupLattice L = SubgroupLattice::build(W);
  ComplexParams k = ComplexParams::zero(W);
  k.by_orbit[0][1] = Complex(0.17, -0.05);
  const CVector x0 = default_basepoint(W);
  for (const SimpleModule& E : simple_modules(L)) {
    if (E.base_node != L.bottom()) continue;
    const Connection C = Connection::lattice(E, k);
    for (int h : C.poles()) CHECK(C.residue(h).norm() == 0.0);
    for (int h = 0; h < static_cast<int>(W.hyperplanes().size()); ++h) {
      const Monodromy mon = braided_monodromy(C, h, x0, 1e-10);
      const unsigned m = W.hyperplanes()[h].order;
      CHECK((mat_pow(mon.matrix, m) - CMatrix::Identity(E.dim, E.dim)).norm() <= 1e-7);
    }
  }
}

TEST_CASE("flat transport: contractibility, composition, homotopy, conjugacy") {
  const ReflectionGroup W = ReflectionGroup::preset("S3");
  const SubgroupLattice L = SubgroupLattice::build(W);
  const auto mods = simple_modules(L);

  // Pick the fiber with the largest residue mass so nothing is vacuous.
  ComplexParams k = ComplexParams::zero(W);
  k.by_orbit[0][1] = Complex(0.2, 0.1);
  const SimpleModule* rich = nullptr;
  double best = -1;
  for (const SimpleModule& E : mods) {
    const Connection C = Connection::lattice(E, k);
    double total = 0;
    for (int h : C.poles()) total += C.residue(h).norm();
    if (total > best) {
      best = total;
      rich = &E;
    }
  }
  REQUIRE(rich != nullptr);
  REQUIRE(best > 0.1);
  const Connection C = Connection::lattice(*rich, k);
  const unsigned d = rich->dim;
  const CVector x0 = default_basepoint(W);
  const double dist = arrangement_distance(W, x0);

  SUBCASE("a contractible square transports to the identity") {
    CVector e0 = CVector::Zero(W.rank()), e1 = CVector::Zero(W.rank());
    e0(0) = 0.3 * dist;
    e1(1) = 0.3 * dist;
    const Path square{Segment::line(x0, x0 + e0), Segment::line(x0 + e0, x0 + e0 + e1),
                      Segment::line(x0 + e0 + e1, x0 + e1), Segment::line(x0 + e1, x0)};
    const Transport T = transport(C, square, 1e-9, 0.25 * dist);
    CHECK((T.matrix - CMatrix::Identity(d, d)).norm() <= 1e-7);
  }

  SUBCASE("transport composes along concatenation") {
    CVector e0 = CVector::Zero(W.rank());
    e0(0) = 0.3 * dist;
    const Segment s1 = Segment::line(x0, x0 + e0);
    const Segment s2 = Segment::line(x0 + e0, x0 + e0 * Complex(0, 1));
    const Transport T1 = transport(C, {s1}, 1e-10, 0.1 * dist);
    const Transport T2 = transport(C, {s2}, 1e-10, 0.1 * dist);
    const Transport T12 = transport(C, {s1, s2}, 1e-10, 0.1 * dist);
    CHECK((T12.matrix - T2.matrix * T1.matrix).norm() <= 1e-8);
  }

  SUBCASE("shrinking the loop radius is a homotopy") {
    const Monodromy full = braided_monodromy(C, 0, x0, 1e-10, 1.0);
    const Monodromy half = braided_monodromy(C, 0, x0, 1e-10, 0.5);
    CHECK((full.matrix - half.matrix).norm() <= 1e-8);
  }

  SUBCASE("monodromy is equivariant along the hyperplane orbit") {
    const Monodromy base = braided_monodromy(C, 0, x0, 1e-10);
    const BraidLoop loop = braided_loop(C, 0, x0);
    for (int w = 0; w < static_cast<int>(W.size()); ++w) {
      const int h2 = W.hyperplane_image(w, 0);
      const int s2 = W.conjugate(w, loop.deck);
      CHECK(s2 == W.hyperplanes()[h2].distinguished);
      const CMatrix Mw = to_complex(W.matrix(w));
      const Path image = map_path(Mw, loop.path);
      const Transport Tw = transport(C, image, 1e-10, 0.4 * path_distance(W, image));
      const CMatrix rho = C.fiber_action(w);
      CHECK((C.fiber_action(s2) * Tw.matrix - rho * base.matrix * rho.inverse()).norm() <=
            1e-6);
    }
  }

  SUBCASE("residues are simple poles") {
    const auto probes = regularity_probe(C, 0, x0, {1e-1, 1e-2, 1e-3, 1e-4}, 1e-9);
    double lo = 1e300, hi = 0;
    for (const RadialProbe& p : probes) {
      lo = std::min(lo, p.norm);
      hi = std::max(hi, p.norm);
    }
    CHECK(hi / lo <= 10.0);
  }
}

TEST_CASE("subgroup flavor reduces to the rank one picture at an atom") {
  const ReflectionGroup W = ReflectionGroup::preset("S3");
  const SubgroupLattice L = SubgroupLattice::build(W);
  const SkewContext ctx = SkewContext::subgroup_pair(W, L, L.atom(0));
  ComplexParams k = ComplexParams::zero(W);
  k.by_orbit[0][1] = Complex(0.25, 0.0);
  const CVector x0 = default_basepoint(W);
  const int s = ctx.carrier()[1];
  for (const Irrep& chi : subgroup_irreps(W, ctx.carrier())) {
    const Connection C = Connection::subgroup(ctx, chi, k);
    REQUIRE(C.poles().size() == 1);
    const Monodromy mon = braided_monodromy(C, C.poles()[0], x0, 1e-10);
    const unsigned l = chi.character(s) == Cyclotomic(1) ? 0 : 1;
    const Complex want = rank1_oracle(2, l, k.by_orbit[0][1] * double(l));
    CHECK(std::abs(mon.matrix(0, 0) - want) <= 1e-7);
  }
}

TEST_CASE("transport refuses a path that grazes the arrangement") {
  const ReflectionGroup W = ReflectionGroup::preset("S3");
  const SubgroupLattice L = SubgroupLattice::build(W);
  const ComplexParams k0 = ComplexParams::zero(W);
  const Connection C = Connection::lattice(simple_modules(L).front(), k0);
  const CVector x0 = default_basepoint(W);
  // Demanding a margin larger than the actual clearance must throw.
  const Path p{Segment::line(x0, x0 * 1.01)};
  CHECK_THROWS(transport(C, p, 1e-8, 10.0));
}

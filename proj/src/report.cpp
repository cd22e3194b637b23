#include "chered/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chered/error.hpp"
#include "chered/group.hpp"
#include "chered/group_algebra.hpp"
#include "chered/irreps.hpp"
#include "chered/lattice.hpp"
#include "chered/matrix.hpp"
#include "chered/modules.hpp"
#include "chered/monodromy.hpp"
#include "chered/poly.hpp"
#include "chered/skew.hpp"
#include "chered/straighten.hpp"

namespace chered {

namespace {

class Stopwatch {
 public:
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

void expect(CheckReport& r, bool ok, const std::string& what) {
  if (ok) return;
  r.pass = false;
  if (!r.details.empty()) r.details += "; ";
  r.details += what;
}

struct Runner {
  std::vector<CheckReport> checks;

  template <typename Body>
  void run(std::string name, std::string claim, Body&& body) {
    CheckReport r;
    r.name = std::move(name);
    r.claim = std::move(claim);
    r.pass = true;
    Stopwatch sw;
    try {
      body(r);
    } catch (const Error& e) {
      r.pass = false;
      if (!r.details.empty()) r.details += "; ";
      r.details += e.what();
    }
    r.seconds = sw.elapsed();
    checks.push_back(std::move(r));
  }
};

/// Published data for the built-in presets. Lattice size and the dimension
/// identity are filled only where the table value has been pinned.
struct PresetProfile {
  unsigned long order = 0;
  size_t reflections = 0;
  size_t hyperplanes = 0;
  std::vector<unsigned> orders;
  std::optional<size_t> lattice_size;
  std::optional<unsigned long> dim_identity;
};

std::optional<PresetProfile> preset_profile(const std::string& name) {
  PresetProfile p;
  auto dihedral = [&](unsigned m) {
    p.order = 2ul * m;
    p.reflections = m;
    p.hyperplanes = m;
    p.orders.assign(m, 2);
    if (m == 3) { p.lattice_size = 5; p.dim_identity = 30; }
    if (m == 4) { p.lattice_size = 8; p.dim_identity = 64; }
    if (m == 5) { p.lattice_size = 7; p.dim_identity = 70; }
    return p;
  };
  if (name == "S3") return dihedral(3);
  if (name == "B2") return dihedral(4);
  if (name == "S4") {
    p.order = 24;
    p.reflections = 6;
    p.hyperplanes = 6;
    p.orders.assign(6, 2);
    p.lattice_size = 15;
    p.dim_identity = 360;
    return p;
  }
  if (name == "G4") {
    p.order = 24;
    p.reflections = 8;
    p.hyperplanes = 4;
    p.orders.assign(4, 3);
    p.lattice_size = 6;
    p.dim_identity = 144;
    return p;
  }
  unsigned a = 0, b = 0, c = 0;
  if (std::sscanf(name.c_str(), "I2(%u)", &a) == 1 && a >= 3) return dihedral(a);
  if (std::sscanf(name.c_str(), "G(%u,%u,%u)", &a, &b, &c) == 3) {
    if (b == a && c == 2 && a >= 3) return dihedral(a);
    if (b == 1 && c == 1 && a >= 2) {
      p.order = a;
      p.reflections = a - 1;
      p.hyperplanes = 1;
      p.orders = {a};
      p.lattice_size = 2;
      p.dim_identity = 2ul * a;
      return p;
    }
  }
  return std::nullopt;
}

Rational draw_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 6);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

ParameterSet draw_params(const ReflectionGroup& W, std::mt19937_64& rng) {
  ParameterSet k = ParameterSet::zero(W);
  for (auto& orbit : k.by_orbit)
    for (auto& v : orbit) v = draw_rational(rng);
  return k;
}

ComplexParams draw_complex(const ReflectionGroup& W, std::mt19937_64& rng) {
  ComplexParams k = ComplexParams::zero(W);
  std::uniform_real_distribution<double> u(-0.21, 0.21);
  for (auto& orbit : k.by_orbit)
    for (auto& v : orbit) {
      double re = u(rng), im = u(rng);
      v = Complex(re, im);
    }
  return k;
}

ParameterSet exact_params_or_draw(const RunConfig& cfg, const ReflectionGroup& W,
                                  std::mt19937_64& rng) {
  if (!cfg.params.empty()) return cfg.exact_params(W);
  return draw_params(W, rng);
}

ComplexParams complex_params_or_draw(const RunConfig& cfg, const ReflectionGroup& W,
                                     std::mt19937_64& rng) {
  if (!cfg.monodromy_params.empty()) return cfg.complex_params(W);
  return draw_complex(W, rng);
}

int flavor_a_node(const RunConfig& cfg, const ReflectionGroup& W, const SubgroupLattice& L) {
  int node = L.bottom();
  for (int h : cfg.w0_hyperplanes) {
    if (h < 0 || h >= static_cast<int>(W.hyperplanes().size()))
      throw ConfigError(fmt("w0 hyperplane id %d out of range", h));
    node = L.join(node, L.atom(h));
  }
  return node;
}

CycVector scaled_line(CycVector v) {
  normalize_line(v);
  return v;
}

CycVector unit_vector(unsigned n, unsigned i) {
  CycVector e(n, Cyclotomic(Rational(0)));
  e[i] = Cyclotomic(Rational(1));
  return e;
}

CMatrix cmat_pow(const CMatrix& M, unsigned e) {
  CMatrix acc = CMatrix::Identity(M.rows(), M.cols());
  for (unsigned i = 0; i < e; ++i) acc = acc * M;
  return acc;
}

/// Carrier elements whose conjugations pin the full action: the group
/// generators when the carrier is all of W, every element otherwise.
std::vector<int> conjugation_set(const ReflectionGroup& W, const SkewContext& ctx) {
  if (ctx.carrier().size() == W.size()) return W.generator_ids();
  std::vector<int> out;
  for (int g : ctx.carrier())
    if (g != 0) out.push_back(g);
  return out;
}

}  // namespace

bool SuiteResult::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckReport& c) { return c.pass; });
}

SuiteResult run_group_suite(const RunConfig& cfg) {
  Runner R;
  ReflectionGroup W = cfg.build_group();
  const auto& hps = W.hyperplanes();
  std::mt19937_64 rng(cfg.seed);

  R.run("construction",
        "the generators close to a finite matrix group with reflections and hyperplanes enumerated",
        [&](CheckReport& r) {
          r.details = fmt("order %zu, %zu reflections, %zu hyperplanes, rank %u",
                          W.size(), W.reflections().size(), hps.size(), W.rank());
          expect(r, W.size() >= 1 && !hps.empty(), "no hyperplanes found");
        });

  R.run("representation-homomorphism",
        "matrix(g) matrix(h) = matrix(gh) for every generator g and every element h",
        [&](CheckReport& r) {
          for (int g : W.generator_ids()) {
            for (size_t h = 0; h < W.size() && r.pass; ++h) {
              int gh = W.product(g, static_cast<int>(h));
              expect(r, W.matrix(g) * W.matrix(static_cast<int>(h)) == W.matrix(gh),
                     fmt("product mismatch at g=%d h=%zu", g, h));
            }
            if (!r.pass) break;
          }
        });

  R.run("reflections-fix-hyperplanes",
        "every element of a hyperplane stabilizer fixes the hyperplane pointwise and preserves its complement line",
        [&](CheckReport& r) {
          for (size_t h = 0; h < hps.size() && r.pass; ++h) {
            const Hyperplane& hp = hps[h];
            for (int w : hp.stabilizer) {
              for (const CycVector& b : hp.basis)
                expect(r, W.act_vector(w, b) == b, fmt("fixed space moves at h=%zu w=%d", h, w));
              expect(r, scaled_line(W.act_vector(w, hp.v)) == scaled_line(hp.v),
                     fmt("complement line moves at h=%zu w=%d", h, w));
              if (!r.pass) break;
            }
          }
        });

  R.run("stabilizers-cyclic",
        "each stabilizer W_H is cyclic of order m_H, generated by its distinguished reflection of determinant e^(-2 pi i/m_H)",
        [&](CheckReport& r) {
          for (size_t h = 0; h < hps.size() && r.pass; ++h) {
            const Hyperplane& hp = hps[h];
            expect(r, hp.stabilizer.size() == hp.order, fmt("order mismatch at h=%zu", h));
            expect(r, W.element_order(hp.distinguished) == hp.order,
                   fmt("distinguished order mismatch at h=%zu", h));
            expect(r, W.det(hp.distinguished) ==
                          Cyclotomic::root_of_unity(hp.order, -1),
                   fmt("distinguished determinant mismatch at h=%zu", h));
            std::set<int> powers;
            int p = 0;
            for (unsigned e = 0; e < hp.order; ++e) {
              powers.insert(p);
              p = W.product(p, hp.distinguished);
            }
            expect(r, powers == std::set<int>(hp.stabilizer.begin(), hp.stabilizer.end()),
                   fmt("distinguished powers do not fill W_H at h=%zu", h));
          }
        });

  R.run("hyperplane-orbits",
        "the group permutes its hyperplanes within the recorded orbit partition",
        [&](CheckReport& r) {
          auto orbits = W.hyperplane_orbits();
          size_t covered = 0;
          for (size_t o = 0; o < orbits.size(); ++o) {
            covered += orbits[o].size();
            for (int h : orbits[o])
              expect(r, hps[h].orbit == static_cast<int>(o), fmt("orbit id mismatch at h=%d", h));
          }
          expect(r, covered == hps.size(), "orbits do not partition the hyperplanes");
          for (int g : W.generator_ids())
            for (size_t h = 0; h < hps.size() && r.pass; ++h)
              expect(r, hps[W.hyperplane_image(g, static_cast<int>(h))].orbit == hps[h].orbit,
                     fmt("generator %d moves h=%zu across orbits", g, h));
          r.details = fmt("%zu orbits", orbits.size());
        });

  R.run("projector-identities",
        "the stabilizer character projectors are orthogonal idempotents summing to one",
        [&](CheckReport& r) {
          for (size_t h = 0; h < hps.size() && r.pass; ++h) {
            unsigned m = hps[h].order;
            std::vector<GroupAlgebraElement> eps;
            for (unsigned j = 0; j < m; ++j) eps.push_back(epsilon_element(W, static_cast<int>(h), j));
            GroupAlgebraElement zero(W), sum(W);
            GroupAlgebraElement one(W, 0);
            for (unsigned j = 0; j < m; ++j) {
              sum += eps[j];
              for (unsigned l = 0; l < m; ++l)
                expect(r, eps[j] * eps[l] == (j == l ? eps[j] : zero),
                       fmt("projector product mismatch at h=%zu j=%u l=%u", h, j, l));
            }
            expect(r, sum == one, fmt("projectors do not sum to one at h=%zu", h));
          }
        });

  R.run("projector-equivariance",
        "conjugation carries the projectors and the spectral sums of H onto those of w(H)",
        [&](CheckReport& r) {
          ParameterSet k = exact_params_or_draw(cfg, W, rng);
          for (int g : W.generator_ids()) {
            for (size_t h = 0; h < hps.size() && r.pass; ++h) {
              int h2 = W.hyperplane_image(g, static_cast<int>(h));
              for (unsigned j = 0; j < hps[h].order; ++j)
                expect(r, epsilon_element(W, static_cast<int>(h), j).conjugated_by(g) ==
                              epsilon_element(W, h2, j),
                       fmt("projector equivariance fails at g=%d h=%zu j=%u", g, h, j));
              expect(r, a_element(W, static_cast<int>(h), k).conjugated_by(g) == a_element(W, h2, k),
                     fmt("spectral sum equivariance fails at g=%d h=%zu", g, h));
              expect(r, gamma_element(W, static_cast<int>(h), k).conjugated_by(g) ==
                            gamma_element(W, h2, k),
                     fmt("gamma equivariance fails at g=%d h=%zu", g, h));
            }
            if (!r.pass) break;
          }
        });

  if (auto p = preset_profile(cfg.preset)) {
    R.run("preset-profile",
          "order, reflection count, hyperplane count, and the m_H multiset match the published table",
          [&](CheckReport& r) {
            expect(r, W.size() == p->order, fmt("order %zu, expected %lu", W.size(), p->order));
            expect(r, W.reflections().size() == p->reflections,
                   fmt("%zu reflections, expected %zu", W.reflections().size(), p->reflections));
            expect(r, hps.size() == p->hyperplanes,
                   fmt("%zu hyperplanes, expected %zu", hps.size(), p->hyperplanes));
            std::vector<unsigned> orders;
            for (const auto& hp : hps) orders.push_back(hp.order);
            std::sort(orders.begin(), orders.end());
            std::vector<unsigned> want = p->orders;
            std::sort(want.begin(), want.end());
            expect(r, orders == want, "m_H multiset mismatch");
          });
  }

  return SuiteResult{"group", std::move(R.checks)};
}

SuiteResult run_lattice_suite(const RunConfig& cfg) {
  Runner R;
  ReflectionGroup W = cfg.build_group();
  SubgroupLattice L = SubgroupLattice::build(W);
  auto profile = preset_profile(cfg.preset);

  R.run("bounds-and-closure",
        "the lattice runs from the trivial subgroup to W and every node is a subgroup",
        [&](CheckReport& r) {
          r.details = fmt("%zu nodes", L.size());
          expect(r, L.node(L.bottom()).hyperplanes.empty(), "bottom holds hyperplanes");
          expect(r, L.node(L.bottom()).elements == std::vector<int>{0}, "bottom is not trivial");
          expect(r, L.node(L.top()).hyperplanes.size() == W.hyperplanes().size(),
                 "top misses hyperplanes");
          expect(r, L.node(L.top()).elements.size() == W.size(), "top is not all of W");
          for (size_t i = 0; i < L.size() && r.pass; ++i) {
            const auto& elems = L.node(static_cast<int>(i)).elements;
            std::set<int> in(elems.begin(), elems.end());
            expect(r, !elems.empty() && elems[0] == 0, fmt("node %zu misses the identity", i));
            for (int a : elems) {
              for (int b : elems)
                if (!in.count(W.product(a, b))) {
                  expect(r, false, fmt("node %zu is not closed", i));
                  break;
                }
              if (!r.pass) break;
            }
          }
          if (profile && profile->lattice_size)
            expect(r, L.size() == *profile->lattice_size,
                   fmt("|L| = %zu, expected %zu", L.size(), *profile->lattice_size));
        });

  R.run("join-brute-force",
        "join(a,b) is the least node containing the subgroup generated by a and b",
        [&](CheckReport& r) {
          for (size_t a = 0; a < L.size() && r.pass; ++a) {
            for (size_t b = a; b < L.size() && r.pass; ++b) {
              std::vector<int> seed = L.node(static_cast<int>(a)).elements;
              const auto& eb = L.node(static_cast<int>(b)).elements;
              seed.insert(seed.end(), eb.begin(), eb.end());
              std::vector<int> closure = W.subgroup_closure(seed);
              std::set<int> cl(closure.begin(), closure.end());
              int best = -1;
              for (size_t i = 0; i < L.size(); ++i) {
                const auto& ei = L.node(static_cast<int>(i)).elements;
                std::set<int> si(ei.begin(), ei.end());
                bool contains = std::includes(si.begin(), si.end(), cl.begin(), cl.end());
                if (contains && (best < 0 || ei.size() < L.node(best).elements.size()))
                  best = static_cast<int>(i);
              }
              int j = L.join(static_cast<int>(a), static_cast<int>(b));
              expect(r, j == best, fmt("join(%zu,%zu) = %d, brute force gives %d", a, b, j, best));
              expect(r, L.leq(static_cast<int>(a), j) && L.leq(static_cast<int>(b), j),
                     fmt("join(%zu,%zu) is not an upper bound", a, b));
            }
          }
        });

  R.run("moebius-diagonalization",
        "Moebius inversion of the join basis yields orthogonal idempotents resolving the identity",
        [&](CheckReport& r) {
          std::vector<LatticeAlgebraElement> f;
          for (size_t i = 0; i < L.size(); ++i)
            f.push_back(LatticeAlgebraElement::diagonal(&L, static_cast<int>(i)));
          LatticeAlgebraElement zero(&L), sum(&L);
          for (size_t i = 0; i < L.size(); ++i) {
            expect(r, L.mobius(static_cast<int>(i), static_cast<int>(i)) == Rational(1),
                   fmt("mobius(%zu,%zu) is not 1", i, i));
            sum += f[i];
            for (size_t j = 0; j < L.size() && r.pass; ++j)
              expect(r, f[i] * f[j] == (i == j ? f[i] : zero),
                     fmt("f_%zu f_%zu is not diagonal", i, j));
          }
          expect(r, sum == LatticeAlgebraElement::basis(&L, L.bottom()),
                 "f basis does not resolve the identity");
        });

  R.run("group-action",
        "W acts on the lattice by join-preserving automorphisms with the recorded orbit partition",
        [&](CheckReport& r) {
          for (int g : W.generator_ids())
            for (size_t a = 0; a < L.size() && r.pass; ++a)
              for (size_t b = 0; b < L.size() && r.pass; ++b)
                expect(r, L.act(g, L.join(static_cast<int>(a), static_cast<int>(b))) ==
                              L.join(L.act(g, static_cast<int>(a)), L.act(g, static_cast<int>(b))),
                       fmt("action breaks join at g=%d a=%zu b=%zu", g, a, b));
          std::vector<int> orbit_of(L.size(), -1);
          size_t covered = 0;
          const auto& orbits = L.orbits();
          for (size_t o = 0; o < orbits.size(); ++o)
            for (int x : orbits[o]) {
              expect(r, orbit_of[x] == -1, fmt("node %d listed in two orbits", x));
              orbit_of[x] = static_cast<int>(o);
              ++covered;
            }
          expect(r, covered == L.size(), "orbits do not partition the lattice");
          for (int g : W.generator_ids())
            for (size_t x = 0; x < L.size() && r.pass; ++x)
              expect(r, orbit_of[L.act(g, static_cast<int>(x))] == orbit_of[x],
                     fmt("generator %d leaves the orbit of node %zu", g, x));
          r.details = fmt("%zu orbits", orbits.size());
        });

  R.run("dimension-identity",
        "sum over lattice orbits of |orbit|^2 |N(W0)| equals |L| |W|",
        [&](CheckReport& r) {
          unsigned long lhs = 0;
          for (const auto& orbit : L.orbits())
            lhs += static_cast<unsigned long>(orbit.size()) * orbit.size() *
                   L.node(orbit[0]).normalizer.size();
          unsigned long rhs = static_cast<unsigned long>(L.size()) * W.size();
          r.details = fmt("%lu = %lu", lhs, rhs);
          expect(r, lhs == rhs, "identity fails");
          if (profile && profile->dim_identity)
            expect(r, rhs == *profile->dim_identity,
                   fmt("expected %lu for this preset", *profile->dim_identity));
        });

  return SuiteResult{"lattice", std::move(R.checks)};
}

namespace {

void dunkl_checks(Runner& R, const ReflectionGroup& W, const SkewContext& ctx,
                  const std::string& tag, const std::vector<ParameterSet>& draws) {
  const unsigned n = W.rank();
  const std::vector<int> conj = conjugation_set(W, ctx);

  R.run("commutativity-" + tag,
        "the Dunkl elements pairwise commute at every sampled parameter choice",
        [&](CheckReport& r) {
          for (size_t d = 0; d < draws.size() && r.pass; ++d) {
            CherednikAlgebra A(&ctx, draws[d]);
            for (unsigned i = 0; i < n; ++i)
              for (unsigned j = i + 1; j < n; ++j) {
                expect(r, A.commutator(A.y(i), A.y(j)).is_zero(),
                       fmt("[T_%u, T_%u] is nonzero at draw %zu", i, j, d));
                expect(r, A.commutator(A.x(i), A.x(j)).is_zero(),
                       fmt("[x_%u, x_%u] is nonzero at draw %zu", i, j, d));
              }
          }
          r.details = fmt("%zu draws, rank %u", draws.size(), n);
        });

  R.run("equivariance-" + tag,
        "conjugating a Dunkl element by a carrier element matches the linear action on vectors",
        [&](CheckReport& r) {
          for (size_t d = 0; d < draws.size() && r.pass; ++d) {
            CherednikAlgebra A(&ctx, draws[d]);
            for (int g : conj) {
              int ginv = W.inverse(g);
              for (unsigned i = 0; i < n && r.pass; ++i) {
                NormalElement lhs =
                    A.product(A.product(A.group(g), A.y(i)), A.group(ginv));
                CycVector gv = W.act_vector(g, unit_vector(n, i));
                NormalElement rhs = A.zero();
                for (unsigned j = 0; j < n; ++j) rhs += A.y(j) * gv[j];
                expect(r, lhs == rhs, fmt("g T g^-1 mismatch at g=%d i=%u draw %zu", g, i, d));

                NormalElement lhx =
                    A.product(A.product(A.group(g), A.x(i)), A.group(ginv));
                CycVector gc = W.act_covector(g, unit_vector(n, i));
                NormalElement rhx = A.zero();
                for (unsigned j = 0; j < n; ++j) rhx += A.x(j) * gc[j];
                expect(r, lhx == rhx, fmt("g x g^-1 mismatch at g=%d i=%u draw %zu", g, i, d));
              }
              if (!r.pass) break;
            }
          }
        });

  R.run("euler-relations-" + tag,
        "the Euler element satisfies [eu, x] = x, [eu, T] = -T, and commutes with the carrier and the idempotents",
        [&](CheckReport& r) {
          for (size_t d = 0; d < draws.size() && r.pass; ++d) {
            CherednikAlgebra A(&ctx, draws[d]);
            NormalElement eu = A.euler();
            for (unsigned i = 0; i < n; ++i) {
              expect(r, A.commutator(eu, A.x(i)) == A.x(i),
                     fmt("[eu, x_%u] != x_%u at draw %zu", i, i, d));
              expect(r, A.commutator(eu, A.y(i)) == A.y(i) * Cyclotomic(Rational(-1)),
                     fmt("[eu, T_%u] != -T_%u at draw %zu", i, i, d));
            }
            for (int g : conj)
              expect(r, A.commutator(eu, A.group(g)).is_zero(),
                     fmt("[eu, w] nonzero at g=%d draw %zu", g, d));
            if (ctx.flavor() == Flavor::Lattice)
              for (size_t node = 0; node < ctx.lattice().size(); ++node)
                expect(r, A.commutator(eu, A.idem(static_cast<int>(node))).is_zero(),
                       fmt("[eu, e_%zu] nonzero at draw %zu", node, d));
          }
        });
}

}  // namespace

SuiteResult run_dunkl_suite(const RunConfig& cfg) {
  Runner R;
  ReflectionGroup W = cfg.build_group();
  SubgroupLattice L = SubgroupLattice::build(W);
  std::mt19937_64 rng(cfg.seed);

  std::vector<ParameterSet> draws;
  if (!cfg.params.empty()) draws.push_back(cfg.exact_params(W));
  while (draws.size() < 3) draws.push_back(draw_params(W, rng));

  SkewContext ctxA = SkewContext::subgroup_pair(W, L, flavor_a_node(cfg, W, L));
  SkewContext ctxB = SkewContext::lattice_pair(W, L);
  dunkl_checks(R, W, ctxA, "subgroup", draws);
  dunkl_checks(R, W, ctxB, "lattice", draws);

  if (cfg.preset == "G(2,1,1)") {
    R.run("rank1-bracket",
          "for the order-two cyclic group at k = (0, c), [T, x] = 1 + 2c s",
          [&](CheckReport& r) {
            SkewContext ctx = SkewContext::subgroup_pair(W, L, L.bottom());
            ParameterSet k = ParameterSet::zero(W);
            Rational c(1, 3);
            k.by_orbit[0][1] = c;
            CherednikAlgebra A(&ctx, k);
            int s = W.reflections()[0];
            NormalElement want = A.scalar(Cyclotomic(Rational(1))) +
                                 A.group(s) * Cyclotomic(c * 2);
            expect(r, A.commutator(A.y(0), A.x(0)) == want, "bracket mismatch");
          });
  }

  return SuiteResult{"dunkl", std::move(R.checks)};
}

namespace {

void pbw_checks(Runner& R, const ReflectionGroup& W, const SubgroupLattice& L,
                const SkewContext& ctx, const std::string& tag, const ParameterSet& k) {
  const unsigned n = W.rank();
  CherednikAlgebra A(&ctx, k);
  const bool lattice = ctx.flavor() == Flavor::Lattice;

  R.run("confluence-" + tag,
        "left and right straightening agree on every three-letter word over the generator alphabet",
        [&](CheckReport& r) {
          std::vector<Letter> alphabet;
          for (unsigned i = 0; i < n; ++i) alphabet.push_back({Letter::X, static_cast<int>(i)});
          for (unsigned i = 0; i < n; ++i) alphabet.push_back({Letter::Y, static_cast<int>(i)});
          for (int g : conjugation_set(W, ctx)) alphabet.push_back({Letter::G, g});
          if (lattice)
            for (size_t node = 0; node < L.size(); ++node)
              alphabet.push_back({Letter::E, static_cast<int>(node)});
          size_t words = 0;
          for (const Letter& a : alphabet)
            for (const Letter& b : alphabet) {
              for (const Letter& c : alphabet) {
                Word w{a, b, c};
                if (!(A.straighten(w, PeelSide::Left) == A.straighten(w, PeelSide::Right))) {
                  expect(r, false,
                         fmt("confluence fails on word kinds (%d,%d,%d) idx (%d,%d,%d)",
                             a.kind, b.kind, c.kind, a.idx, b.idx, c.idx));
                  break;
                }
                ++words;
              }
              if (!r.pass) break;
            }
          r.details = fmt("%zu words over %zu letters", words, alphabet.size());
        });

  R.run("triangularity-" + tag,
        "the normal form of T^b x^a e w is x^a e w (w^-1 T)^b plus strictly lower-degree terms",
        [&](CheckReport& r) {
          std::vector<Monomial> degs;
          {
            Monomial zero(n, 0);
            degs.push_back(zero);
            for (unsigned i = 0; i < n; ++i) {
              Monomial m = zero;
              m[i] = 1;
              degs.push_back(m);
              m[i] = 2;
              degs.push_back(m);
            }
            if (n >= 2) {
              Monomial m(n, 0);
              m[0] = 1;
              m[1] = 1;
              degs.push_back(m);
            }
          }
          std::vector<int> ws{0};
          for (int g : W.generator_ids())
            if (std::find(ws.begin(), ws.end(), g) == ws.end()) ws.push_back(g);
          std::vector<int> lams;
          if (lattice) {
            lams.push_back(L.bottom());
            if (L.top() != L.bottom()) lams.push_back(L.top());
          } else {
            lams.push_back(-1);
          }
          for (int w : ws)
            for (int lam : lams)
              for (const Monomial& a : degs)
                for (const Monomial& b : degs) {
                  Word word;
                  for (unsigned i = 0; i < n; ++i)
                    for (unsigned e = 0; e < b[i]; ++e) word.push_back({Letter::Y, static_cast<int>(i)});
                  for (unsigned i = 0; i < n; ++i)
                    for (unsigned e = 0; e < a[i]; ++e) word.push_back({Letter::X, static_cast<int>(i)});
                  if (lattice) word.push_back({Letter::E, lam});
                  word.push_back({Letter::G, w});
                  NormalElement nf = A.straighten(word);

                  Poly twist = Poly::constant(n, Cyclotomic(Rational(1)));
                  int winv = W.inverse(w);
                  for (unsigned i = 0; i < n; ++i)
                    for (unsigned e = 0; e < b[i]; ++e)
                      twist = twist * Poly::linear_form(W.act_vector(winv, unit_vector(n, i)));

                  unsigned total = monomial_degree(a) + monomial_degree(b);
                  std::map<NormalKey, Cyclotomic> top;
                  for (const auto& [key, c] : nf.terms())
                    if (monomial_degree(key.xpow) + monomial_degree(key.ypow) == total)
                      top[key] = c;
                  std::map<NormalKey, Cyclotomic> want;
                  for (const auto& [mono, c] : twist.terms())
                    want[NormalKey{a, lam, w, mono}] = c;
                  if (!(top == want)) {
                    expect(r, false, fmt("leading block mismatch at w=%d lam=%d", w, lam));
                    return;
                  }
                }
        });
}

}  // namespace

SuiteResult run_pbw_suite(const RunConfig& cfg) {
  Runner R;
  ReflectionGroup W = cfg.build_group();
  SubgroupLattice L = SubgroupLattice::build(W);
  std::mt19937_64 rng(cfg.seed);
  ParameterSet k = exact_params_or_draw(cfg, W, rng);

  SkewContext ctxA = SkewContext::subgroup_pair(W, L, flavor_a_node(cfg, W, L));
  SkewContext ctxB = SkewContext::lattice_pair(W, L);
  pbw_checks(R, W, L, ctxA, "subgroup", k);
  pbw_checks(R, W, L, ctxB, "lattice", k);

  R.run("standard-module-dimensions",
        "standard modules are graded with slice dimensions binom(n+i-1,i) dim E and generator actions respecting the grading",
        [&](CheckReport& r) {
          const unsigned n = W.rank();
          unsigned cap = std::min<unsigned>(cfg.degree, 5);
          CherednikAlgebra A(&ctxB, k);
          std::vector<SimpleModule> simples = simple_modules(L);
          size_t limit = std::min<size_t>(simples.size(), 12);
          for (size_t s = 0; s < limit && r.pass; ++s) {
            StandardModule M(A, simples[s], cap);
            for (unsigned i = 0; i <= cap; ++i) {
              Integer want = binomial(n + i - 1, i) * M.fiber_dim();
              expect(r, Integer(M.slice_dim(i)) == want,
                     fmt("slice %u of simple %zu has wrong dimension", i, s));
            }
            for (unsigned i = 0; i < cap && r.pass; ++i)
              for (unsigned j = 0; j < n; ++j) {
                M.action(A.x(j), i, i + 1);
                if (i > 0) M.action(A.y(j), i, i - 1);
              }
            for (int g : W.generator_ids()) M.action(A.group(g), 1, 1);
          }
          CherednikAlgebra AS(&ctxA, k);
          std::vector<int> carrier = ctxA.carrier();
          for (const Irrep& chi : subgroup_irreps(W, carrier)) {
            StandardModule M(AS, chi, cap);
            for (unsigned i = 0; i <= cap; ++i) {
              Integer want = binomial(n + i - 1, i) * M.fiber_dim();
              expect(r, Integer(M.slice_dim(i)) == want,
                     fmt("subgroup slice %u of %s has wrong dimension", i, chi.name.c_str()));
            }
            for (unsigned i = 0; i < cap && r.pass; ++i)
              for (unsigned j = 0; j < n; ++j) {
                M.action(AS.x(j), i, i + 1);
                if (i > 0) M.action(AS.y(j), i, i - 1);
              }
          }
          r.details = fmt("degree cap %u, %zu lattice simples", cap, limit);
        });

  return SuiteResult{"pbw", std::move(R.checks)};
}

SuiteResult run_modules_suite(const RunConfig& cfg) {
  Runner R;
  ReflectionGroup W = cfg.build_group();
  SubgroupLattice L = SubgroupLattice::build(W);
  std::mt19937_64 rng(cfg.seed);
  ParameterSet k = exact_params_or_draw(cfg, W, rng);
  std::vector<SimpleModule> simples = simple_modules(L);

  R.run("simple-construction",
        "every lattice orbit and normalizer character yields a verified simple with dimensions square-summing to |L| |W|",
        [&](CheckReport& r) {
          unsigned long sum = 0;
          for (const auto& E : simples) sum += static_cast<unsigned long>(E.dim) * E.dim;
          unsigned long want = static_cast<unsigned long>(L.size()) * W.size();
          r.details = fmt("%zu simples, sum of dim^2 = %lu", simples.size(), sum);
          expect(r, sum == want, fmt("expected %lu", want));
        });

  std::vector<Cyclotomic> scalars;
  R.run("central-scalars",
        "the spectral sum acts by an exact scalar on every simple, zero on bottom-orbit simples",
        [&](CheckReport& r) {
          for (const auto& E : simples) {
            Cyclotomic c = central_scalar(E, k);
            scalars.push_back(c);
            if (E.base_node == L.bottom())
              expect(r, c.is_zero(), fmt("c_E nonzero on bottom simple %s", E.name.c_str()));
          }
          r.details = fmt("%zu scalars", scalars.size());
        });

  R.run("scalar-order",
        "the ordering on central scalars detects exactly the positive integer gaps",
        [&](CheckReport& r) {
          for (size_t i = 0; i < scalars.size() && r.pass; ++i)
            for (size_t j = 0; j < scalars.size(); ++j) {
              COrder oc = order_compare(scalars[i], scalars[j]);
              auto d = (scalars[i] - scalars[j]).as_rational();
              bool greater = d.has_value() && d->get_den() == 1 && *d > 0;
              bool less = d.has_value() && d->get_den() == 1 && *d < 0;
              expect(r, (oc == COrder::Greater) == greater,
                     fmt("Greater misreported at (%zu,%zu)", i, j));
              expect(r, (oc == COrder::Less) == less, fmt("Less misreported at (%zu,%zu)", i, j));
              if (!r.pass) break;
            }
        });

  R.run("euler-grading",
        "the Euler element acts on the degree-i slice of a standard module as (i - c_E) identity",
        [&](CheckReport& r) {
          SkewContext ctx = SkewContext::lattice_pair(W, L);
          CherednikAlgebra A(&ctx, k);
          NormalElement eu = A.euler();
          unsigned cap = std::min<unsigned>(cfg.degree, 3);
          std::vector<size_t> pick{0};
          size_t big = 0;
          for (size_t s = 0; s < simples.size(); ++s)
            if (simples[s].dim > simples[big].dim) big = s;
          if (big != 0) pick.push_back(big);
          if (simples.size() > 1 && simples.size() - 1 != big) pick.push_back(simples.size() - 1);
          for (size_t s : pick) {
            StandardModule M(A, simples[s], cap);
            Cyclotomic cE = M.lowest_scalar(k);
            for (unsigned i = 0; i <= cap; ++i) {
              CycMatrix got = M.action(eu, i, i);
              CycMatrix want =
                  CycMatrix::identity(M.slice_dim(i)) * (Cyclotomic(Rational(i)) - cE);
              expect(r, got == want, fmt("Euler action wrong on slice %u of simple %zu", i, s));
            }
          }
          r.details = fmt("%zu modules to degree %u", pick.size(), cap);
        });

  if (cfg.preset == "S3" && !cfg.params.empty()) {
    ParameterSet kc = cfg.exact_params(W);
    if (kc.by_orbit.size() == 1 && kc.by_orbit[0].size() == 2 && kc.by_orbit[0][0] == 0) {
      R.run("scalar-golden",
            "for the symmetric group on three letters at k = (0, c) the central scalars are "
            "{0,0,0} on bottom, {0, 2c} on the reflection orbit, {0, 6c, 3c} on top",
            [&](CheckReport& r) {
              Cyclotomic c{kc.by_orbit[0][1]};
              std::vector<Cyclotomic> want{Cyclotomic(Rational(0)), Cyclotomic(Rational(0)),
                                           Cyclotomic(Rational(0)), Cyclotomic(Rational(0)),
                                           c * Cyclotomic(Rational(2)), Cyclotomic(Rational(0)),
                                           c * Cyclotomic(Rational(6)), c * Cyclotomic(Rational(3))};
              std::vector<Cyclotomic> got;
              for (const auto& E : simples) got.push_back(central_scalar(E, kc));
              expect(r, got.size() == want.size(), "unexpected simple count");
              std::vector<bool> used(want.size(), false);
              for (const auto& g : got) {
                bool matched = false;
                for (size_t i = 0; i < want.size(); ++i)
                  if (!used[i] && g == want[i]) {
                    used[i] = true;
                    matched = true;
                    break;
                  }
                if (!matched) {
                  expect(r, false, "scalar multiset mismatch");
                  break;
                }
              }
            });
    }
  }

  return SuiteResult{"modules", std::move(R.checks)};
}

SuiteResult run_monodromy_suite(const RunConfig& cfg) {
  Runner R;
  ReflectionGroup W = cfg.build_group();
  SubgroupLattice L = SubgroupLattice::build(W);
  std::mt19937_64 rng(cfg.seed);
  ComplexParams ck = complex_params_or_draw(cfg, W, rng);
  std::vector<SimpleModule> simples = simple_modules(L);
  const auto& hps = W.hyperplanes();

  CVector x0 = default_basepoint(W);
  const double tol = cfg.tol;
  const double itol = std::max(tol * 1e-2, 1e-13);

  size_t big = 0;
  for (size_t s = 0; s < simples.size(); ++s)
    if (simples[s].dim > simples[big].dim) big = s;
  const SimpleModule& Ebig = simples[big];

  // The numeric loops should see a connection that actually has poles, so
  // pick the simple with the largest total residue norm at these parameters.
  size_t rich = 0;
  double richness = -1;
  for (size_t s = 0; s < simples.size(); ++s) {
    Connection C = Connection::lattice(simples[s], ck);
    double total = 0;
    for (int h : C.poles()) total += C.residue(h).norm();
    if (total > richness) {
      richness = total;
      rich = s;
    }
  }
  const SimpleModule& Erich = simples[rich];

  R.run("zero-parameter-deck",
        "at k = 0 every braided reflection equals the deck action and has order m_H",
        [&](CheckReport& r) {
          Connection C0 = Connection::lattice(Ebig, ComplexParams::zero(W));
          r.tolerance = tol;
          for (size_t h = 0; h < hps.size(); ++h) {
            Monodromy mon = braided_monodromy(C0, static_cast<int>(h), x0, itol);
            double d1 = (mon.matrix - C0.fiber_action(hps[h].distinguished)).norm();
            double d2 =
                (cmat_pow(mon.matrix, hps[h].order) -
                 CMatrix::Identity(mon.matrix.rows(), mon.matrix.cols()))
                    .norm();
            r.residual = std::max({r.residual, d1, d2});
          }
          expect(r, r.residual <= r.tolerance, "zero-parameter monodromy drifts");
        });

  R.run("bottom-fiber-order",
        "bottom-orbit fibers carry zero residues and every braided reflection satisfies sigma^(m_H) = 1",
        [&](CheckReport& r) {
          r.tolerance = 10 * tol;
          size_t count = 0;
          for (const auto& E : simples) {
            if (E.base_node != L.bottom()) continue;
            ++count;
            Connection C = Connection::lattice(E, ck);
            for (int h : C.poles())
              expect(r, C.residue(h).norm() == 0.0,
                     fmt("nonzero residue on bottom simple %s", E.name.c_str()));
            for (size_t h = 0; h < hps.size(); ++h) {
              Monodromy mon = braided_monodromy(C, static_cast<int>(h), x0, itol);
              double d = (cmat_pow(mon.matrix, hps[h].order) -
                          CMatrix::Identity(mon.matrix.rows(), mon.matrix.cols()))
                             .norm();
              r.residual = std::max(r.residual, d);
            }
          }
          r.details = fmt("%zu bottom simples", count);
          expect(r, r.residual <= r.tolerance, "specialized braided reflection order fails");
        });

  R.run("braided-minimal-polynomial",
        "transport along every braided loop converges; fitted minimal polynomials of the monodromy are reported",
        [&](CheckReport& r) {
          Connection C = Connection::lattice(Erich, ck);
          r.details = fmt("fiber %s (dim %u), residue mass %.3e; ", Erich.name.c_str(),
                          Erich.dim, richness);
          r.tolerance = tol;
          for (size_t h = 0; h < hps.size(); ++h) {
            Monodromy mon = braided_monodromy(C, static_cast<int>(h), x0, itol);
            r.residual = std::max(r.residual, mon.error_estimate);
            HeckeReport hk = check_hecke(mon.matrix, hps[h].order);
            r.details += fmt("h%zu: minpoly degree %u (m_H = %u), fit residual %.3e; ", h,
                             hk.minpoly_degree, hk.order, hk.fit_residual);
          }
          expect(r, r.residual <= r.tolerance, "transport error estimate too large");
        });

  if (W.rank() == 1 && hps.size() == 1) {
    R.run("rank1-oracle",
          "braided monodromy on each top character of the cyclic group matches exp(-2 pi i (l/m + k_l))",
          [&](CheckReport& r) {
            r.tolerance = 10 * tol;
            unsigned m = hps[0].order;
            int s = hps[0].distinguished;
            for (const auto& E : simples) {
              if (E.base_node != L.top()) continue;
              long l = -1;
              for (unsigned cand = 0; cand < m; ++cand)
                if (E.chi.character(s) == Cyclotomic::root_of_unity(m, -static_cast<long>(cand))) {
                  l = cand;
                  break;
                }
              expect(r, l >= 0, fmt("top character %s is not a determinant power", E.name.c_str()));
              if (l < 0) continue;
              Connection C = Connection::lattice(E, ck);
              Monodromy mon = braided_monodromy(C, 0, x0, itol);
              Complex want = rank1_oracle(m, static_cast<unsigned>(l), ck.by_orbit[0][l]);
              r.residual = std::max(r.residual, std::abs(mon.matrix(0, 0) - want));
            }
            expect(r, r.residual <= r.tolerance, "rank-1 eigenvalue mismatch");
          });
  }

  R.run("contractible-loop",
        "transport around a contractible square is the identity",
        [&](CheckReport& r) {
          Connection C = Connection::lattice(Erich, ck);
          r.tolerance = 10 * tol;
          double dist = arrangement_distance(W, x0);
          Complex d(0.3 * dist, 0);
          Complex id(0, 0.3 * dist);
          CVector e0 = CVector::Zero(x0.size());
          e0(0) = 1;
          CVector p0 = x0, p1 = x0 + d * e0, p2 = x0 + (d + id) * e0, p3 = x0 + id * e0;
          Path path{Segment::line(p0, p1), Segment::line(p1, p2), Segment::line(p2, p3),
                    Segment::line(p3, p0)};
          Transport T = transport(C, path, itol, 0.25 * dist);
          r.residual =
              (T.matrix - CMatrix::Identity(T.matrix.rows(), T.matrix.cols())).norm();
          expect(r, r.residual <= r.tolerance, "contractible transport drifts");
        });

  R.run("orbit-conjugacy",
        "monodromy along the image of a braided loop is the fiber conjugate, and conjugated distinguished reflections agree exactly",
        [&](CheckReport& r) {
          Connection C = Connection::lattice(Erich, ck);
          r.tolerance = 100 * tol;
          std::vector<CMatrix> base;
          for (size_t h = 0; h < hps.size(); ++h)
            base.push_back(braided_monodromy(C, static_cast<int>(h), x0, itol).matrix);
          for (int g : W.generator_ids()) {
            CMatrix rg = C.fiber_action(g);
            CMatrix rginv = C.fiber_action(W.inverse(g));
            CVector x1 = to_complex(W.matrix(g)) * x0;
            for (size_t h = 0; h < hps.size(); ++h) {
              int h2 = W.hyperplane_image(g, static_cast<int>(h));
              expect(r, W.conjugate(g, hps[h].distinguished) == hps[h2].distinguished,
                     fmt("conjugated distinguished reflection mismatch at g=%d h=%zu", g, h));
              Monodromy mon = braided_monodromy(C, h2, x1, itol);
              r.residual =
                  std::max(r.residual, (mon.matrix - rg * base[h] * rginv).norm());
            }
          }
          expect(r, r.residual <= r.tolerance, "monodromy is not equivariant");
        });

  R.run("homotopy-and-composition",
        "transport is homotopy invariant in the loop radius and multiplicative under concatenation",
        [&](CheckReport& r) {
          Connection C = Connection::lattice(Erich, ck);
          r.tolerance = 10 * tol;
          Monodromy m1 = braided_monodromy(C, 0, x0, itol, 1.0);
          Monodromy m2 = braided_monodromy(C, 0, x0, itol, 0.5);
          r.residual = (m1.matrix - m2.matrix).norm();
          BraidLoop bl = braided_loop(C, 0, x0);
          Path p1{bl.path.front()};
          Path p2(bl.path.begin() + 1, bl.path.end());
          double margin = 0.5 * std::min(path_distance(W, p1), path_distance(W, p2));
          Transport t1 = transport(C, p1, itol, margin);
          Transport t2 = transport(C, p2, itol, margin);
          Transport whole = transport(C, bl.path, itol, margin);
          r.residual = std::max(r.residual, (whole.matrix - t2.matrix * t1.matrix).norm());
          expect(r, r.residual <= r.tolerance, "homotopy or composition drifts");
        });

  R.run("regular-singularities",
        "full-circle transport norms stay bounded as the loop radius shrinks",
        [&](CheckReport& r) {
          Connection C = Connection::lattice(Erich, ck);
          std::vector<RadialProbe> probes =
              regularity_probe(C, 0, x0, {1e-1, 1e-2, 1e-3}, itol);
          double lo = probes[0].norm, hi = probes[0].norm;
          for (const auto& p : probes) {
            lo = std::min(lo, p.norm);
            hi = std::max(hi, p.norm);
            r.details += fmt("r=%.0e: |T| = %.6f; ", p.radius, p.norm);
          }
          expect(r, hi <= 1e6 && hi / std::max(lo, 1e-300) <= 100.0,
                 "transport norms blow up near the hyperplane");
        });

  return SuiteResult{"monodromy", std::move(R.checks)};
}

std::vector<SuiteResult> run_suites(const RunConfig& cfg, const std::string& verb) {
  std::vector<SuiteResult> out;
  auto want = [&](const std::string& s) { return verb == "all" || verb == s; };
  bool known = verb == "all";
  if (want("group")) { out.push_back(run_group_suite(cfg)); known = true; }
  if (want("lattice")) { out.push_back(run_lattice_suite(cfg)); known = true; }
  if (want("dunkl")) { out.push_back(run_dunkl_suite(cfg)); known = true; }
  if (want("pbw")) { out.push_back(run_pbw_suite(cfg)); known = true; }
  if (want("modules")) { out.push_back(run_modules_suite(cfg)); known = true; }
  if (want("monodromy")) { out.push_back(run_monodromy_suite(cfg)); known = true; }
  if (!known) throw ConfigError("unknown suite '" + verb + "'");
  return out;
}

std::string report_json(const RunConfig& cfg, const std::string& verb,
                        const std::vector<SuiteResult>& suites) {
  nlohmann::ordered_json j;
  j["tool"] = "cheredctl";
  j["verb"] = verb;
  j["config"] = nlohmann::ordered_json{
      {"group", cfg.preset.empty() ? fmt("generators(%zu)", cfg.generators.size()) : cfg.preset},
      {"w0_hyperplanes", cfg.w0_hyperplanes},
      {"degree", cfg.degree},
      {"tol", cfg.tol},
      {"seed", cfg.seed}};
  bool all = true;
  nlohmann::ordered_json js = nlohmann::ordered_json::array();
  for (const auto& s : suites) {
    nlohmann::ordered_json one;
    one["suite"] = s.suite;
    one["pass"] = s.all_pass();
    all = all && s.all_pass();
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : s.checks)
      checks.push_back(nlohmann::ordered_json{{"name", c.name},
                                              {"claim", c.claim},
                                              {"pass", c.pass},
                                              {"residual", c.residual},
                                              {"tolerance", c.tolerance},
                                              {"details", c.details}});
    one["checks"] = std::move(checks);
    js.push_back(std::move(one));
  }
  j["suites"] = std::move(js);
  j["pass"] = all;
  return j.dump(2) + "\n";
}

std::string report_human(const std::vector<SuiteResult>& suites) {
  std::string out;
  size_t total = 0, passed = 0;
  for (const auto& s : suites) {
    out += fmt("suite %s\n", s.suite.c_str());
    for (const auto& c : s.checks) {
      ++total;
      if (c.pass) ++passed;
      out += fmt("  [%s] %-34s (%6.2fs)", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.seconds);
      if (c.tolerance > 0) out += fmt("  residual %.3e <= %.1e", c.residual, c.tolerance);
      out += "\n";
      if (!c.pass) out += fmt("         %s\n         %s\n", c.claim.c_str(), c.details.c_str());
    }
  }
  out += fmt("%zu/%zu checks passed\n", passed, total);
  return out;
}

}  // namespace chered

#include "chered/monodromy.hpp"

#include <algorithm>
#include <cmath>

#include "chered/error.hpp"
#include "chered/group_algebra.hpp"

namespace chered {
namespace {

constexpr double kPi = 3.14159265358979323846;

void require(bool ok, const char* msg) {
  if (!ok) throw CheckError(msg);
}

Complex cdot(const CVector& a, const CVector& x) {
  return (a.array() * x.array()).sum();
}

std::vector<CVector> complex_alphas(const ReflectionGroup& W) {
  std::vector<CVector> out;
  for (const Hyperplane& hp : W.hyperplanes()) out.push_back(to_complex(hp.alpha));
  return out;
}

}  // namespace

Complex to_complex(const Cyclotomic& c) {
  const unsigned n = c.conductor();
  Complex z = 0;
  const std::vector<Rational>& a = c.coeffs();
  for (unsigned i = 0; i < a.size(); ++i)
    z += a[i].get_d() * std::polar(1.0, 2.0 * kPi * double(i) / double(n));
  return z;
}

CMatrix to_complex(const CycMatrix& m) {
  CMatrix z(m.rows(), m.cols());
  for (unsigned i = 0; i < m.rows(); ++i)
    for (unsigned j = 0; j < m.cols(); ++j) z(i, j) = to_complex(m.at(i, j));
  return z;
}

CVector to_complex(const CycVector& v) {
  CVector z(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) z(long(i)) = to_complex(v[i]);
  return z;
}

ComplexParams ComplexParams::zero(const ReflectionGroup& W) {
  ComplexParams k;
  for (const auto& orbit : W.hyperplane_orbits())
    k.by_orbit.emplace_back(W.hyperplanes()[orbit.front()].order, Complex(0));
  return k;
}

ComplexParams ComplexParams::from_exact(const ReflectionGroup& W, const ParameterSet& k) {
  k.validate(W);
  ComplexParams out;
  for (const auto& seq : k.by_orbit) {
    std::vector<Complex> row;
    for (const Rational& r : seq) row.emplace_back(r.get_d(), 0.0);
    out.by_orbit.push_back(std::move(row));
  }
  return out;
}

void ComplexParams::validate(const ReflectionGroup& W) const {
  const auto& orbits = W.hyperplane_orbits();
  require(by_orbit.size() == orbits.size(), "parameter orbit count mismatch");
  for (std::size_t o = 0; o < orbits.size(); ++o)
    require(by_orbit[o].size() == W.hyperplanes()[orbits[o].front()].order,
            "parameter sequence length differs from m_H");
}

const std::vector<Complex>& ComplexParams::for_hyperplane(const ReflectionGroup& W,
                                                          int h) const {
  return by_orbit.at(static_cast<std::size_t>(W.hyperplanes()[h].orbit));
}

Connection Connection::lattice(const SimpleModule& E, const ComplexParams& k) {
  const SubgroupLattice& L = *E.L;
  const ReflectionGroup& W = L.group();
  k.validate(W);
  Connection C;
  C.W_ = &W;
  C.dim_ = E.dim;
  C.fiberB_ = E;
  for (int h = 0; h < static_cast<int>(W.hyperplanes().size()); ++h) {
    const std::vector<Complex>& ks = k.for_hyperplane(W, h);
    const unsigned m = W.hyperplanes()[h].order;
    const CycMatrix P = E.act_idem(L.atom(h));
    CMatrix B = CMatrix::Zero(E.dim, E.dim);
    for (unsigned j = 0; j < m; ++j) {
      if (ks[j] == Complex(0)) continue;
      GroupAlgebraElement eps = epsilon_element(W, h, j);
      CycMatrix R(E.dim, E.dim);
      for (const auto& [g, c] : eps.terms()) R = R + E.act_group(g) * c;
      B += (double(m) * ks[j]) * to_complex(R * P);
    }
    C.poles_.push_back(h);
    C.residues_.emplace(h, std::move(B));
  }
  return C;
}

Connection Connection::subgroup(const SkewContext& ctx, const Irrep& chi,
                                const ComplexParams& k) {
  const ReflectionGroup& W = ctx.group();
  require(ctx.flavor() == Flavor::Subgroup, "subgroup connection needs the subgroup flavor");
  require(chi.elements == ctx.carrier(), "irrep is not one of the carrier");
  k.validate(W);
  Connection C;
  C.W_ = &W;
  C.dim_ = chi.dim;
  C.fiberA_ = chi;
  for (int h : ctx.active_hyperplanes()) {
    const std::vector<Complex>& ks = k.for_hyperplane(W, h);
    const unsigned m = W.hyperplanes()[h].order;
    CMatrix B = CMatrix::Zero(chi.dim, chi.dim);
    for (unsigned j = 0; j < m; ++j) {
      if (ks[j] == Complex(0)) continue;
      GroupAlgebraElement eps = epsilon_element(W, h, j);
      CycMatrix R(chi.dim, chi.dim);
      for (const auto& [g, c] : eps.terms()) R = R + chi.image_of(g) * c;
      B += (double(m) * ks[j]) * to_complex(R);
    }
    C.poles_.push_back(h);
    C.residues_.emplace(h, std::move(B));
  }
  return C;
}

const CMatrix& Connection::residue(int h) const {
  auto it = residues_.find(h);
  require(it != residues_.end(), "no residue on that hyperplane");
  return it->second;
}

CMatrix Connection::fiber_action(int w) const {
  if (fiberB_) return to_complex(fiberB_->act_group(w));
  return to_complex(fiberA_->image_of(w));
}

Segment Segment::line(const CVector& from, const CVector& to) {
  Segment s;
  s.kind = Kind::Line;
  s.base = from;
  s.dir = to - from;
  return s;
}

Segment Segment::arc(const CVector& center, const CVector& dir, Complex z0, double angle) {
  Segment s;
  s.kind = Kind::Arc;
  s.base = center;
  s.dir = dir;
  s.z0 = z0;
  s.angle = angle;
  return s;
}

CVector Segment::at(double t) const {
  if (kind == Kind::Line) return base + t * dir;
  return base + (z0 * std::polar(1.0, angle * t)) * dir;
}

CVector Segment::velocity(double t) const {
  if (kind == Kind::Line) return dir;
  return (z0 * std::polar(1.0, angle * t) * Complex(0, angle)) * dir;
}

double arrangement_distance(const ReflectionGroup& W, const CVector& x) {
  double best = std::numeric_limits<double>::infinity();
  for (const Hyperplane& hp : W.hyperplanes()) {
    const CVector a = to_complex(hp.alpha);
    best = std::min(best, std::abs(cdot(a, x)) / a.norm());
  }
  return best;
}

double path_distance(const ReflectionGroup& W, const Path& path) {
  const std::vector<CVector> alphas = complex_alphas(W);
  std::vector<double> norms;
  for (const CVector& a : alphas) norms.push_back(a.norm());
  double best = std::numeric_limits<double>::infinity();
  for (const Segment& seg : path) {
    for (int i = 0; i <= 128; ++i) {
      const CVector x = seg.at(double(i) / 128.0);
      for (std::size_t h = 0; h < alphas.size(); ++h)
        best = std::min(best, std::abs(cdot(alphas[h], x)) / norms[h]);
    }
  }
  return best;
}

namespace {

BraidLoop build_loop(const ReflectionGroup& W, int h, const CVector& x0, double radius_scale) {
  require(radius_scale > 0 && radius_scale <= 1, "radius scale outside (0, 1]");
  const Hyperplane& hp = W.hyperplanes()[h];
  const CVector alpha = to_complex(hp.alpha);
  const CVector v = to_complex(hp.v);
  const Complex av = cdot(alpha, v);
  require(std::abs(av) > 1e-12, "degenerate complement line");
  const Complex z0 = cdot(alpha, x0) / av;
  require(std::abs(z0) > 1e-9, "basepoint lies on the target hyperplane");
  const CVector center = x0 - z0 * v;

  double rho = std::abs(z0);
  const std::vector<CVector> alphas = complex_alphas(W);
  for (std::size_t h2 = 0; h2 < alphas.size(); ++h2) {
    if (static_cast<int>(h2) == h) continue;
    const double along = std::abs(cdot(alphas[h2], v));
    const double at_center = std::abs(cdot(alphas[h2], center));
    if (along > 1e-12 * alphas[h2].norm() && at_center > 1e-12)
      rho = std::min(rho, at_center / (2 * along));
  }

  rho *= radius_scale;
  BraidLoop loop;
  loop.hyperplane = h;
  loop.deck = hp.distinguished;
  loop.radius = rho;
  const Complex z1 = z0 * (rho / std::abs(z0));
  const double phi = 2 * kPi / double(hp.order);
  Segment approach = Segment::line(x0, center + z1 * v);
  Segment arc = Segment::arc(center, v, z1, phi);
  const CMatrix deck_inv = to_complex(W.matrix(W.inverse(loop.deck)));
  Segment back = Segment::line(arc.at(1.0), deck_inv * x0);
  loop.path = {approach, arc, back};
  return loop;
}

/// Worst clearance over the braided loops of every hyperplane, the quantity
/// that controls integration cost from this basepoint.
double loop_clearance(const ReflectionGroup& W, const CVector& x) {
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t h = 0; h < W.hyperplanes().size(); ++h) {
    const BraidLoop loop = build_loop(W, static_cast<int>(h), x, 1.0);
    worst = std::min(worst, path_distance(W, loop.path));
    if (worst == 0) break;
  }
  return worst;
}

}  // namespace

CVector default_basepoint(const ReflectionGroup& W) {
  static const Complex grid[] = {{1.0, 0.0},   {0.55, 0.25}, {-0.45, 0.4},
                                 {0.8, -0.3},  {-0.65, -0.2}, {0.35, 0.65}};
  const unsigned n = W.rank();
  std::vector<unsigned> pick(n, 0);
  CVector best;
  double best_score = -1;
  for (;;) {
    CVector x(n);
    for (unsigned i = 0; i < n; ++i) x(i) = grid[pick[i]];
    if (arrangement_distance(W, x) > 1e-6) {
      const double score = loop_clearance(W, x);
      if (score > best_score) {
        best_score = score;
        best = x;
      }
    }
    unsigned i = 0;
    while (i < n && ++pick[i] == std::size(grid)) pick[i++] = 0;
    if (i == n) break;
  }
  require(best_score > 0, "no grid candidate clears the arrangement");
  return best;
}

namespace {

/// Dormand-Prince 5(4) embedded pair on s' = -A(t) s, matrix state.
struct Integrator {
  const Connection* C;
  std::vector<CVector> pole_alphas;
  std::vector<const CMatrix*> pole_residues;

  explicit Integrator(const Connection& conn) : C(&conn) {
    for (int h : conn.poles()) {
      pole_alphas.push_back(to_complex(conn.group().hyperplanes()[h].alpha));
      pole_residues.push_back(&conn.residue(h));
    }
  }

  CMatrix rhs(const Segment& seg, double t, const CMatrix& S) const {
    const CVector x = seg.at(t);
    const CVector v = seg.velocity(t);
    CMatrix A = CMatrix::Zero(S.rows(), S.cols());
    for (std::size_t p = 0; p < pole_alphas.size(); ++p) {
      const Complex num = cdot(pole_alphas[p], v);
      const Complex den = cdot(pole_alphas[p], x);
      A += (num / den) * (*pole_residues[p]);
    }
    return -(A * S);
  }

  /// Advances S across one segment; accumulates local error estimates.
  void segment(const Segment& seg, double tol_seg, CMatrix& S, double& err_acc,
               unsigned& steps) const {
    double t = 0;
    double h = 0.05;
    unsigned local_steps = 0;
    while (t < 1.0) {
      h = std::min(h, 1.0 - t);
      const CMatrix k1 = rhs(seg, t, S);
      const CMatrix k2 = rhs(seg, t + h / 5, S + h * (k1 / 5.0));
      const CMatrix k3 = rhs(seg, t + 3 * h / 10, S + h * (3.0 / 40 * k1 + 9.0 / 40 * k2));
      const CMatrix k4 = rhs(seg, t + 4 * h / 5,
                             S + h * (44.0 / 45 * k1 - 56.0 / 15 * k2 + 32.0 / 9 * k3));
      const CMatrix k5 =
          rhs(seg, t + 8 * h / 9,
              S + h * (19372.0 / 6561 * k1 - 25360.0 / 2187 * k2 + 64448.0 / 6561 * k3 -
                       212.0 / 729 * k4));
      const CMatrix k6 =
          rhs(seg, t + h,
              S + h * (9017.0 / 3168 * k1 - 355.0 / 33 * k2 + 46732.0 / 5247 * k3 +
                       49.0 / 176 * k4 - 5103.0 / 18656 * k5));
      const CMatrix y5 = S + h * (35.0 / 384 * k1 + 500.0 / 1113 * k3 + 125.0 / 192 * k4 -
                                  2187.0 / 6784 * k5 + 11.0 / 84 * k6);
      const CMatrix k7 = rhs(seg, t + h, y5);
      const CMatrix y4 = S + h * (5179.0 / 57600 * k1 + 7571.0 / 16695 * k3 +
                                  393.0 / 640 * k4 - 92097.0 / 339200 * k5 +
                                  187.0 / 2100 * k6 + 1.0 / 40 * k7);
      const double err = (y5 - y4).norm();
      const double tol_step = tol_seg * h + 1e-16;
      if (err <= tol_step) {
        t += h;
        S = y5;
        err_acc += err;
        ++steps;
      }
      const double scale = err > 0 ? 0.9 * std::pow(tol_step / err, 0.2) : 5.0;
      h *= std::clamp(scale, 0.2, 5.0);
      require(++local_steps < 200000, "step count explosion, path nearly singular");
    }
  }
};

void check_margin(const ReflectionGroup& W, const Path& path, double margin) {
  require(margin > 0, "margin must be positive");
  require(path_distance(W, path) >= margin * (1 - 1e-9),
          "path runs closer to the arrangement than the margin");
}

}  // namespace

Transport transport(const Connection& C, const Path& path, double tol, double margin) {
  require(!path.empty(), "empty path");
  check_margin(C.group(), path, margin);
  Integrator integ(C);
  Transport out;
  out.matrix = CMatrix::Identity(C.fiber_dim(), C.fiber_dim());
  const double tol_seg = tol / double(path.size());
  for (const Segment& seg : path)
    integ.segment(seg, tol_seg, out.matrix, out.error_estimate, out.steps);
  return out;
}

BraidLoop braided_loop(const Connection& C, int h, const CVector& x0, double radius_scale) {
  return build_loop(C.group(), h, x0, radius_scale);
}

Monodromy braided_monodromy(const Connection& C, int h, const CVector& x0, double tol,
                            double radius_scale) {
  const BraidLoop loop = braided_loop(C, h, x0, radius_scale);
  const double margin = 0.5 * path_distance(C.group(), loop.path);
  const Transport T = transport(C, loop.path, tol, margin);
  Monodromy m;
  m.hyperplane = h;
  m.matrix = C.fiber_action(loop.deck) * T.matrix;
  m.error_estimate = T.error_estimate;
  m.basepoint = x0;
  m.basepoint_distance = arrangement_distance(C.group(), x0);
  return m;
}

HeckeReport check_hecke(const CMatrix& M, unsigned m, double rank_tol) {
  require(M.rows() == M.cols() && M.rows() > 0, "monodromy matrix must be square");
  const long dim = M.rows();
  HeckeReport r;
  r.order = m;
  std::vector<CMatrix> powers{CMatrix::Identity(dim, dim)};
  for (unsigned j = 1; j <= m; ++j) powers.push_back(powers.back() * M);
  r.power_residual = (powers[m] - powers[0]).norm();

  const long K = dim * dim;
  CMatrix V(K, m + 1);
  for (unsigned j = 0; j <= m; ++j)
    V.col(j) = Eigen::Map<const CVector>(powers[j].data(), K);

  r.minpoly_degree = m + 1;
  for (unsigned d = 1; d <= m; ++d) {
    Eigen::JacobiSVD<CMatrix> svd(V.leftCols(d + 1));
    const auto& sv = svd.singularValues();
    r.minpoly_gap = sv(sv.size() - 1);
    if (sv(sv.size() - 1) <= rank_tol * sv(0)) {
      r.minpoly_degree = d;
      break;
    }
  }

  Eigen::JacobiSVD<CMatrix> svd(V.leftCols(m), Eigen::ComputeThinU | Eigen::ComputeThinV);
  const CVector b = V.col(m);
  const CVector c = svd.solve(b);
  r.fitted.assign(c.data(), c.data() + c.size());
  r.fit_residual = (V.leftCols(m) * c - b).norm();
  const auto& sv = svd.singularValues();
  r.fit_condition = sv(0) / sv(sv.size() - 1);
  return r;
}

Complex rank1_oracle(unsigned m, unsigned l, Complex k_l) {
  return std::exp(Complex(0, -2 * kPi) * (Complex(double(l) / double(m), 0) + k_l));
}

std::vector<RadialProbe> regularity_probe(const Connection& C, int h, const CVector& x0,
                                          const std::vector<double>& radii, double tol) {
  const ReflectionGroup& W = C.group();
  const Hyperplane& hp = W.hyperplanes()[h];
  const CVector alpha = to_complex(hp.alpha);
  const CVector v = to_complex(hp.v);
  const Complex z0 = cdot(alpha, x0) / cdot(alpha, v);
  require(std::abs(z0) > 1e-9, "basepoint lies on the target hyperplane");
  const CVector center = x0 - z0 * v;

  std::vector<RadialProbe> out;
  for (double r : radii) {
    const Complex z1 = z0 * (r / std::abs(z0));
    Path circle{Segment::arc(center, v, z1, 2 * kPi)};
    const double margin = 0.5 * path_distance(W, circle);
    const Transport T = transport(C, circle, tol, margin);
    RadialProbe p;
    p.radius = r;
    p.norm = T.matrix.jacobiSvd().singularValues()(0);
    p.error_estimate = T.error_estimate;
    out.push_back(p);
  }
  return out;
}

}  // namespace chered

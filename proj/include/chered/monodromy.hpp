#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "chered/modules.hpp"

namespace chered {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

Complex to_complex(const Cyclotomic& c);
CMatrix to_complex(const CycMatrix& m);
CVector to_complex(const CycVector& v);

/// One complex sequence of length m_H per hyperplane orbit; the numeric
/// counterpart of the exact parameter family.
struct ComplexParams {
  std::vector<std::vector<Complex>> by_orbit;

  static ComplexParams zero(const ReflectionGroup& W);
  static ComplexParams from_exact(const ReflectionGroup& W, const ParameterSet& k);
  void validate(const ReflectionGroup& W) const;
  const std::vector<Complex>& for_hyperplane(const ReflectionGroup& W, int h) const;
};

/// Logarithmic connection d + sum_H (d alpha_H / alpha_H) B_H on one fiber.
/// Residues are exact idempotent combinations, scaled by the complex
/// parameters on entry. The lattice builder keeps the fiber simple module
/// (its lattice must outlive the connection); the subgroup builder keeps the
/// carrier irrep and places poles on the active hyperplanes only.
class Connection {
 public:
  static Connection lattice(const SimpleModule& E, const ComplexParams& k);
  static Connection subgroup(const SkewContext& ctx, const Irrep& chi, const ComplexParams& k);

  const ReflectionGroup& group() const { return *W_; }
  unsigned fiber_dim() const { return dim_; }
  const std::vector<int>& poles() const { return poles_; }
  const CMatrix& residue(int h) const;
  /// rho(w) on the fiber; w must lie in the carrier.
  CMatrix fiber_action(int w) const;

 private:
  Connection() = default;

  const ReflectionGroup* W_ = nullptr;
  unsigned dim_ = 0;
  std::vector<int> poles_;
  std::map<int, CMatrix> residues_;
  std::optional<SimpleModule> fiberB_;
  std::optional<Irrep> fiberA_;
};

/// Piecewise path in complexified V: straight lines, and circular arcs
/// gamma(t) = base + z0 exp(i angle t) dir around a center on a hyperplane.
struct Segment {
  enum class Kind { Line, Arc };

  Kind kind = Kind::Line;
  CVector base;
  CVector dir;
  Complex z0{};
  double angle = 0;

  static Segment line(const CVector& from, const CVector& to);
  static Segment arc(const CVector& center, const CVector& dir, Complex z0, double angle);
  CVector at(double t) const;
  CVector velocity(double t) const;
};

using Path = std::vector<Segment>;

/// Min over hyperplanes of |alpha_H(x)| / ||alpha_H||.
double arrangement_distance(const ReflectionGroup& W, const CVector& x);
/// Sampled min arrangement distance along the path.
double path_distance(const ReflectionGroup& W, const Path& path);
/// Deterministic rational grid point maximizing the min distance.
CVector default_basepoint(const ReflectionGroup& W);

struct Transport {
  CMatrix matrix;
  double error_estimate = 0;
  unsigned steps = 0;
};

/// Fundamental solution of s' = -(sum_H B_H dlog alpha_H(gamma)) s along
/// the path, adaptive embedded 5(4) pair. Throws when the path runs closer
/// to the arrangement than margin.
Transport transport(const Connection& C, const Path& path, double tol, double margin);

struct BraidLoop {
  int hyperplane = -1;
  int deck = 0;  // distinguished reflection s_H
  Path path;     // basepoint to s_H^{-1}(basepoint)
  double radius = 0;
};

/// Approach along the v_H coordinate, positively oriented arc of angle
/// 2 pi / m_H, then the s_H^{-1} image of the approach reversed. The arc
/// radius is the clear radius scaled by radius_scale in (0, 1]; all scales
/// give homotopic loops.
BraidLoop braided_loop(const Connection& C, int h, const CVector& x0,
                       double radius_scale = 1.0);

struct Monodromy {
  int hyperplane = -1;
  CMatrix matrix;
  double error_estimate = 0;
  CVector basepoint;
  double basepoint_distance = 0;
};

/// Fiber action of s_H composed with transport along the braided loop.
Monodromy braided_monodromy(const Connection& C, int h, const CVector& x0, double tol,
                            double radius_scale = 1.0);

struct HeckeReport {
  unsigned order = 0;           // m_H
  double power_residual = 0;    // ||M^m - Id||_F
  unsigned minpoly_degree = 0;  // numerical minimal polynomial degree
  double minpoly_gap = 0;       // smallest singular value at that degree
  std::vector<Complex> fitted;  // monic relation M^m = sum_j fitted[j] M^j
  double fit_residual = 0;
  double fit_condition = 0;
};

HeckeReport check_hecke(const CMatrix& M, unsigned m, double rank_tol = 1e-8);

/// Braided monodromy eigenvalue exp(-2 pi i (l/m + k_l)) on the det^l
/// top-orbit simple of the cyclic rank-one group.
Complex rank1_oracle(unsigned m, unsigned l, Complex k_l);

struct RadialProbe {
  double radius = 0;
  double norm = 0;
  double error_estimate = 0;
};

/// Spectral norms of full-circle transports at shrinking radii around H;
/// regular singularities keep these bounded.
std::vector<RadialProbe> regularity_probe(const Connection& C, int h, const CVector& x0,
                                          const std::vector<double>& radii, double tol);

}  // namespace chered

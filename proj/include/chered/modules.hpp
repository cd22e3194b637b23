#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chered/irreps.hpp"
#include "chered/lattice.hpp"
#include "chered/straighten.hpp"

namespace chered {

/// Simple module of the lattice crossed product: one node orbit together
/// with an irreducible of the base node's normalizer. Basis vectors are
/// (node, fiber) pairs ordered node-major.
struct SimpleModule {
  const SubgroupLattice* L = nullptr;
  int orbit_index = -1;
  int base_node = -1;
  std::vector<int> nodes;        // the orbit, ascending
  std::vector<int> transversal;  // minimal w with w(base) = node
  Irrep chi;
  unsigned dim = 0;
  std::string name;

  CycMatrix act_group(int w) const;
  CycMatrix act_idem(int node) const;
};

/// Builds and exactly verifies one simple module; chi must be an irrep of
/// the base node's normalizer.
SimpleModule build_simple(const SubgroupLattice& L, int orbit_index, Irrep chi);
/// Every simple, over orbits in order and each normalizer's irrep list.
std::vector<SimpleModule> simple_modules(const SubgroupLattice& L);

/// Scalar by which the sum over all hyperplanes of a_H e_{atom(H)} acts on
/// E; throws CheckError when the matrix is not scalar.
Cyclotomic central_scalar(const SimpleModule& E, const ParameterSet& k);
/// Subgroup flavor: scalar of the active-hyperplane sum of a_H through an
/// irrep of the carrier.
Cyclotomic central_scalar(const SkewContext& ctx, const Irrep& chi, const ParameterSet& k);

/// Greater when cE - cF is a positive rational integer, Less when negative,
/// otherwise Incomparable (zero included).
enum class COrder { Less, Greater, Incomparable };
COrder order_compare(const Cyclotomic& cE, const Cyclotomic& cF);

/// Graded slices of the standard module induced from one simple (Lattice
/// flavor) or one carrier irrep (Subgroup flavor). Slice i has basis
/// (degree-i monomial) x (fiber basis), monomial-major.
class StandardModule {
 public:
  StandardModule(const CherednikAlgebra& A, SimpleModule E, unsigned degree_cap);
  StandardModule(const CherednikAlgebra& A, Irrep chi, unsigned degree_cap);

  const CherednikAlgebra& algebra() const { return *A_; }
  unsigned degree_cap() const { return cap_; }
  unsigned fiber_dim() const { return fdim_; }
  unsigned slice_dim(unsigned i) const;
  const std::vector<Monomial>& monomials(unsigned i) const { return mons_.at(i); }
  /// c_E of the fiber.
  Cyclotomic lowest_scalar(const ParameterSet& k) const;
  /// Matrix of op from slice src to slice dst; throws CheckError if any
  /// surviving term lands outside the target slice.
  CycMatrix action(const NormalElement& op, unsigned src, unsigned dst) const;

 private:
  CycMatrix fiber_(int lam, int w) const;

  const CherednikAlgebra* A_;
  std::optional<SimpleModule> E_;
  std::optional<Irrep> chi_;
  unsigned cap_ = 0;
  unsigned fdim_ = 0;
  std::vector<std::vector<Monomial>> mons_;
};

}  // namespace chered

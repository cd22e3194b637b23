#pragma once

#include <map>
#include <string>
#include <vector>

#include "chered/group.hpp"
#include "chered/group_algebra.hpp"
#include "chered/lattice.hpp"
#include "chered/ratfunc.hpp"

namespace chered {

/// Subgroup: coefficients in the normalizer group algebra, reflection sums
/// over the hyperplanes swallowed by the base subgroup. Lattice: coefficients
/// in the whole group crossed with the lattice idempotents, all hyperplanes.
enum class Flavor { Subgroup, Lattice };

/// Shared geometry behind every operator of one flavor: the group, the
/// lattice, the carrier subgroup, the active hyperplanes, and the
/// denominator table. Operators hold a pointer to a live context.
class SkewContext {
 public:
  static SkewContext subgroup_pair(const ReflectionGroup& W, const SubgroupLattice& L,
                                   int node);
  static SkewContext lattice_pair(const ReflectionGroup& W, const SubgroupLattice& L);

  const ReflectionGroup& group() const { return *W_; }
  const SubgroupLattice& lattice() const { return *L_; }
  Flavor flavor() const { return flavor_; }
  /// Base subgroup node (Subgroup flavor) or the lattice bottom (Lattice).
  int base_node() const { return node_; }
  const std::vector<int>& carrier() const { return carrier_; }
  bool in_carrier(int g) const { return member_.at(g) != 0; }
  const std::vector<int>& active_hyperplanes() const { return hyps_; }
  const LinearFormTable& table() const { return table_; }
  int atom_node(int h) const { return L_->atom(h); }

  /// Group action on coefficients: (w.f)(x) = f(w^{-1} x).
  RatFunc act(int w, const RatFunc& f) const;
  /// w d^b w^{-1} expanded as a polynomial in the d variables.
  Poly conjugate_derivative(int w, const Monomial& dpow) const;

 private:
  const ReflectionGroup* W_ = nullptr;
  const SubgroupLattice* L_ = nullptr;
  Flavor flavor_ = Flavor::Subgroup;
  int node_ = -1;
  std::vector<int> carrier_;
  std::vector<char> member_;
  std::vector<int> hyps_;
  LinearFormTable table_;
};

/// One normal-ordered monomial slot: derivatives, then the lattice
/// idempotent (-1 in Subgroup flavor), then the group element.
struct SkewKey {
  Monomial dpow;
  int lam = -1;
  int w = 0;
  auto operator<=>(const SkewKey&) const = default;
};

/// Element of the localized differential-operator algebra twisted by the
/// carrier group (and lattice idempotents in Lattice flavor). Terms are kept
/// in normal order with rational-function coefficients on the left.
class SkewOperator {
 public:
  SkewOperator() = default;
  explicit SkewOperator(const SkewContext* ctx) : ctx_(ctx) {}

  static SkewOperator one(const SkewContext* ctx);
  static SkewOperator function(const SkewContext* ctx, RatFunc f);
  /// Multiplication by the coordinate x_i.
  static SkewOperator coordinate(const SkewContext* ctx, unsigned i);
  /// Multiplication by the linear form sum_i x[i] x_i.
  static SkewOperator covector(const SkewContext* ctx, const CycVector& x);
  /// Directional derivative along the vector y.
  static SkewOperator derivative(const SkewContext* ctx, const CycVector& y);
  static SkewOperator group_element(const SkewContext* ctx, int w);
  static SkewOperator group_sum(const SkewContext* ctx, const GroupAlgebraElement& a);
  /// Lattice flavor only.
  static SkewOperator idempotent(const SkewContext* ctx, int node);

  const SkewContext& context() const { return *ctx_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<SkewKey, RatFunc>& terms() const { return terms_; }
  void add_term(const SkewKey& k, const RatFunc& f);

  SkewOperator& operator+=(const SkewOperator& o);
  SkewOperator& operator-=(const SkewOperator& o);
  friend SkewOperator operator+(SkewOperator a, const SkewOperator& b) { return a += b; }
  friend SkewOperator operator-(SkewOperator a, const SkewOperator& b) { return a -= b; }
  SkewOperator operator-() const;
  friend SkewOperator operator*(const SkewOperator& a, const SkewOperator& b);
  SkewOperator operator*(const Cyclotomic& c) const;
  bool operator==(const SkewOperator& o) const;
  bool operator!=(const SkewOperator& o) const { return !(*this == o); }

  /// g . this . g^{-1}; g must lie in the carrier.
  SkewOperator conjugated_by(int g) const;
  /// Derivative order; -1 for the zero operator.
  int order() const;
  /// Sum of the terms of derivative degree exactly d.
  SkewOperator part_of_order(int d) const;

  std::string str() const;

 private:
  const SkewContext* ctx_ = nullptr;
  std::map<SkewKey, RatFunc> terms_;
};

SkewOperator commutator(const SkewOperator& a, const SkewOperator& b);
/// Product in the associated graded algebra: derivatives slide past
/// coefficients with no correction terms.
SkewOperator symbol_product(const SkewOperator& a, const SkewOperator& b);

/// Reflection sum of one hyperplane, carrying its atom idempotent in the
/// Lattice flavor.
SkewOperator reflection_sum(const SkewContext* ctx, int h, const ParameterSet& k);
SkewOperator dunkl_operator(const SkewContext* ctx, const CycVector& y,
                            const ParameterSet& k);
/// sum_i x_i T_{y_i} - sum_H (reflection sum), which collapses to the Euler
/// vector field exactly.
SkewOperator euler_operator(const SkewContext* ctx, const ParameterSet& k);
SkewOperator euler_vector_field(const SkewContext* ctx);
/// Algebra map sending every lattice idempotent to 1, landing in the
/// Subgroup-flavor context over the full group.
SkewOperator specialize_idempotents(const SkewOperator& op, const SkewContext* target);

}  // namespace chered

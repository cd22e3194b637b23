#pragma once

#include <map>
#include <string>
#include <vector>

#include "chered/group.hpp"
#include "chered/rational.hpp"

namespace chered {

/// One closed subgroup in the lattice. `hyperplanes` is the sorted set of
/// hyperplane ids whose pointwise stabilizer lies inside the subgroup; it is
/// the canonical key. `elements` always starts with the identity.
struct LatticeNode {
  std::vector<int> hyperplanes;
  std::vector<int> elements;
  std::vector<int> normalizer;
};

/// Lattice of saturated reflection subgroups, ordered by inclusion. Built as
/// the join closure of the rank-one stabilizers; node ids are assigned after
/// sorting by (atom count, hyperplane set), so they are reproducible.
class SubgroupLattice {
 public:
  static SubgroupLattice build(const ReflectionGroup& W);

  const ReflectionGroup& group() const { return *W_; }
  std::size_t size() const { return nodes_.size(); }
  const LatticeNode& node(int i) const { return nodes_.at(i); }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  /// Node id of the stabilizer of hyperplane h.
  int atom(int h) const { return atoms_.at(h); }
  /// Exact lookup by sorted hyperplane id set; -1 when absent.
  int find(const std::vector<int>& hyperplanes) const;

  bool leq(int a, int b) const;
  int join(int a, int b) const;
  /// Image node under conjugation by w.
  int act(int w, int node) const;
  /// Moebius function of the interval [a, b]; zero unless a <= b.
  Rational mobius(int a, int b) const;

  const std::vector<std::vector<int>>& orbits() const { return orbits_; }
  int orbit_of(int node) const { return orbit_of_.at(node); }

 private:
  const ReflectionGroup* W_ = nullptr;
  std::vector<LatticeNode> nodes_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> atoms_;
  int bottom_ = -1;
  int top_ = -1;
  std::vector<std::vector<int>> orbits_;
  std::vector<int> orbit_of_;
  mutable std::map<std::pair<int, int>, Rational> mobius_;
};

/// Element of the commutative idempotent algebra spanned by {e_node} with
/// product e_a e_b = e_{join(a,b)}; e_bottom is the identity.
class LatticeAlgebraElement {
 public:
  explicit LatticeAlgebraElement(const SubgroupLattice* L) : L_(L) {}
  static LatticeAlgebraElement basis(const SubgroupLattice* L, int node);
  /// Moebius-transformed idempotent f_node = sum_{m >= node} mu(node, m) e_m.
  static LatticeAlgebraElement diagonal(const SubgroupLattice* L, int node);

  const std::map<int, Cyclotomic>& terms() const { return terms_; }
  Cyclotomic coeff(int node) const;
  void add_term(int node, const Cyclotomic& c);
  bool is_zero() const { return terms_.empty(); }

  LatticeAlgebraElement& operator+=(const LatticeAlgebraElement& o);
  friend LatticeAlgebraElement operator+(LatticeAlgebraElement a,
                                         const LatticeAlgebraElement& b) {
    return a += b;
  }
  friend LatticeAlgebraElement operator*(const LatticeAlgebraElement& a,
                                         const LatticeAlgebraElement& b);
  LatticeAlgebraElement operator*(const Cyclotomic& c) const;
  bool operator==(const LatticeAlgebraElement& o) const;

  std::string str() const;

 private:
  const SubgroupLattice* L_;
  std::map<int, Cyclotomic> terms_;
};

}  // namespace chered

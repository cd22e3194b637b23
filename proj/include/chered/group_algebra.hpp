#pragma once

#include "chered/group.hpp"

#include <map>
#include <vector>

namespace chered {

/// Sparse element of the group algebra of W over the cyclotomics.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(const ReflectionGroup& W) : W_(&W) {}
  GroupAlgebraElement(const ReflectionGroup& W, int g) : W_(&W) {
    terms_[g] = Cyclotomic(1);
  }

  const ReflectionGroup& group() const { return *W_; }
  const std::map<int, Cyclotomic>& terms() const { return terms_; }
  Cyclotomic coeff(int g) const;
  void add_term(int g, const Cyclotomic& c);

  bool is_zero() const;
  GroupAlgebraElement operator-() const;
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    return a += b;
  }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    return a -= b;
  }
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const Cyclotomic& s) const;
  bool operator==(const GroupAlgebraElement& o) const;
  bool operator!=(const GroupAlgebraElement& o) const { return !(*this == o); }

  /// w x w^{-1}.
  GroupAlgebraElement conjugated_by(int w) const;
  /// Coefficientwise twist g -> det(g)^{-1} g.
  GroupAlgebraElement det_inverse_twist() const;

  std::string str() const;

 private:
  const ReflectionGroup* W_;
  std::map<int, Cyclotomic> terms_;
  void prune_();
};

/**
 * Parameter family k_{H,j}: one rational sequence of length m_H per
 * hyperplane orbit, so W-orbit constancy holds by construction.
 */
struct ParameterSet {
  std::vector<std::vector<Rational>> by_orbit;

  static ParameterSet zero(const ReflectionGroup& W);
  /// Throws unless sequence lengths match the orbit m_H values.
  void validate(const ReflectionGroup& W) const;
  const std::vector<Rational>& for_hyperplane(const ReflectionGroup& W, int h) const;
};

/// epsilon_{H,j} = (1/m_H) sum_{w in W_H} det(w)^{-j} w, the projector onto
/// the det^j isotypic line of the cyclic stabilizer.
GroupAlgebraElement epsilon_element(const ReflectionGroup& W, int h, unsigned j);

/// a_H = sum_j m_H k_{H,j} epsilon_{H,j}.
GroupAlgebraElement a_element(const ReflectionGroup& W, int h, const ParameterSet& k);

/// gamma_H, the correction term of the commutation relation. Computed as
/// tau(a_H) - a_H where tau is the det^{-1} twist, which is exactly the
/// combination making [T_y, x] = x(y) + sum_H (alpha_H(y) x(v_H) / alpha_H(v_H))
/// gamma_H an identity; in the epsilon basis it reads
/// sum_j m_H (k_{H,j-1} - k_{H,j}) epsilon_{H,j} with indices mod m_H.
GroupAlgebraElement gamma_element(const ReflectionGroup& W, int h, const ParameterSet& k);

}  // namespace chered

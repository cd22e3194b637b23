#pragma once

#include "chered/matrix.hpp"

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace chered {

/// Reflecting hyperplane data. alpha and v are normalized so their first
/// nonzero coordinate is 1; v spans the unique stabilizer-stable complement
/// line of the hyperplane.
struct Hyperplane {
  CycVector alpha;                 ///< linear form with kernel H
  CycVector v;                     ///< stable complement line
  std::vector<CycVector> basis;    ///< basis of H itself (rank-1 many vectors)
  std::vector<int> stabilizer;     ///< elements of W_H, ascending, [0] = identity
  unsigned order = 0;              ///< m_H = |W_H|
  int orbit = -1;                  ///< orbit id under W
  int distinguished = -1;          ///< s in W_H whose det embeds to exp(-2 pi i / m_H)
};

/**
 * A finite complex reflection group given by generator matrices.
 *
 * Elements are enumerated breadth-first from the identity; within a layer,
 * children are visited in (parent id, generator index) order, so element ids
 * are deterministic for fixed generators. Every stored matrix has all entries
 * coerced to the common group conductor, making matrix equality and hashing
 * canonical.
 */
class ReflectionGroup {
 public:
  /// Enumerates the group; throws CapError past order_cap elements.
  static ReflectionGroup from_generators(std::vector<CycMatrix> gens,
                                         std::size_t order_cap = 1152);

  /// Named constructions; see preset_names(). Accepts S3, S4, B2, G4,
  /// I2(m) / G(m,m,2) for 3 <= m <= 8, and G(m,1,1) for 2 <= m <= 12.
  static ReflectionGroup preset(const std::string& name);
  static std::vector<std::string> preset_names();

  unsigned rank() const { return rank_; }
  std::size_t size() const { return mats_.size(); }
  unsigned conductor() const { return conductor_; }
  const std::string& label() const { return label_; }

  const CycMatrix& matrix(int g) const { return mats_[g]; }
  int product(int g, int h) const;
  int inverse(int g) const { return inv_[g]; }
  int conjugate(int g, int h) const;  ///< g h g^{-1}
  unsigned element_order(int g) const;
  const Cyclotomic& det(int g) const { return dets_[g]; }
  const std::vector<int>& word(int g) const { return words_[g]; }
  const std::vector<int>& generator_ids() const { return gen_ids_; }
  int element_of(const CycMatrix& m) const;  ///< id, or -1 when absent

  const std::vector<int>& reflections() const { return reflections_; }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  int hyperplane_of(int reflection) const;
  /// Image hyperplane id of w(H).
  int hyperplane_image(int w, int h) const;
  /// Scalar c with w . alpha_H = c . alpha_{w(H)}.
  Cyclotomic alpha_scale(int w, int h) const;
  const std::vector<std::vector<int>>& hyperplane_orbits() const { return orbits_; }

  /// w . x for a covector x, that is x composed with w^{-1}.
  CycVector act_covector(int w, const CycVector& x) const;
  /// w . y for a vector y.
  CycVector act_vector(int w, const CycVector& y) const;

  /// Subgroup generated by the given element ids.
  std::vector<int> subgroup_closure(std::vector<int> seed) const;
  /// { g : g S g^{-1} = S } for a subgroup given as a sorted element set.
  std::vector<int> normalizer(const std::vector<int>& subgroup) const;

 private:
  unsigned rank_ = 0;
  unsigned conductor_ = 1;
  std::string label_ = "custom";
  std::vector<CycMatrix> mats_;
  std::vector<int> gen_ids_;
  std::vector<std::vector<int>> words_;
  std::vector<Cyclotomic> dets_;
  std::vector<int> inv_;
  std::unordered_map<std::size_t, std::vector<int>> index_;
  mutable std::vector<int> prod_;  // lazy product table, -1 = not computed
  std::vector<int> reflections_;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<int> hyperplane_of_;             // by reflection position
  std::unordered_map<int, int> refl_to_hyp_;   // element id -> hyperplane id
  std::vector<std::vector<int>> orbits_;

  void analyze_reflections_();
};

/// Reflections of W lying in the full reflection closure of the given
/// reflections: repeatedly adds every reflection sharing a hyperplane with
/// the generated subgroup. Returns sorted reflection ids.
std::vector<int> full_reflection_closure(const ReflectionGroup& W, std::vector<int> refl);

/// Sorted element ids of the subgroup generated by a reflection set.
std::vector<int> reflection_subgroup_elements(const ReflectionGroup& W,
                                              const std::vector<int>& refl);

}  // namespace chered

#pragma once

#include <string>
#include <vector>

#include "chered/group.hpp"

namespace chered {

/// Complex irreducible representation of a subgroup of W, with exact
/// cyclotomic matrices parallel to the sorted element list.
struct Irrep {
  std::string name;
  unsigned dim = 0;
  std::vector<int> elements;
  std::vector<CycMatrix> images;

  const CycMatrix& image_of(int element_id) const;
  Cyclotomic character(int element_id) const;
};

/// Throws CheckError unless the matrices form an exact homomorphism on the
/// full multiplication table with irreducible character (norm one).
void verify_irrep(const ReflectionGroup& W, const Irrep& r);

/// Complete irreducible list for a subgroup given as sorted element ids.
/// Strategies: direct character enumeration for abelian subgroups, the
/// closed-form dihedral family, and whole-group tables for the S4 and G4
/// presets. The returned list is verified: every entry passes verify_irrep,
/// characters are pairwise orthogonal, and dimensions square-sum to the
/// subgroup order. Throws CheckError when no strategy applies.
std::vector<Irrep> subgroup_irreps(const ReflectionGroup& W, const std::vector<int>& elems);

}  // namespace chered

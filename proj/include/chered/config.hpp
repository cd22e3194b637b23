#pragma once

#include <map>
#include <string>
#include <vector>

#include "chered/error.hpp"
#include "chered/group.hpp"
#include "chered/group_algebra.hpp"
#include "chered/monodromy.hpp"

namespace chered {

/// One parameter line from the config: either a whole orbit or a single
/// hyperplane (folded to its orbit later, with consistency enforced).
template <typename Scalar>
struct ParamEntry {
  bool per_hyperplane = false;
  unsigned index = 0;
  std::vector<Scalar> values;
  int line = 0;
};

/// Parsed run configuration. Group construction and parameter resolution
/// are deferred so errors can cite config lines where possible.
struct RunConfig {
  std::string preset;
  std::vector<CycMatrix> generators;  // overrides preset when nonempty
  std::vector<int> w0_hyperplanes;    // subgroup-flavor base node key
  std::vector<ParamEntry<Rational>> params;
  std::vector<ParamEntry<Complex>> monodromy_params;
  std::map<std::string, std::vector<CycMatrix>> irrep_fixtures;  // generator images
  unsigned degree = 5;
  double tol = 1e-8;
  unsigned long seed = 1;

  ReflectionGroup build_group() const;
  /// Exact parameters with orbit-consistency validation; zero when absent.
  ParameterSet exact_params(const ReflectionGroup& W) const;
  /// Complex parameters for monodromy; falls back to the exact ones.
  ComplexParams complex_params(const ReflectionGroup& W) const;
};

/// Plain-text grammar: `key = value` lines, `[section]` headers, `#`
/// comments. Values: rationals `p/q`, cyclotomics `c(N; a0, a1, ...)`,
/// complex `a+bi`, matrices `[e, e; e, e]`, comma lists. Sections: [group]
/// (preset | repeated generator), [w0] (hyperplanes), [params] and
/// [monodromy] (orbitN | hN lines), [irreps.NAME] (repeated generator);
/// top-level keys degree, tol, seed, conductor_cap.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace chered

#include "chered/irreps.hpp"

#include <algorithm>
#include <map>

#include "chered/error.hpp"

namespace chered {

namespace {

int position_of(const std::vector<int>& elems, int id) {
  auto it = std::lower_bound(elems.begin(), elems.end(), id);
  if (it == elems.end() || *it != id) throw Error("irrep: element outside the subgroup");
  return static_cast<int>(it - elems.begin());
}

bool is_abelian(const ReflectionGroup& W, const std::vector<int>& elems) {
  for (int a : elems)
    for (int b : elems)
      if (W.product(a, b) != W.product(b, a)) return false;
  return true;
}

Cyclotomic trace(const CycMatrix& m) {
  Cyclotomic t;
  for (unsigned i = 0; i < m.rows(); ++i) t += m.at(i, i);
  return t;
}

// All homomorphisms to the unit circle, by assigning roots of unity to a
// greedy generating set and keeping the assignments that extend to the whole
// multiplication table.
std::vector<Irrep> abelian_characters(const ReflectionGroup& W, const std::vector<int>& elems) {
  std::vector<int> gens;
  std::vector<int> generated{0};
  for (int g : elems) {
    if (std::binary_search(generated.begin(), generated.end(), g)) continue;
    gens.push_back(g);
    std::vector<int> seed = gens;
    generated = W.subgroup_closure(seed);
    if (generated.size() == elems.size()) break;
  }
  std::vector<unsigned> orders;
  for (int g : gens) orders.push_back(W.element_order(g));

  std::vector<Irrep> out;
  std::vector<unsigned> pick(gens.size(), 0);
  for (;;) {
    // Spread the candidate over the Cayley graph; conflicts kill it.
    std::vector<Cyclotomic> val(elems.size());
    std::vector<char> known(elems.size(), 0);
    val[position_of(elems, 0)] = Cyclotomic(1);
    known[position_of(elems, 0)] = 1;
    std::vector<int> queue{0};
    bool ok = true;
    for (std::size_t q = 0; q < queue.size() && ok; ++q) {
      int e = queue[q];
      const Cyclotomic& ve = val[position_of(elems, e)];
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        int f = W.product(e, gens[i]);
        Cyclotomic vf = ve * Cyclotomic::root_of_unity(orders[i], static_cast<long>(pick[i]));
        int pf = position_of(elems, f);
        if (!known[pf]) {
          val[pf] = vf;
          known[pf] = 1;
          queue.push_back(f);
        } else if (!(val[pf] == vf)) {
          ok = false;
        }
      }
    }
    if (ok)
      for (int a : elems) {
        for (int b : elems) {
          if (!(val[position_of(elems, W.product(a, b))] ==
                val[position_of(elems, a)] * val[position_of(elems, b)])) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
    if (ok) {
      Irrep r;
      r.name = "chi" + std::to_string(out.size());
      r.dim = 1;
      r.elements = elems;
      for (std::size_t i = 0; i < elems.size(); ++i)
        r.images.push_back(CycMatrix::from_rows({{val[i]}}));
      out.push_back(std::move(r));
    }
    std::size_t i = 0;
    while (i < pick.size() && pick[i] + 1 == orders[i]) pick[i++] = 0;
    if (i == pick.size()) break;
    ++pick[i];
  }
  if (out.size() != elems.size()) throw CheckError("irrep: abelian character count mismatch");
  return out;
}

struct DihedralShape {
  int r = -1;
  int t = -1;
  unsigned m = 0;
  std::vector<int> rotation;  // powers of r, index = exponent
};

// Cyclic index-two subgroup plus an inverting involution outside it.
std::optional<DihedralShape> dihedral_shape(const ReflectionGroup& W,
                                            const std::vector<int>& elems) {
  if (elems.size() % 2 != 0 || elems.size() < 6) return std::nullopt;
  const unsigned m = static_cast<unsigned>(elems.size() / 2);
  for (int r : elems) {
    if (W.element_order(r) != m) continue;
    std::vector<int> rotation{0};  // rotation[a] = r^a
    int p = r;
    for (unsigned a = 1; a < m; ++a) {
      rotation.push_back(p);
      p = W.product(p, r);
    }
    std::vector<int> sorted = rotation;
    std::sort(sorted.begin(), sorted.end());
    for (int t : elems) {
      if (std::binary_search(sorted.begin(), sorted.end(), t)) continue;
      if (W.element_order(t) != 2) continue;
      if (W.conjugate(t, r) != W.inverse(r)) continue;
      return DihedralShape{r, t, m, rotation};
    }
  }
  return std::nullopt;
}

std::vector<Irrep> dihedral_irreps(const ReflectionGroup& W, const std::vector<int>& elems,
                                   const DihedralShape& d) {
  // Every element is r^a or r^a t; images follow from the (r, t) images.
  std::vector<std::pair<unsigned, bool>> decomp(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    int e = elems[i];
    bool flip = true;
    for (unsigned a = 0; a < d.m; ++a)
      if (d.rotation[a] == e) {
        decomp[i] = {a, false};
        flip = false;
        break;
      }
    if (flip) {
      int base = W.product(e, d.t);  // e = r^a t  =>  e t = r^a
      for (unsigned a = 0; a < d.m; ++a)
        if (d.rotation[a] == base) {
          decomp[i] = {a, true};
          break;
        }
    }
  }
  auto build = [&](const std::string& name, const CycMatrix& ir, const CycMatrix& it) {
    Irrep r;
    r.name = name;
    r.dim = ir.rows();
    r.elements = elems;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      CycMatrix img = ir.pow(decomp[i].first);
      if (decomp[i].second) img = img * it;
      r.images.push_back(std::move(img));
    }
    return r;
  };
  std::vector<Irrep> out;
  Cyclotomic one(1), minus(-1);
  out.push_back(build("triv", CycMatrix::from_rows({{one}}), CycMatrix::from_rows({{one}})));
  out.push_back(build("sgn", CycMatrix::from_rows({{one}}), CycMatrix::from_rows({{minus}})));
  if (d.m % 2 == 0) {
    out.push_back(build("rho-", CycMatrix::from_rows({{minus}}), CycMatrix::from_rows({{one}})));
    out.push_back(
        build("rho-sgn", CycMatrix::from_rows({{minus}}), CycMatrix::from_rows({{minus}})));
  }
  Cyclotomic zero;
  for (unsigned h = 1; 2 * h < d.m; ++h) {
    CycMatrix ir = CycMatrix::from_rows(
        {{Cyclotomic::root_of_unity(d.m, h), zero}, {zero, Cyclotomic::root_of_unity(d.m, -static_cast<long>(h))}});
    CycMatrix it = CycMatrix::from_rows({{zero, one}, {one, zero}});
    out.push_back(build("plane" + std::to_string(h), ir, it));
  }
  return out;
}

CycMatrix sym_square(const CycMatrix& m) {
  const Cyclotomic a = m.at(0, 0), b = m.at(0, 1), c = m.at(1, 0), d = m.at(1, 1);
  const Cyclotomic two(2);
  return CycMatrix::from_rows({{a * a, a * b, b * b},
                               {a * c * two, a * d + b * c, b * d * two},
                               {c * c, c * d, d * d}});
}

std::vector<Irrep> tetrahedral_binary_irreps(const ReflectionGroup& W,
                                             const std::vector<int>& elems) {
  std::vector<Irrep> out;
  for (unsigned a = 0; a < 3; ++a) {
    Irrep lin{"det" + std::to_string(a), 1, elems, {}};
    Irrep two{"refl*det" + std::to_string(a), 2, elems, {}};
    for (int e : elems) {
      Cyclotomic d(1);
      for (unsigned p = 0; p < a; ++p) d *= W.det(e);
      lin.images.push_back(CycMatrix::from_rows({{d}}));
      two.images.push_back(W.matrix(e) * d);
    }
    out.push_back(std::move(lin));
    out.push_back(std::move(two));
  }
  Irrep three{"sym2", 3, elems, {}};
  for (int e : elems) three.images.push_back(sym_square(W.matrix(e)));
  out.push_back(std::move(three));
  return out;
}

std::vector<Irrep> symmetric4_irreps(const ReflectionGroup& W, const std::vector<int>& elems) {
  std::vector<Irrep> out;
  Irrep triv{"triv", 1, elems, {}};
  Irrep sign{"sign", 1, elems, {}};
  Irrep refl{"refl", 3, elems, {}};
  Irrep reflsgn{"refl*sign", 3, elems, {}};
  for (int e : elems) {
    triv.images.push_back(CycMatrix::from_rows({{Cyclotomic(1)}}));
    sign.images.push_back(CycMatrix::from_rows({{W.det(e)}}));
    refl.images.push_back(W.matrix(e));
    reflsgn.images.push_back(W.matrix(e) * W.det(e));
  }
  // Two-dimensional factor through the quotient by the doubled pairs: the
  // outer generators map to one triangle generator, the middle one to the
  // other, extended along BFS words.
  ReflectionGroup tri = ReflectionGroup::preset("S3");
  std::vector<CycMatrix> genimg = {tri.matrix(tri.generator_ids()[0]),
                                   tri.matrix(tri.generator_ids()[1]),
                                   tri.matrix(tri.generator_ids()[0])};
  Irrep two{"std2", 2, elems, {}};
  for (int e : elems) {
    CycMatrix img = CycMatrix::identity(2);
    for (int letter : W.word(e)) img = img * genimg.at(letter);
    two.images.push_back(img);
  }
  out.push_back(std::move(triv));
  out.push_back(std::move(sign));
  out.push_back(std::move(two));
  out.push_back(std::move(refl));
  out.push_back(std::move(reflsgn));
  return out;
}

}  // namespace

const CycMatrix& Irrep::image_of(int element_id) const {
  return images.at(position_of(elements, element_id));
}

Cyclotomic Irrep::character(int element_id) const { return trace(image_of(element_id)); }

void verify_irrep(const ReflectionGroup& W, const Irrep& r) {
  if (r.elements.empty() || r.elements[0] != 0 || r.images.size() != r.elements.size())
    throw CheckError("irrep: malformed element list");
  if (!r.images[0].is_identity()) throw CheckError("irrep: identity image");
  for (int a : r.elements)
    for (int b : r.elements)
      if (!(r.image_of(a) * r.image_of(b) == r.image_of(W.product(a, b))))
        throw CheckError("irrep: not a homomorphism");
  Cyclotomic norm;
  for (int a : r.elements) norm += r.character(a) * r.character(W.inverse(a));
  if (!(norm == Cyclotomic(Rational(static_cast<long>(r.elements.size())))))
    throw CheckError("irrep: character norm is not one");
}

std::vector<Irrep> subgroup_irreps(const ReflectionGroup& W, const std::vector<int>& elems) {
  std::vector<Irrep> out;
  if (is_abelian(W, elems)) {
    out = abelian_characters(W, elems);
  } else if (auto d = dihedral_shape(W, elems)) {
    out = dihedral_irreps(W, elems, *d);
  } else if (elems.size() == W.size() && W.label() == "G4") {
    out = tetrahedral_binary_irreps(W, elems);
  } else if (elems.size() == W.size() && W.label() == "S4") {
    out = symmetric4_irreps(W, elems);
  } else {
    throw CheckError("irrep: no strategy for this subgroup");
  }
  std::size_t total = 0;
  for (const Irrep& r : out) {
    verify_irrep(W, r);
    total += static_cast<std::size_t>(r.dim) * r.dim;
  }
  if (total != elems.size()) throw CheckError("irrep: dimension squares incomplete");
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      Cyclotomic dot;
      for (int a : elems) dot += out[i].character(a) * out[j].character(W.inverse(a));
      if (!dot.is_zero()) throw CheckError("irrep: characters not orthogonal");
    }
  return out;
}

}  // namespace chered

#include "chered/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "chered/error.hpp"

namespace chered {

namespace {

// Saturated closure of a hyperplane set: generate from all stabilizer
// reflections, then re-read which stabilizers the result swallows.
std::vector<int> closure_hyperplanes(const ReflectionGroup& W, std::vector<int> hyps) {
  std::vector<int> refl;
  for (int h : hyps)
    for (int g : W.hyperplanes().at(h).stabilizer)
      if (g != 0) refl.push_back(g);
  std::vector<int> closed = full_reflection_closure(W, std::move(refl));
  std::set<int> out;
  for (int r : closed) out.insert(W.hyperplane_of(r));
  return {out.begin(), out.end()};
}

}  // namespace

SubgroupLattice SubgroupLattice::build(const ReflectionGroup& W) {
  SubgroupLattice L;
  L.W_ = &W;

  std::map<std::vector<int>, std::vector<int>> found;  // hyperplane set -> elements
  auto insert = [&](const std::vector<int>& hyps) {
    if (found.count(hyps)) return false;
    std::vector<int> refl;
    for (int h : hyps)
      for (int g : W.hyperplanes().at(h).stabilizer)
        if (g != 0) refl.push_back(g);
    found.emplace(hyps, reflection_subgroup_elements(W, refl));
    return true;
  };

  insert({});
  std::vector<std::vector<int>> fresh;
  for (std::size_t h = 0; h < W.hyperplanes().size(); ++h) {
    std::vector<int> c = closure_hyperplanes(W, {static_cast<int>(h)});
    if (insert(c)) fresh.push_back(c);
  }
  while (!fresh.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& a : fresh)
      for (const auto& [b, elems] : found) {
        std::vector<int> u;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
        std::vector<int> c = closure_hyperplanes(W, u);
        if (insert(c)) next.push_back(c);
      }
    fresh = std::move(next);
  }

  for (auto& [hyps, elems] : found) {
    LatticeNode n;
    n.hyperplanes = hyps;
    n.elements = std::move(elems);
    L.nodes_.push_back(std::move(n));
  }
  std::sort(L.nodes_.begin(), L.nodes_.end(), [](const LatticeNode& a, const LatticeNode& b) {
    if (a.hyperplanes.size() != b.hyperplanes.size())
      return a.hyperplanes.size() < b.hyperplanes.size();
    return a.hyperplanes < b.hyperplanes;
  });
  for (std::size_t i = 0; i < L.nodes_.size(); ++i)
    L.index_.emplace(L.nodes_[i].hyperplanes, static_cast<int>(i));

  L.bottom_ = L.find({});
  std::vector<int> all(W.hyperplanes().size());
  for (std::size_t h = 0; h < all.size(); ++h) all[h] = static_cast<int>(h);
  L.top_ = L.find(closure_hyperplanes(W, all));
  if (L.bottom_ < 0 || L.top_ < 0) throw Error("lattice: closure lost an endpoint");

  L.atoms_.resize(W.hyperplanes().size());
  for (std::size_t h = 0; h < all.size(); ++h) {
    L.atoms_[h] = L.find(closure_hyperplanes(W, {static_cast<int>(h)}));
    if (L.atoms_[h] < 0) throw Error("lattice: missing atom");
  }

  for (auto& n : L.nodes_) n.normalizer = W.normalizer(n.elements);

  L.orbit_of_.assign(L.nodes_.size(), -1);
  for (std::size_t i = 0; i < L.nodes_.size(); ++i) {
    if (L.orbit_of_[i] >= 0) continue;
    std::vector<int> orbit{static_cast<int>(i)};
    L.orbit_of_[i] = static_cast<int>(L.orbits_.size());
    for (std::size_t q = 0; q < orbit.size(); ++q)
      for (int g : W.generator_ids()) {
        int img = L.act(g, orbit[q]);
        if (L.orbit_of_[img] < 0) {
          L.orbit_of_[img] = static_cast<int>(L.orbits_.size());
          orbit.push_back(img);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    L.orbits_.push_back(std::move(orbit));
  }
  return L;
}

int SubgroupLattice::find(const std::vector<int>& hyperplanes) const {
  auto it = index_.find(hyperplanes);
  return it == index_.end() ? -1 : it->second;
}

bool SubgroupLattice::leq(int a, int b) const {
  const auto& ha = nodes_.at(a).hyperplanes;
  const auto& hb = nodes_.at(b).hyperplanes;
  return std::includes(hb.begin(), hb.end(), ha.begin(), ha.end());
}

int SubgroupLattice::join(int a, int b) const {
  const auto& ha = nodes_.at(a).hyperplanes;
  const auto& hb = nodes_.at(b).hyperplanes;
  std::vector<int> u;
  std::set_union(ha.begin(), ha.end(), hb.begin(), hb.end(), std::back_inserter(u));
  int j = find(closure_hyperplanes(*W_, u));
  if (j < 0) throw Error("lattice: join escaped the closure");
  return j;
}

int SubgroupLattice::act(int w, int node) const {
  std::vector<int> img;
  img.reserve(nodes_.at(node).hyperplanes.size());
  for (int h : nodes_.at(node).hyperplanes) img.push_back(W_->hyperplane_image(w, h));
  std::sort(img.begin(), img.end());
  int i = find(img);
  if (i < 0) throw Error("lattice: conjugate escaped the closure");
  return i;
}

Rational SubgroupLattice::mobius(int a, int b) const {
  if (!leq(a, b)) return Rational(0);
  if (a == b) return Rational(1);
  auto key = std::make_pair(a, b);
  if (auto it = mobius_.find(key); it != mobius_.end()) return it->second;
  Rational acc(0);
  for (int c = 0; c < static_cast<int>(nodes_.size()); ++c)
    if (c != b && leq(a, c) && leq(c, b)) acc += mobius(a, c);
  Rational out = -acc;
  mobius_.emplace(key, out);
  return out;
}

LatticeAlgebraElement LatticeAlgebraElement::basis(const SubgroupLattice* L, int node) {
  LatticeAlgebraElement e(L);
  e.add_term(node, Cyclotomic(1));
  return e;
}

LatticeAlgebraElement LatticeAlgebraElement::diagonal(const SubgroupLattice* L, int node) {
  LatticeAlgebraElement f(L);
  for (int m = 0; m < static_cast<int>(L->size()); ++m)
    if (L->leq(node, m)) f.add_term(m, Cyclotomic(L->mobius(node, m)));
  return f;
}

Cyclotomic LatticeAlgebraElement::coeff(int node) const {
  auto it = terms_.find(node);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

void LatticeAlgebraElement::add_term(int node, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(node, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LatticeAlgebraElement& LatticeAlgebraElement::operator+=(const LatticeAlgebraElement& o) {
  for (const auto& [n, c] : o.terms_) add_term(n, c);
  return *this;
}

LatticeAlgebraElement operator*(const LatticeAlgebraElement& a,
                                const LatticeAlgebraElement& b) {
  LatticeAlgebraElement out(a.L_);
  for (const auto& [na, ca] : a.terms_)
    for (const auto& [nb, cb] : b.terms_) out.add_term(a.L_->join(na, nb), ca * cb);
  return out;
}

LatticeAlgebraElement LatticeAlgebraElement::operator*(const Cyclotomic& c) const {
  LatticeAlgebraElement out(L_);
  if (c.is_zero()) return out;
  for (const auto& [n, t] : terms_) out.add_term(n, t * c);
  return out;
}

bool LatticeAlgebraElement::operator==(const LatticeAlgebraElement& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (a->first != b->first || !(a->second == b->second)) return false;
  return true;
}

std::string LatticeAlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*e" << n;
  }
  return os.str();
}

}  // namespace chered

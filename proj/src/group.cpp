#include "chered/group.hpp"

#include "chered/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace chered {

namespace {

CycMatrix coerce_matrix(const CycMatrix& m, unsigned conductor) {
  CycMatrix r(m.rows(), m.cols());
  for (unsigned i = 0; i < m.rows(); ++i)
    for (unsigned j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).coerced(conductor);
  return r;
}

std::string line_key(const CycVector& v, unsigned conductor) {
  std::ostringstream os;
  for (const auto& e : v) os << e.coerced(conductor).str() << "|";
  return os.str();
}

}  // namespace

ReflectionGroup ReflectionGroup::from_generators(std::vector<CycMatrix> gens,
                                                 std::size_t order_cap) {
  if (gens.empty()) throw Error("group: no generators");
  ReflectionGroup W;
  W.rank_ = gens[0].rows();
  if (W.rank_ == 0) throw Error("group: zero-dimensional generators");
  unsigned conductor = 1;
  for (const auto& g : gens) {
    if (g.rows() != W.rank_ || g.cols() != W.rank_)
      throw Error("group: generators must be square of equal size");
    if (g.det().is_zero()) throw Error("group: singular generator");
    for (unsigned i = 0; i < g.rows(); ++i)
      for (unsigned j = 0; j < g.cols(); ++j)
        conductor = std::lcm(conductor, g.at(i, j).conductor());
  }
  W.conductor_ = conductor;

  auto push = [&W](const CycMatrix& m, std::vector<int> word) -> int {
    CycMatrix canon = coerce_matrix(m, W.conductor_);
    std::size_t h = canon.hash();
    auto& bucket = W.index_[h];
    for (int id : bucket)
      if (W.mats_[id] == canon) return id;
    int id = static_cast<int>(W.mats_.size());
    bucket.push_back(id);
    W.mats_.push_back(std::move(canon));
    W.words_.push_back(std::move(word));
    return id;
  };

  push(CycMatrix::identity(W.rank_), {});
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      CycMatrix next = W.mats_[cur] * gens[gi];
      std::size_t before = W.mats_.size();
      std::vector<int> word = W.words_[cur];
      word.push_back(static_cast<int>(gi));
      int id = push(next, std::move(word));
      if (static_cast<std::size_t>(id) == before) {
        if (W.mats_.size() > order_cap)
          throw CapError("group: enumeration exceeded cap " + std::to_string(order_cap));
        queue.push_back(id);
      }
    }
  }

  W.gen_ids_.reserve(gens.size());
  for (const auto& g : gens) {
    int id = W.element_of(g);
    if (id < 0) throw Error("group: generator lookup failed");
    W.gen_ids_.push_back(id);
  }

  const std::size_t n = W.mats_.size();
  W.prod_.assign(n * n, -1);
  W.dets_.reserve(n);
  W.inv_.resize(n);
  for (std::size_t g = 0; g < n; ++g) W.dets_.push_back(W.mats_[g].det());
  for (std::size_t g = 0; g < n; ++g) {
    auto inv = W.mats_[g].inverse();
    if (!inv) throw Error("group: singular element");
    int id = W.element_of(*inv);
    if (id < 0) throw Error("group: inverse not in group");
    W.inv_[g] = id;
  }

  W.analyze_reflections_();
  return W;
}

int ReflectionGroup::element_of(const CycMatrix& m) const {
  CycMatrix canon = coerce_matrix(m, conductor_);
  auto it = index_.find(canon.hash());
  if (it == index_.end()) return -1;
  for (int id : it->second)
    if (mats_[id] == canon) return id;
  return -1;
}

int ReflectionGroup::product(int g, int h) const {
  int& memo = prod_[static_cast<std::size_t>(g) * mats_.size() + h];
  if (memo < 0) {
    int id = element_of(mats_[g] * mats_[h]);
    if (id < 0) throw Error("group: product escaped the group");
    memo = id;
  }
  return memo;
}

int ReflectionGroup::conjugate(int g, int h) const {
  return product(product(g, h), inv_[g]);
}

unsigned ReflectionGroup::element_order(int g) const {
  unsigned k = 1;
  int cur = g;
  while (cur != 0) {
    cur = product(cur, g);
    ++k;
    if (k > mats_.size()) throw Error("group: order runaway");
  }
  return k;
}

CycVector ReflectionGroup::act_covector(int w, const CycVector& x) const {
  return mats_[inv_[w]].apply_left(x);
}

CycVector ReflectionGroup::act_vector(int w, const CycVector& y) const {
  return mats_[w].apply(y);
}

void ReflectionGroup::analyze_reflections_() {
  const CycMatrix id_m = CycMatrix::identity(rank_);
  std::unordered_map<std::string, int> hyp_by_key;
  for (std::size_t g = 1; g < mats_.size(); ++g) {
    CycMatrix d = mats_[g] - id_m;
    if (d.rank() != 1) continue;
    reflections_.push_back(static_cast<int>(g));

    CycVector alpha;
    {
      // The RREF of a rank-1 matrix has exactly one nonzero row, which spans
      // the row space and therefore cuts out ker(g - 1).
      CycMatrix m = d;
      unsigned row = 0;
      for (unsigned col = 0; col < m.cols() && row < m.rows(); ++col) {
        unsigned p = row;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        for (unsigned j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Cyclotomic inv = m.at(row, col).inverse();
        for (unsigned j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        ++row;
        break;
      }
      alpha.resize(rank_);
      for (unsigned j = 0; j < rank_; ++j) alpha[j] = m.at(0, j);
    }
    std::string key = line_key(alpha, conductor_);
    auto it = hyp_by_key.find(key);
    if (it == hyp_by_key.end()) {
      Hyperplane hp;
      hp.alpha = alpha;
      hp.basis = d.kernel_basis();
      hyp_by_key.emplace(key, static_cast<int>(hyperplanes_.size()));
      refl_to_hyp_[static_cast<int>(g)] = static_cast<int>(hyperplanes_.size());
      hyperplanes_.push_back(std::move(hp));
    } else {
      refl_to_hyp_[static_cast<int>(g)] = it->second;
    }
  }

  for (auto& hp : hyperplanes_) {
    for (std::size_t g = 0; g < mats_.size(); ++g) {
      bool fixes = true;
      for (const auto& b : hp.basis) {
        if (mats_[g].apply(b) != b) {
          fixes = false;
          break;
        }
      }
      if (fixes) hp.stabilizer.push_back(static_cast<int>(g));
    }
    hp.order = static_cast<unsigned>(hp.stabilizer.size());
    if (hp.order < 2) throw Error("group: hyperplane stabilizer degenerate");

    int s0 = hp.stabilizer[1];
    CycMatrix shifted = mats_[s0] - (id_m * dets_[s0]);
    auto kern = shifted.kernel_basis();
    if (kern.size() != 1) throw Error("group: stable complement line not unique");
    hp.v = kern[0];
    if (!normalize_line(hp.v)) throw Error("group: zero complement line");

    Cyclotomic target = Cyclotomic::root_of_unity(hp.order, -1);
    for (int s : hp.stabilizer) {
      if (s == 0) continue;
      if (dets_[s] == target) {
        if (hp.distinguished >= 0) throw Error("group: distinguished reflection not unique");
        hp.distinguished = s;
      }
    }
    if (hp.distinguished < 0) throw Error("group: no distinguished reflection");
  }

  // Orbits of hyperplanes under the generator action.
  std::vector<int> orbit_of(hyperplanes_.size(), -1);
  for (std::size_t h = 0; h < hyperplanes_.size(); ++h) {
    if (orbit_of[h] >= 0) continue;
    int oid = static_cast<int>(orbits_.size());
    std::vector<int> members;
    std::deque<int> queue{static_cast<int>(h)};
    orbit_of[h] = oid;
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      members.push_back(cur);
      for (int g : gen_ids_) {
        int img = hyperplane_image(g, cur);
        if (orbit_of[img] < 0) {
          orbit_of[img] = oid;
          queue.push_back(img);
        }
      }
    }
    std::sort(members.begin(), members.end());
    orbits_.push_back(std::move(members));
  }
  for (std::size_t h = 0; h < hyperplanes_.size(); ++h)
    hyperplanes_[h].orbit = orbit_of[h];
}

int ReflectionGroup::hyperplane_of(int reflection) const {
  auto it = refl_to_hyp_.find(reflection);
  if (it == refl_to_hyp_.end()) throw Error("group: element is not a reflection");
  return it->second;
}

int ReflectionGroup::hyperplane_image(int w, int h) const {
  CycVector img = act_covector(w, hyperplanes_[h].alpha);
  if (!normalize_line(img)) throw Error("group: degenerate hyperplane image");
  for (std::size_t t = 0; t < hyperplanes_.size(); ++t) {
    bool same = true;
    for (unsigned j = 0; j < rank_; ++j) {
      if (hyperplanes_[t].alpha[j] != img[j]) {
        same = false;
        break;
      }
    }
    if (same) return static_cast<int>(t);
  }
  throw Error("group: hyperplane image not found");
}

Cyclotomic ReflectionGroup::alpha_scale(int w, int h) const {
  CycVector img = act_covector(w, hyperplanes_[h].alpha);
  int target = hyperplane_image(w, h);
  const CycVector& canon = hyperplanes_[target].alpha;
  for (unsigned j = 0; j < rank_; ++j) {
    if (!canon[j].is_zero()) return img[j] / canon[j];
  }
  throw Error("group: zero hyperplane form");
}

std::vector<int> ReflectionGroup::subgroup_closure(std::vector<int> seed) const {
  std::set<int> have{0};
  for (int s : seed) have.insert(s);
  std::deque<int> queue(have.begin(), have.end());
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int s : seed) {
      int nxt = product(cur, s);
      if (have.insert(nxt).second) queue.push_back(nxt);
    }
  }
  return {have.begin(), have.end()};
}

std::vector<int> ReflectionGroup::normalizer(const std::vector<int>& subgroup) const {
  std::set<int> members(subgroup.begin(), subgroup.end());
  std::vector<int> result;
  for (std::size_t g = 0; g < mats_.size(); ++g) {
    bool ok = true;
    for (int s : subgroup) {
      if (!members.count(conjugate(static_cast<int>(g), s))) {
        ok = false;
        break;
      }
    }
    if (ok) result.push_back(static_cast<int>(g));
  }
  return result;
}

namespace {

CycMatrix mat2(Cyclotomic a, Cyclotomic b, Cyclotomic c, Cyclotomic d) {
  CycMatrix m(2, 2);
  m.at(0, 0) = std::move(a);
  m.at(0, 1) = std::move(b);
  m.at(1, 0) = std::move(c);
  m.at(1, 1) = std::move(d);
  return m;
}

struct PresetSpec {
  std::vector<CycMatrix> gens;
  std::size_t order;
};

PresetSpec preset_spec(const std::string& name) {
  const Cyclotomic one(1), zero(0);
  if (name == "S3") {
    return {{mat2(-1, 1, 0, 1), mat2(1, 0, 1, -1)}, 6};
  }
  if (name == "B2" || name == "G(2,1,2)") {
    return {{mat2(-1, 0, 0, 1), mat2(0, 1, 1, 0)}, 8};
  }
  if (name == "G4") {
    Cyclotomic z = Cyclotomic::zeta(3);
    return {{mat2(1, 0, -1, z), mat2(z, z, 0, 1)}, 24};
  }
  if (name == "S4") {
    CycMatrix s1 = CycMatrix::identity(3), s2 = CycMatrix::identity(3),
              s3 = CycMatrix::identity(3);
    s1.at(0, 0) = -1;
    s1.at(0, 1) = 1;
    s2.at(1, 0) = 1;
    s2.at(1, 1) = -1;
    s2.at(1, 2) = 1;
    s3.at(2, 1) = 1;
    s3.at(2, 2) = -1;
    return {{s1, s2, s3}, 24};
  }
  auto starts = [&name](const char* p) { return name.rfind(p, 0) == 0; };
  if ((starts("I2(") || starts("G(")) && name.back() == ')') {
    std::string inner = starts("I2(") ? name.substr(3, name.size() - 4)
                                      : name.substr(2, name.size() - 3);
    if (starts("I2(")) {
      unsigned m = static_cast<unsigned>(std::stoul(inner));
      if (m < 3 || m > 8) throw Error("preset: I2(m) supports 3 <= m <= 8");
      Cyclotomic z = Cyclotomic::zeta(m);
      return {{mat2(0, 1, 1, 0), mat2(zero, z.inverse(), z, zero)}, 2ull * m};
    }
    // G(m,m,2) or G(m,1,1)
    std::vector<std::string> parts;
    std::stringstream ss(inner);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(tok);
    if (parts.size() == 3) {
      unsigned m = static_cast<unsigned>(std::stoul(parts[0]));
      if (parts[1] == parts[0] && parts[2] == "2") {
        if (m < 3 || m > 8) throw Error("preset: G(m,m,2) supports 3 <= m <= 8");
        Cyclotomic z = Cyclotomic::zeta(m);
        return {{mat2(0, 1, 1, 0), mat2(zero, z.inverse(), z, zero)}, 2ull * m};
      }
      if (parts[1] == "1" && parts[2] == "1") {
        unsigned mm = static_cast<unsigned>(std::stoul(parts[0]));
        if (mm < 2 || mm > 12) throw Error("preset: G(m,1,1) supports 2 <= m <= 12");
        CycMatrix g(1, 1);
        g.at(0, 0) = Cyclotomic::zeta(mm);
        return {{g}, mm};
      }
    }
  }
  throw Error("preset: unknown group name '" + name + "'");
}

}  // namespace

ReflectionGroup ReflectionGroup::preset(const std::string& name) {
  PresetSpec spec = preset_spec(name);
  ReflectionGroup W = from_generators(spec.gens);
  if (W.size() != spec.order)
    throw Error("preset: enumerated order " + std::to_string(W.size()) +
                " does not match expected " + std::to_string(spec.order));
  W.label_ = name;
  return W;
}

std::vector<std::string> ReflectionGroup::preset_names() {
  return {"S3",    "S4",    "B2",    "G4",    "I2(3)",    "I2(4)",    "I2(5)",
          "I2(6)", "I2(7)", "I2(8)", "G(2,1,1)", "G(3,1,1)", "G(4,1,1)"};
}

std::vector<int> full_reflection_closure(const ReflectionGroup& W, std::vector<int> refl) {
  std::set<int> current(refl.begin(), refl.end());
  for (int r : refl)
    W.hyperplane_of(r);  // validates input
  while (true) {
    std::vector<int> elems =
        W.subgroup_closure(std::vector<int>(current.begin(), current.end()));
    std::set<int> next;
    std::set<int> inside(elems.begin(), elems.end());
    for (int r : W.reflections()) {
      if (!inside.count(r)) continue;
      int h = W.hyperplane_of(r);
      for (int s : W.hyperplanes()[h].stabilizer)
        if (s != 0) next.insert(s);
    }
    if (next == current) break;
    current = std::move(next);
  }
  return {current.begin(), current.end()};
}

std::vector<int> reflection_subgroup_elements(const ReflectionGroup& W,
                                              const std::vector<int>& refl) {
  return W.subgroup_closure(refl);
}

}  // namespace chered

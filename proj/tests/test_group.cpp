#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chered/error.hpp"
#include "chered/group.hpp"
#include "chered/group_algebra.hpp"

using namespace chered;

namespace {

std::vector<unsigned> hyperplane_orders(const ReflectionGroup& W) {
  std::vector<unsigned> out;
  for (const Hyperplane& h : W.hyperplanes()) out.push_back(h.order);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("preset golden data") {
  struct Row {
    const char* name;
    std::size_t order;
    std::size_t reflections;
    std::vector<unsigned> orders;
    std::size_t orbit_count;
  };
  const Row rows[] = {
      {"S3", 6, 3, {2, 2, 2}, 1},
      {"B2", 8, 4, {2, 2, 2, 2}, 2},
      {"I2(5)", 10, 5, {2, 2, 2, 2, 2}, 1},
      {"I2(6)", 12, 6, {2, 2, 2, 2, 2, 2}, 2},
      {"G4", 24, 8, {3, 3, 3, 3}, 1},
      {"S4", 24, 6, {2, 2, 2, 2, 2, 2}, 1},
      {"G(2,1,1)", 2, 1, {2}, 1},
      {"G(3,1,1)", 3, 2, {3}, 1},
      {"G(12,1,1)", 12, 11, {12}, 1},
  };
  for (const Row& row : rows) {
    CAPTURE(row.name);
    const ReflectionGroup W = ReflectionGroup::preset(row.name);
    CHECK(W.size() == row.order);
    CHECK(W.reflections().size() == row.reflections);
    CHECK(hyperplane_orders(W) == row.orders);
    CHECK(W.hyperplane_orbits().size() == row.orbit_count);
  }
  CHECK_THROWS(ReflectionGroup::preset("E8"));
}

TEST_CASE("group structure matches the matrices") {
  const ReflectionGroup W = ReflectionGroup::preset("S4");
  for (int g = 0; g < static_cast<int>(W.size()); ++g) {
    CHECK(W.matrix(W.inverse(g)) * W.matrix(g) == CycMatrix::identity(W.rank()));
    CHECK(W.matrix(g).pow(W.element_order(g)).is_identity());

    // The stored word over generator indices reproduces the element.
    CycMatrix prod = CycMatrix::identity(W.rank());
    for (int s : W.word(g)) prod = prod * W.matrix(W.generator_ids()[s]);
    CHECK(prod == W.matrix(g));

    for (int h : W.generator_ids()) {
      CHECK(W.matrix(W.product(g, h)) == W.matrix(g) * W.matrix(h));
      CHECK(W.det(W.product(g, h)) == W.det(g) * W.det(h));
      const int c = W.conjugate(g, h);
      CHECK(W.matrix(c) == W.matrix(g) * W.matrix(h) * W.matrix(W.inverse(g)));
    }
  }
  CHECK(W.element_of(CycMatrix::identity(W.rank())) == 0);
}

TEST_CASE("a generated copy of B2 matches the preset") {
  const Cyclotomic one(1), zero(0);
  const CycMatrix swap = CycMatrix::from_rows({{zero, one}, {one, zero}});
  const CycMatrix flip = CycMatrix::from_rows({{one, zero}, {zero, -one}});
  const ReflectionGroup W = ReflectionGroup::from_generators({swap, flip});
  CHECK(W.size() == 8);
  CHECK(W.reflections().size() == 4);
  CHECK(hyperplane_orders(W) == std::vector<unsigned>{2, 2, 2, 2});
  CHECK(W.hyperplane_orbits().size() == 2);
}

TEST_CASE("the order cap rejects runaway closures") {
  // An order-5 rotation alone closes fine; capped below 5 it must throw.
  const Cyclotomic z = Cyclotomic::zeta(5);
  const CycMatrix rot = CycMatrix::from_rows({{z}});
  CHECK(ReflectionGroup::from_generators({rot}).size() == 5);
  CHECK_THROWS_AS(ReflectionGroup::from_generators({rot}, 4), CapError);
}

TEST_CASE("hyperplane geometry") {
  for (const char* name : {"S3", "B2", "G4", "I2(5)"}) {
    CAPTURE(name);
    const ReflectionGroup W = ReflectionGroup::preset(name);
    for (std::size_t h = 0; h < W.hyperplanes().size(); ++h) {
      const Hyperplane& hp = W.hyperplanes()[h];
      CHECK(hp.stabilizer.size() == hp.order);
      CHECK(hp.stabilizer[0] == 0);
      CHECK(hp.basis.size() == W.rank() - 1);

      // W_H fixes H pointwise and scales the complement line.
      for (int s : hp.stabilizer) {
        for (const CycVector& b : hp.basis) CHECK(W.matrix(s).apply(b) == b);
        CycVector image = W.matrix(s).apply(hp.v);
        REQUIRE(normalize_line(image));
        CycVector vline = hp.v;
        REQUIRE(normalize_line(vline));
        CHECK(image == vline);
      }

      // The distinguished reflection generates W_H and carries the canonical
      // determinant.
      CHECK(W.element_order(hp.distinguished) == hp.order);
      CHECK(W.det(hp.distinguished) == Cyclotomic::root_of_unity(hp.order, -1));
      std::set<int> powers;
      int p = 0;
      for (unsigned j = 0; j < hp.order; ++j) {
        powers.insert(p);
        p = W.product(p, hp.distinguished);
      }
      CHECK(powers == std::set<int>(hp.stabilizer.begin(), hp.stabilizer.end()));

      // Reflections attached to this hyperplane report it back.
      for (int s : hp.stabilizer)
        if (s != 0) CHECK(W.hyperplane_of(s) == static_cast<int>(h));
    }
  }
}

TEST_CASE("hyperplane images under the group action") {
  const ReflectionGroup W = ReflectionGroup::preset("B2");
  for (int w = 0; w < static_cast<int>(W.size()); ++w) {
    for (std::size_t h = 0; h < W.hyperplanes().size(); ++h) {
      const int h2 = W.hyperplane_image(w, static_cast<int>(h));
      const Hyperplane& src = W.hyperplanes()[h];
      const Hyperplane& dst = W.hyperplanes()[h2];
      CHECK(src.orbit == dst.orbit);
      CHECK(src.order == dst.order);
      // The image kernel is the matrix image of the source kernel.
      for (const CycVector& b : src.basis)
        CHECK(pair(dst.alpha, W.matrix(w).apply(b)).is_zero());
      // Conjugation carries distinguished reflection to distinguished
      // reflection.
      CHECK(W.conjugate(w, src.distinguished) == dst.distinguished);
      // alpha_scale records the covector scaling on the image form.
      CycVector moved = W.act_covector(w, src.alpha);
      for (unsigned i = 0; i < W.rank(); ++i)
        CHECK(moved[i] == dst.alpha[i] * W.alpha_scale(w, static_cast<int>(h)));
    }
  }
}

TEST_CASE("covector and vector actions are adjoint") {
  const ReflectionGroup W = ReflectionGroup::preset("G4");
  const CycVector x{Cyclotomic(2), Cyclotomic::zeta(3)};
  const CycVector y{Cyclotomic(1), Cyclotomic(5) * Rational(1, 7)};
  for (int w = 0; w < static_cast<int>(W.size()); ++w) {
    CHECK(pair(W.act_covector(w, x), W.act_vector(w, y)) == pair(x, y));
    // act_vector is the plain matrix action.
    CHECK(W.act_vector(w, y) == W.matrix(w).apply(y));
  }
}

TEST_CASE("closures and normalizers") {
  const ReflectionGroup W = ReflectionGroup::preset("S3");
  const Hyperplane& hp = W.hyperplanes()[0];
  CHECK(W.subgroup_closure({hp.distinguished}) == hp.stabilizer);

  std::vector<int> whole;
  for (int g = 0; g < static_cast<int>(W.size()); ++g) whole.push_back(g);
  CHECK(W.subgroup_closure({W.generator_ids()[0], W.generator_ids()[1]}) == whole);
  CHECK(W.normalizer(whole) == whole);

  // N(W_H) for S3 is W_H itself (distinct reflections do not commute).
  CHECK(W.normalizer(hp.stabilizer) == hp.stabilizer);
}

TEST_CASE("stabilizer projectors") {
  for (const char* name : {"S3", "B2", "G4"}) {
    CAPTURE(name);
    const ReflectionGroup W = ReflectionGroup::preset(name);
    for (std::size_t h = 0; h < W.hyperplanes().size(); ++h) {
      const unsigned m = W.hyperplanes()[h].order;
      GroupAlgebraElement sum(W);
      for (unsigned i = 0; i < m; ++i) {
        const GroupAlgebraElement ei = epsilon_element(W, static_cast<int>(h), i);
        sum += ei;
        for (unsigned j = 0; j < m; ++j) {
          const GroupAlgebraElement p = ei * epsilon_element(W, static_cast<int>(h), j);
          if (i == j)
            CHECK(p == ei);
          else
            CHECK(p.is_zero());
        }
      }
      CHECK(sum == GroupAlgebraElement(W, 0));
    }
  }
}

TEST_CASE("projector equivariance") {
  const ReflectionGroup W = ReflectionGroup::preset("B2");
  ParameterSet k;
  k.by_orbit = {{Rational(0), Rational(2, 7)}, {Rational(0), Rational(-3, 5)}};
  k.validate(W);
  for (int w = 0; w < static_cast<int>(W.size()); ++w) {
    for (std::size_t h = 0; h < W.hyperplanes().size(); ++h) {
      const int h2 = W.hyperplane_image(w, static_cast<int>(h));
      const unsigned m = W.hyperplanes()[h].order;
      for (unsigned j = 0; j < m; ++j)
        CHECK(epsilon_element(W, static_cast<int>(h), j).conjugated_by(w) ==
              epsilon_element(W, h2, j));
      CHECK(a_element(W, static_cast<int>(h), k).conjugated_by(w) == a_element(W, h2, k));
      CHECK(gamma_element(W, static_cast<int>(h), k).conjugated_by(w) ==
            gamma_element(W, h2, k));
    }
  }
}

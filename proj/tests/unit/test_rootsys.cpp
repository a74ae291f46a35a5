#include <doctest.h>

#include <algorithm>

#include "f4v/reps/basis.hpp"
#include "f4v/rootsys/roots.hpp"

using namespace f4v;

TEST_SUITE("rootsys") {
  TEST_CASE("root system") {
    const auto roots = generate_roots();
    CHECK(roots.size() == 48);
    CHECK(highest_root().c == std::array<int, 4>{2, 3, 4, 2});
    CHECK(std::find(roots.begin(), roots.end(), Root{{1, 0, 0, 0}}) != roots.end());

    int positive = 0;
    std::vector<int> heights;
    for (const auto& r : roots) {
      CHECK(std::find(roots.begin(), roots.end(), -r) != roots.end());
      positive += r.height() > 0;
      heights.push_back(r.height());
    }
    CHECK(positive == 24);
    std::vector<int> negated;
    for (int h : heights) negated.push_back(-h);
    std::sort(heights.begin(), heights.end());
    std::sort(negated.begin(), negated.end());
    CHECK(heights == negated);
  }

  TEST_CASE("grading bases") {
    CHECK(grading_basis(3).size() == 18);
    CHECK(grading_basis(4).size() == 14);
    CHECK(grading_basis(6).size() == 10);
    CHECK(grading_basis(8).size() == 7);

    auto b12 = grading_basis(12);
    std::sort(b12.begin(), b12.end());
    std::vector<Root> expect = {{{1, 0, 0, 0}}, {{0, 1, 0, 0}}, {{0, 0, 1, 0}}, {{0, 0, 0, 1}}, -highest_root()};
    std::sort(expect.begin(), expect.end());
    CHECK(b12 == expect);

    for (const auto& r : grading_basis(8)) CHECK(((r.height() % 8) + 8) % 8 == 1);
  }

  TEST_CASE("Kac points") {
    for (int m : {3, 4, 6, 8, 12}) {
      const KacPoint k = kac_point(m);
      CHECK(kac_mark_sum(k) == m);
      for (int a : k.a) CHECK((a == 0 || a == 1));
      CHECK(kac_grading_dims(k).at(1) == static_cast<int>(grading_basis(m).size()));
    }
    CHECK(kac_point(3).a == std::array<int, 5>{0, 0, 1, 0, 0});
    CHECK(kac_point(4).a == std::array<int, 5>{1, 0, 1, 0, 0});
    CHECK(kac_point(6).a == std::array<int, 5>{1, 0, 1, 0, 1});
    CHECK(kac_point(8).a == std::array<int, 5>{1, 1, 1, 0, 1});
    CHECK(kac_grading_dims(kac_point(3)).at(1) == 18);
    CHECK(kac_grading_dims(kac_point(8)).at(1) == 7);
    CHECK(kac_grading_dims(kac_point(8)).at(0) == 6);
  }

  TEST_CASE("cocharacter weights") {
    const auto w4 = cochar_weights(4, {Frame::Omega, {0, 1, 0, 0}});
    CHECK(w4[label_index(4, "a")] == -1);
    CHECK(w4[label_index(4, "m")] == 3);

    const auto w3 = cochar_weights(3, {Frame::Diag, {1, 0, 0, 0}});
    CHECK(w3[label_index(3, "a")] == 1);

    for (int m : {3, 4, 6, 8, 12}) {
      const auto zero = cochar_weights(m, {frame_for(m), {}});
      CHECK(std::all_of(zero.begin(), zero.end(), [](int w) { return w == 0; }));
    }

    for (int m : {4, 6, 8}) {
      for (int i = 0; i < 4; ++i) {
        Cocharacter lam{frame_for(m), {}};
        lam.s[i] = 1;
        CHECK(cochar_weights(m, lam) == table_weights(m, lam));
      }
    }
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dks/quiver.hpp"
#include "dks/rng.hpp"

using namespace dks;

namespace {

QuiverSpec path_quiver(int n) {
  QuiverSpec q;
  q.n = n;
  for (int k = 1; k < n; ++k) q.edges.push_back({k, k + 1});
  return q;
}

} // namespace

TEST_CASE("doubling") {
  CHECK(double_quiver(path_quiver(1)).edges.empty());
  DoubledQuiver d = double_quiver(path_quiver(2));
  REQUIRE(d.edges.size() == 2);
  CHECK(d.edges[0].tail == 1);
  CHECK(d.edges[0].head == 2);
  CHECK(d.edges[0].eps == 1);
  CHECK(d.edges[1].tail == 2);
  CHECK(d.edges[1].head == 1);
  CHECK(d.edges[1].eps == -1);
  CHECK(d.edges[0].partner == 1);
  CHECK(d.edges[1].partner == 0);
}

TEST_CASE("cartan matrices of small quivers") {
  CHECK(cartan(path_quiver(2)).c == Matrix{{2, -1}, {-1, 2}});
  QuiverSpec two_isolated;
  two_isolated.n = 2;
  CHECK(cartan(two_isolated).c == Matrix::identity(2) * Rat(2));
  CHECK(cartan(path_quiver(3)).c ==
        Matrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
}

TEST_CASE("finite type detection") {
  CHECK(is_finite_type(cartan(path_quiver(2))));
  CHECK(is_finite_type(cartan(path_quiver(4))));
  QuiverSpec affine; // two vertices, two parallel edges
  affine.n = 2;
  affine.edges = {{1, 2}, {1, 2}};
  CHECK(cartan(affine).c == Matrix{{2, -2}, {-2, 2}});
  CHECK(!is_finite_type(cartan(affine)));
}

TEST_CASE("framing") {
  FramedQuiver fq = frame(path_quiver(1), {2});
  CHECK(fq.infinity() == 2);
  CHECK(fq.framed_base.edges.size() == 2);
  CHECK(fq.framed_base.edges[0] == std::pair{1, 2});
  CHECK(fq.framing_edge(1, 0) == 0);
  CHECK(fq.framing_edge(1, 1) == 1);

  FramedQuiver z = frame(path_quiver(3), {0, 0, 0});
  CHECK(z.framed_base.edges == path_quiver(3).edges);

  FramedQuiver a2 = frame(path_quiver(2), {1, 1});
  CHECK(a2.framed_base.edges.size() == 3);
  CHECK(a2.framing_edge(2, 0) == 2);

  CHECK(hat_dim({2, 1}) == std::vector<int>{2, 1, 1});
  CHECK(hat_dim({}) == std::vector<int>{1});
  CHECK(hat_dim({0, 0}) == std::vector<int>{0, 0, 1});

  // Restricting the framed Cartan matrix to base vertices recovers the base.
  CartanData cf = cartan(a2.framed_base);
  CHECK(cf.c.block(0, 0, 2, 2) == cartan(path_quiver(2)).c);
}

TEST_CASE("linear reflection") {
  CartanData c = cartan(path_quiver(2));
  CHECK(reflect_linear(c, 1, {Rat(1), Rat(0)}) ==
        std::vector<Rat>{Rat(-1), Rat(1)});
  CHECK(reflect_linear(c, 1, {Rat(0), Rat(0)}) ==
        std::vector<Rat>{Rat(0), Rat(0)});
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    std::vector<Rat> z{rng.small_rat(), rng.small_rat()};
    for (int k = 1; k <= 2; ++k)
      CHECK(reflect_linear(c, k, reflect_linear(c, k, z)) == z);
  }
}

TEST_CASE("affine reflection and the conjugation identity") {
  CartanData c = cartan(path_quiver(2));
  // w = Cv fixes v.
  CHECK(reflect_affine(c, {1, 1}, 1, {1, 1}) == std::vector<int>{1, 1});
  CHECK(reflect_affine(c, {1, 1}, 2, {1, 1}) == std::vector<int>{1, 1});

  // w - C(s_k * v) = s_k(w - Cv) for random v, w.
  Rng rng(6);
  for (int t = 0; t < 30; ++t) {
    std::vector<int> v{rng.uniform(0, 4), rng.uniform(0, 4)};
    std::vector<int> w{rng.uniform(0, 4), rng.uniform(0, 4)};
    for (int k = 1; k <= 2; ++k) {
      std::vector<int> sv = reflect_affine(c, w, k, v);
      std::vector<Rat> lhs(2), wcv(2);
      for (int l = 0; l < 2; ++l) {
        Rat cv = 0, csv = 0;
        for (int m = 0; m < 2; ++m) {
          cv += c.c.at(l, m) * v[m];
          csv += c.c.at(l, m) * sv[m];
        }
        lhs[l] = Rat(w[l]) - csv;
        wcv[l] = Rat(w[l]) - cv;
      }
      CHECK(lhs == reflect_linear(c, k, wcv));
    }
  }
}

TEST_CASE("A_n family dimension vector is Weyl-fixed") {
  for (int n = 1; n <= 4; ++n) {
    CartanData c = cartan(path_quiver(n));
    std::vector<int> v(n), w(n, 0);
    for (int k = 0; k < n; ++k) v[k] = n - k;
    w[0] = n + 1;
    // w = Cv for this family.
    for (int l = 0; l < n; ++l) {
      Rat s = 0;
      for (int m = 0; m < n; ++m) s += c.c.at(l, m) * v[m];
      CHECK(s == w[l]);
    }
    for (int k = 1; k <= n; ++k) CHECK(reflect_affine(c, w, k, v) == v);
  }
}

TEST_CASE("word application") {
  CartanData c = cartan(path_quiver(2));
  std::vector<Rat> z{Rat(2, 3), Rat(-1, 2)};
  CHECK(apply_word_linear(c, {}, z) == z);
  CHECK(apply_word_linear(c, {1, 1}, z) == z);
  // Braid relation on vectors.
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    std::vector<Rat> x{rng.small_rat(), rng.small_rat()};
    CHECK(apply_word_linear(c, {1, 2, 1}, x) ==
          apply_word_linear(c, {2, 1, 2}, x));
  }
  CHECK(apply_word_affine(c, {0, 0}, {2, 2}, {3, 1}) ==
        std::vector<int>{3, 1});
}

TEST_CASE("framing equivariance") {
  CHECK(framing_equivariance_check(path_quiver(1), {1}, {2}, 1));
  for (int k = 1; k <= 3; ++k)
    CHECK(framing_equivariance_check(path_quiver(3), {2, 1, 1}, {0, 0, 0}, k));
  for (int k = 1; k <= 2; ++k)
    CHECK(framing_equivariance_check(path_quiver(2), {1, 1}, {1, 1}, k));
}

TEST_CASE("p value") {
  FramedQuiver a1 = frame(path_quiver(1), {2});
  CHECK(p_value(a1, {1, 1}) == 1);
  CHECK(p_value(a1, {0, 0}) == 1);
  // For the A_n family, p(hat v) = sum over base edges v_t v_h + v.w - v.v.
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> v(n), w(n, 0);
    for (int k = 0; k < n; ++k) v[k] = n - k;
    w[0] = n + 1;
    FramedQuiver fq = frame(path_quiver(n), w);
    long long expect = 0;
    for (int k = 0; k + 1 < n; ++k)
      expect += static_cast<long long>(v[k]) * v[k + 1];
    for (int k = 0; k < n; ++k)
      expect += static_cast<long long>(v[k]) * w[k] -
                static_cast<long long>(v[k]) * v[k];
    CHECK(p_value(fq, hat_dim(v)) == expect);
  }
}

TEST_CASE("validation rejects bad quivers") {
  QuiverSpec loop;
  loop.n = 1;
  loop.edges = {{1, 1}};
  CHECK_THROWS(loop.validate());
  QuiverSpec oob;
  oob.n = 1;
  oob.edges = {{1, 2}};
  CHECK_THROWS(oob.validate());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dks/basic_affine.hpp"
#include "dks/reflection.hpp"

using namespace dks;

namespace {

QuiverSpec path_quiver(int n) {
  QuiverSpec q;
  q.n = n;
  for (int k = 1; k < n; ++k) q.edges.push_back({k, k + 1});
  return q;
}

RepSpaces ones_spaces(int n, const std::vector<int>& w) {
  return RepSpaces::standard(frame(path_quiver(n), w),
                             std::vector<int>(n, 1));
}

} // namespace

TEST_CASE("dims_match_cartan") {
  CHECK(dims_match_cartan(path_quiver(2), {1, 1}, {1, 1}));
  CHECK(!dims_match_cartan(path_quiver(2), {1, 1}, {2, 1}));
  CHECK(dims_match_cartan(path_quiver(3), {1, 1, 1}, {1, 0, 1}));
}

TEST_CASE("reflect on the one-vertex quiver") {
  RepSpaces sp = ones_spaces(1, {2});
  Rng rng(70);
  for (int t = 0; t < 30; ++t) {
    RepPoint p = sample_ones_point(rng, sp, {1});
    ReflectionOutput out = reflect(p, 1);
    CHECK(out.torsion_certificate == 1);
    ZkReport rep = verify_zk(p, out.point, 1);
    CHECK(rep.untouched_edges_equal);
    CHECK(rep.sequence_exact);
    CHECK(rep.torsion_one);
    CHECK(rep.multiplication_rule);
    // The reverse direction of the certificate and the square relation.
    RepPoint back = reflect(out.point, 1).point;
    CHECK(verify_zk(out.point, back, 1).ok());
    CHECK(back == p);
    CHECK(mu_weyl_check(p, 1));
  }
}

TEST_CASE("a concrete reflection certificate") {
  // One vertex with two framing arrows. The moment scalar is the only
  // datum; the reflected maps solve a'b' = ab - lambda on the kernel.
  RepSpaces sp = ones_spaces(1, {2});
  UnframedData d;
  d.i = {Matrix{{Rat(-1), Rat(-1)}}};
  d.j = {Matrix{{Rat(0)}, {Rat(-5)}}};
  RepPoint p = to_framed(sp, d);
  TracelessMoment tm = traceless_moment(p);
  REQUIRE(tm.level_zero);
  CHECK(tm.lambda[0] == 5);
  ReflectionOutput out = reflect(p, 1);
  CHECK(out.torsion_certificate == 1);
  CHECK(verify_zk(p, out.point, 1).ok());
  AkBk before = assemble_ak_bk(p, 1);
  AkBk after = assemble_ak_bk(out.point, 1);
  CHECK(after.a * after.b == before.a * before.b - Matrix::identity(2) * 5);
  // Moment scalar reflects to -5 and vertex dimension is preserved.
  CHECK(traceless_moment(out.point).lambda[0] == -5);
}

TEST_CASE("reflect refuses departures from its domain") {
  RepSpaces sp = ones_spaces(1, {2});
  RepPoint z = RepPoint::zero(sp); // b_1 = 0 is not surjective
  CHECK_THROWS_AS(reflect(z, 1), std::domain_error);
  CHECK_THROWS_AS(reflect_word(z, {1, 1}), std::domain_error);

  // Off the level set: v = (2) with a non-scalar moment value.
  RepSpaces sp2 = RepSpaces::standard(frame(path_quiver(1), {3}), {2});
  Rng rng(71);
  for (int t = 0; t < 50; ++t) {
    RepPoint p = random_rep_point(rng, sp2);
    if (traceless_moment(p).level_zero) continue;
    CHECK_THROWS_AS(reflect(p, 1), std::domain_error);
    break;
  }
}

TEST_CASE("moment scalars follow the linear Weyl action along words") {
  RepSpaces sp = ones_spaces(2, {1, 1});
  CartanData c = cartan(path_quiver(2));
  Rng rng(72);
  for (int t = 0; t < 10; ++t) {
    RepPoint p = sample_ones_point(rng, sp, {1, 2}, true);
    WeylWord word{1, 2, 1};
    RepPoint q = reflect_word(p, word);
    CHECK(traceless_moment(q).lambda ==
          apply_word_linear(c, word, traceless_moment(p).lambda));
  }
}

TEST_CASE("coxeter relations at trivial gauge group") {
  Rng rng(73);
  CoxeterReport braid =
      coxeter_suite(path_quiver(2), {1, 1}, {1, 1}, 1, 2, 8, rng);
  CHECK(!braid.commuting_pair);
  CHECK(braid.all_pass());
  CoxeterReport comm =
      coxeter_suite(path_quiver(3), {1, 1, 1}, {1, 0, 1}, 1, 3, 8, rng);
  CHECK(comm.commuting_pair);
  CHECK(comm.all_pass());
  CHECK_THROWS_AS(
      coxeter_suite(path_quiver(2), {1, 1}, {2, 1}, 1, 2, 1, rng),
      std::invalid_argument);
}

TEST_CASE("orbit comparison at trivial gauge group") {
  RepSpaces sp = ones_spaces(1, {2});
  Rng rng(74);
  RepPoint p = sample_ones_point(rng, sp, {1});
  CHECK(orbit_equal(p, p).value == Verdict::Equal);
  RepPoint q = reflect(p, 1).point;
  // The moment scalar flips sign, which already separates the points.
  OrbitVerdict v = orbit_equal(p, q);
  CHECK(v.value == Verdict::NotEqual);
}

TEST_CASE("orbit comparison through canonical forms") {
  Rng rng(75);
  int n = 2;
  std::vector<Rat> lambda{Rat(0), Rat(1), Rat(3)};
  RepPoint p = an_family_point(n, lambda);
  GaugeElement g{{rng.invertible(2), rng.invertible(1)}};
  OrbitOptions opts;
  opts.an_family = true;
  CHECK(orbit_equal(p, gauge_act(g, p), opts).value == Verdict::Equal);

  std::vector<Rat> mu{Rat(0), Rat(1), Rat(4)};
  CHECK(orbit_equal(p, an_family_point(n, mu), opts).value ==
        Verdict::NotEqual);
}

TEST_CASE("quiver reflection matches the closed-form reflection") {
  Rng rng(76);
  for (int n = 1; n <= 2; ++n)
    for (int t = 0; t < 3; ++t) {
      std::vector<Rat> lambda;
      while (static_cast<int>(lambda.size()) < n + 1) {
        Rat c = rng.small_rat();
        bool fresh = true;
        for (const auto& x : lambda) fresh = fresh && x != c;
        if (fresh) lambda.push_back(c);
      }
      RepPoint p = an_family_point(n, lambda);
      for (int k = 1; k <= n; ++k) {
        CanonicalCotangent lhs = canonical_form(xi(reflect(p, k).point));
        CanonicalCotangent rhs =
            canonical_form(skcal_reflect(xi(p), k));
        CHECK(lhs == rhs);
      }
    }
}

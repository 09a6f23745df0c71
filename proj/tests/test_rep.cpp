#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dks/rep.hpp"

using namespace dks;

namespace {

QuiverSpec path_quiver(int n) {
  QuiverSpec q;
  q.n = n;
  for (int k = 1; k < n; ++k) q.edges.push_back({k, k + 1});
  return q;
}

// One vertex, v = (1), w = (2).
RepSpaces a1_spaces() {
  return RepSpaces::standard(frame(path_quiver(1), {2}), {1});
}

} // namespace

TEST_CASE("framed round trip") {
  RepSpaces sp = a1_spaces();
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    RepPoint p = random_rep_point(rng, sp);
    UnframedData d = from_framed(p);
    CHECK(to_framed(sp, d) == p);
  }
  RepPoint z = RepPoint::zero(sp);
  CHECK(to_framed(sp, from_framed(z)) == z);
}

TEST_CASE("moment map on the small framed example") {
  // v = (1), w = (2). Take i_1 = alpha-style column (0, tau)^T transposed
  // data: i_1: W -> V_1 is 1x2, j_1: V_1 -> W is 2x1.
  RepSpaces sp = a1_spaces();
  Rat tau(7, 3);
  UnframedData d;
  d.i = {Matrix{{Rat(0), Rat(1)}}};         // beta-type map W -> V_1
  d.j = {Matrix{{Rat(0)}, {tau}}};          // alpha-type map V_1 -> W
  RepPoint p = to_framed(sp, d);
  MomentValue mv = moment_map(p);
  REQUIRE(mv.mu.size() == 2);
  // mu_1 = i_1 j_1 = tau (1x1).
  CHECK(mv.mu[0] == Matrix{{tau}});
  // Total trace vanishes, so the framing vertex carries -tau.
  CHECK(mv.mu[1].trace() == -tau);
  CHECK(mv.total_trace() == 0);

  CHECK(moment_map(RepPoint::zero(sp)).mu[0].is_zero());
}

TEST_CASE("total trace is zero for random points") {
  RepSpaces sp =
      RepSpaces::standard(frame(path_quiver(3), {2, 0, 1}), {2, 2, 1});
  Rng rng(32);
  for (int t = 0; t < 20; ++t)
    CHECK(moment_map(random_rep_point(rng, sp)).total_trace() == 0);
}

TEST_CASE("traceless moment and level-zero detection") {
  RepSpaces sp = a1_spaces();
  Rng rng(33);
  for (int t = 0; t < 10; ++t) {
    // v = (1): every point is on the level set.
    TracelessMoment tm = traceless_moment(random_rep_point(rng, sp));
    CHECK(tm.level_zero);
  }
  RepSpaces sp2 =
      RepSpaces::standard(frame(path_quiver(2), {3, 0}), {2, 1});
  RepPoint q = random_rep_point(rng, sp2);
  TracelessMoment tm = traceless_moment(q);
  MomentValue mv = moment_map(q);
  CHECK(tm.tm[0] == mv.mu[0].traceless());
  CHECK(tm.lambda[0] == mv.mu[0].trace() / 2);
}

TEST_CASE("gauge action and moment conjugation") {
  RepSpaces sp =
      RepSpaces::standard(frame(path_quiver(2), {1, 1}), {2, 2});
  Rng rng(34);
  for (int t = 0; t < 10; ++t) {
    RepPoint p = random_rep_point(rng, sp);
    GaugeElement g{{rng.invertible(2), rng.invertible(2)}};
    RepPoint q = gauge_act(g, p);
    MomentValue mp = moment_map(p), mq = moment_map(q);
    for (int k = 0; k < 2; ++k)
      CHECK(mq.mu[k] == g.g[k] * mp.mu[k] * g.g[k].inverse());
    CHECK(mq.mu[2] == mp.mu[2]); // framing vertex untouched
  }
  GaugeElement id{{Matrix::identity(2), Matrix::identity(2)}};
  RepPoint p = random_rep_point(rng, sp);
  CHECK(gauge_act(id, p) == p);
}

TEST_CASE("symplectic pairing") {
  RepSpaces sp =
      RepSpaces::standard(frame(path_quiver(2), {1, 0}), {2, 1});
  Rng rng(35);
  for (int t = 0; t < 10; ++t) {
    RepPoint p = random_rep_point(rng, sp);
    RepPoint q = random_rep_point(rng, sp);
    CHECK(symplectic_pair(p, p) == 0);
    CHECK(symplectic_pair(p, q) == -symplectic_pair(q, p));
  }
  // Dual coordinate points pair to +-1: put a 1 on a forward base edge in
  // one point and on its reversal in the other.
  RepPoint p = RepPoint::zero(sp), q = RepPoint::zero(sp);
  p.maps[0].at(0, 0) = 1; // forward base edge 1->2
  int rev = sp.fq.doubled.edges[0].partner;
  q.maps[rev].at(0, 0) = 1;
  CHECK(symplectic_pair(p, q) == 1);
  CHECK(symplectic_pair(q, p) == -1);
}

TEST_CASE("path invariants are gauge invariant") {
  RepSpaces sp = a1_spaces();
  Rng rng(36);
  RepPoint p = random_rep_point(rng, sp);
  CHECK(path_invariant(p, {}) == 1);
  // Framing edge 0 forward is doubled id 0; reversal id 2 (2 base-framing
  // edges total). Path: infinity -> 1 -> infinity.
  int total = static_cast<int>(sp.fq.framed_base.edges.size());
  std::vector<int> loop{total + 0, 0};
  Rat val = path_invariant(p, loop);
  GaugeElement g{{rng.invertible(1)}};
  CHECK(path_invariant(gauge_act(g, p), loop) == val);
  CHECK_THROWS(path_invariant(p, {0}));
}

TEST_CASE("a_k / b_k assembly satisfies the moment identity") {
  Rng rng(37);
  std::vector<RepSpaces> cases = {
      a1_spaces(),
      RepSpaces::standard(frame(path_quiver(2), {1, 1}), {1, 1}),
      RepSpaces::standard(frame(path_quiver(3), {1, 0, 1}), {2, 1, 2}),
  };
  for (const auto& sp : cases)
    for (int t = 0; t < 20; ++t) {
      RepPoint p = random_rep_point(rng, sp);
      MomentValue mv = moment_map(p);
      for (int k = 1; k <= sp.fq.base.n; ++k) {
        AkBk ab = assemble_ak_bk(p, k);
        CHECK(ab.b * ab.a == mv.mu[k - 1]);
        CHECK(ab.a.cols() == sp.v[k - 1]);
        CHECK(ab.t_vol.dim == ab.a.rows());
      }
    }
}

TEST_CASE("T_k dimension is 2 v_k when w = Cv") {
  // A_n family: v = (n..1), w = (n+1, 0, ..).
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> v(n), w(n, 0);
    for (int k = 0; k < n; ++k) v[k] = n - k;
    w[0] = n + 1;
    RepSpaces sp = RepSpaces::standard(frame(path_quiver(n), w), v);
    RepPoint p = RepPoint::zero(sp);
    for (int k = 1; k <= n; ++k)
      CHECK(assemble_ak_bk(p, k).t_vol.dim == 2 * v[k - 1]);
  }
}

TEST_CASE("locus membership on the small example") {
  RepSpaces sp = a1_spaces();
  UnframedData d;
  d.i = {Matrix{{Rat(1), Rat(1)}}};
  d.j = {Matrix{{Rat(0)}, {Rat(5)}}};
  RepPoint p = to_framed(sp, d);
  LocusMembership lm = locus_membership(p, 1);
  CHECK(lm.in_surjective);
  CHECK(lm.in_injective);
  RepPoint z = RepPoint::zero(sp);
  LocusMembership lz = locus_membership(z, 1);
  CHECK(!lz.in_surjective);
  CHECK(!lz.in_injective);
}

TEST_CASE("quiver and point JSON round-trips") {
  QuiverSpec q = path_quiver(3);
  auto q2 = quiver_from_json(quiver_to_json(q));
  REQUIRE(q2);
  CHECK(q2->n == 3);
  CHECK(q2->edges == q.edges);
  CHECK(!quiver_from_json("{\"vertices\": 1, \"edges\": [[1,1]]}"));

  RepSpaces sp = RepSpaces::standard(frame(path_quiver(2), {1, 1}), {2, 1});
  Rng rng(38);
  RepPoint p = random_rep_point(rng, sp);
  auto p2 = rep_point_from_json(sp.fq, rep_point_to_json(p));
  REQUIRE(p2);
  CHECK(*p2 == p);
}

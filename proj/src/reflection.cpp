#include "dks/reflection.hpp"

#include "dks/basic_affine.hpp"

#include <sstream>
#include <stdexcept>

namespace dks {

bool dims_match_cartan(const QuiverSpec& q, const std::vector<int>& v,
                       const std::vector<int>& w) {
  CartanData c = cartan(q);
  if (static_cast<int>(v.size()) != q.n || v.size() != w.size()) return false;
  for (int l = 0; l < q.n; ++l) {
    Rat s = 0;
    for (int m = 0; m < q.n; ++m) s += c.c.at(l, m) * v[m];
    if (s != w[l]) return false;
  }
  return true;
}

ReflectionOutput reflect(const RepPoint& p, int k) {
  TracelessMoment tm = traceless_moment(p);
  if (!tm.level_zero)
    throw std::domain_error("reflect: point not on the level set");
  int vk = p.spaces.v[k - 1];
  if (vk == 0) return {p, k, Rat(1)};

  AkBk ab = assemble_ak_bk(p, k);
  if (ab.b.rank() != vk)
    throw std::domain_error("reflect: b_k not surjective");
  Matrix kernel = ab.b.kernel_basis();
  if (kernel.cols() != vk)
    throw std::domain_error("reflect: ker b_k has wrong dimension (w != Cv)");

  VolumeForm vol_k = p.spaces.volume_at(k);
  Rat t = torsion_ses(kernel, ab.b, vol_k, ab.t_vol, vol_k);
  Matrix aprime = kernel;
  for (int r = 0; r < aprime.rows(); ++r) aprime.at(r, 0) /= t;

  int tdim = ab.a.rows();
  Matrix rhs = ab.a * ab.b - Matrix::identity(tdim) * tm.lambda[k - 1];
  auto bprime = solve(aprime, rhs);
  if (!bprime)
    throw std::domain_error("reflect: multiplication rule unsolvable");

  ReflectionOutput out{p, k, torsion_ses(aprime, ab.b, vol_k, ab.t_vol, vol_k)};
  int off = 0;
  for (int id : ab.edge_order) {
    const DoubledEdge& h = p.spaces.fq.doubled.edges[id];
    int dt = p.spaces.dim_at(h.tail);
    out.point.maps[h.partner] = aprime.block(off, 0, dt, vk);
    out.point.maps[id] = bprime->block(0, off, vk, dt) * Rat(h.eps);
    off += dt;
  }
  return out;
}

ZkReport verify_zk(const RepPoint& p, const RepPoint& pprime, int k) {
  ZkReport rep;
  if (p.spaces.v != pprime.spaces.v) return rep;

  rep.untouched_edges_equal = true;
  for (std::size_t e = 0; e < p.maps.size(); ++e) {
    const DoubledEdge& h = p.spaces.fq.doubled.edges[e];
    if (h.head == k || h.tail == k) continue;
    if (p.maps[e] != pprime.maps[e]) rep.untouched_edges_equal = false;
  }

  AkBk ab = assemble_ak_bk(p, k);
  AkBk abp = assemble_ak_bk(pprime, k);
  int vk = p.spaces.v[k - 1];
  VolumeForm vol_k = p.spaces.volume_at(k);

  rep.sequence_exact = is_exact_ses(abp.a, ab.b);
  if (rep.sequence_exact)
    rep.torsion_one =
        torsion_ses(abp.a, ab.b, vol_k, ab.t_vol, vol_k) == 1;

  Rat lam = vk > 0 ? traceless_moment(p).lambda[k - 1] : Rat(0);
  rep.multiplication_rule =
      abp.a * abp.b == ab.a * ab.b - Matrix::identity(ab.a.rows()) * lam;
  return rep;
}

RepPoint reflect_word(const RepPoint& p, const WeylWord& word) {
  RepPoint cur = p;
  for (std::size_t i = 0; i < word.size(); ++i) {
    try {
      cur = reflect(cur, word[i]).point;
    } catch (const std::domain_error& err) {
      std::ostringstream os;
      os << "reflect_word failed at letter " << i + 1 << " (vertex "
         << word[i] << "): " << err.what();
      throw std::domain_error(os.str());
    }
  }
  return cur;
}

bool mu_weyl_check(const RepPoint& p, int k) {
  CartanData c = cartan(p.spaces.fq.base);
  std::vector<Rat> before = traceless_moment(p).lambda;
  std::vector<Rat> after = traceless_moment(reflect(p, k).point).lambda;
  return after == reflect_linear(c, k, before);
}

namespace {

// Depth-first enumeration of composable closed paths at the framing vertex;
// returns a separating path as evidence, if any.
bool paths_separate(const RepPoint& p1, const RepPoint& p2, int max_len,
                    std::vector<int>& path, int at, std::string& evidence) {
  const RepSpaces& sp = p1.spaces;
  int inf = sp.fq.infinity();
  if (at == inf && !path.empty()) {
    if (path_invariant(p1, path) != path_invariant(p2, path)) {
      std::ostringstream os;
      os << "path invariant differs, edges";
      for (int e : path) os << ' ' << e;
      evidence = os.str();
      return true;
    }
  }
  if (static_cast<int>(path.size()) == max_len) return false;
  for (const auto& h : sp.fq.doubled.edges) {
    if (h.tail != at) continue;
    path.push_back(h.id);
    if (paths_separate(p1, p2, max_len, path, h.head, evidence)) return true;
    path.pop_back();
  }
  return false;
}

} // namespace

OrbitVerdict orbit_equal(const RepPoint& p1, const RepPoint& p2,
                         const OrbitOptions& opts) {
  if (p1.spaces.v != p2.spaces.v || p1.spaces.fq.w != p2.spaces.fq.w)
    return {Verdict::NotEqual, "different dimension data"};

  TracelessMoment t1 = traceless_moment(p1), t2 = traceless_moment(p2);
  if (t1.level_zero && t2.level_zero && t1.lambda != t2.lambda)
    return {Verdict::NotEqual, "moment scalars differ"};

  std::vector<int> path;
  std::string evidence;
  if (paths_separate(p1, p2, opts.path_invariant_length, path,
                     p1.spaces.fq.infinity(), evidence))
    return {Verdict::NotEqual, evidence};

  bool all_ones = true;
  for (int d : p1.spaces.v) all_ones = all_ones && d == 1;
  if (all_ones) {
    // Trivial gauge group: the point map itself is canonical.
    if (p1 == p2) return {Verdict::Equal, "exact point equality"};
    return {Verdict::NotEqual, "points differ with trivial gauge group"};
  }

  if (opts.an_family) {
    if (canonical_equal_mod_torus(canonical_form(xi(p1)),
                                  canonical_form(xi(p2))))
      return {Verdict::Equal, "matching canonical forms"};
    return {Verdict::NotEqual, "canonical forms differ"};
  }

  return {Verdict::Inconclusive, "invariant battery exhausted"};
}

RepPoint sample_ones_point(Rng& rng, const RepSpaces& sp,
                           const std::vector<int>& nonzero_at,
                           bool distinct_sum) {
  for (;;) {
    RepPoint p = random_rep_point(rng, sp);
    TracelessMoment tm = traceless_moment(p);
    if (!tm.level_zero) continue;
    bool ok = true;
    for (int k : nonzero_at) ok = ok && tm.lambda[k - 1] != 0;
    if (ok && distinct_sum && nonzero_at.size() == 2)
      ok = tm.lambda[nonzero_at[0] - 1] + tm.lambda[nonzero_at[1] - 1] != 0;
    if (ok) return p;
  }
}

CoxeterReport coxeter_suite(const QuiverSpec& q, const std::vector<int>& v,
                            const std::vector<int>& w, int k, int l,
                            int samples, Rng& rng) {
  if (!dims_match_cartan(q, v, w))
    throw std::invalid_argument("coxeter_suite requires w = Cv");
  for (int d : v)
    if (d != 1)
      throw std::invalid_argument(
          "coxeter_suite handles trivial gauge groups only (all v_k = 1)");
  CartanData c = cartan(q);
  Rat akl = c.a.at(k - 1, l - 1);
  if (akl != 0 && akl != 1)
    throw std::invalid_argument("vertex pair with multiple edges unsupported");

  CoxeterReport rep;
  rep.samples = samples;
  rep.commuting_pair = akl == 0;
  RepSpaces sp = RepSpaces::standard(frame(q, w), v);
  for (int s = 0; s < samples; ++s) {
    RepPoint p = sample_ones_point(rng, sp, {k, l}, !rep.commuting_pair);
    if (reflect_word(p, {k, k}) == p && reflect_word(p, {l, l}) == p)
      ++rep.square_pass;
    if (rep.commuting_pair) {
      if (reflect_word(p, {k, l}) == reflect_word(p, {l, k}))
        ++rep.commute_pass;
    } else {
      if (reflect_word(p, {k, l, k}) == reflect_word(p, {l, k, l}))
        ++rep.braid_pass;
    }
  }
  return rep;
}

} // namespace dks

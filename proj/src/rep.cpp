#include "dks/rep.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace dks {

using ordered_json = nlohmann::ordered_json;

RepSpaces RepSpaces::standard(const FramedQuiver& fq,
                              const std::vector<int>& v) {
  if (static_cast<int>(v.size()) != fq.base.n)
    throw std::invalid_argument("dimension vector length mismatch");
  RepSpaces sp;
  sp.fq = fq;
  sp.v = v;
  for (int d : v) sp.sigma.push_back(VolumeForm::standard(d));
  return sp;
}

RepPoint RepPoint::zero(const RepSpaces& sp) {
  RepPoint p;
  p.spaces = sp;
  for (const auto& e : sp.fq.doubled.edges)
    p.maps.emplace_back(sp.dim_at(e.head), sp.dim_at(e.tail));
  return p;
}

void RepPoint::validate() const {
  const auto& edges = spaces.fq.doubled.edges;
  if (maps.size() != edges.size())
    throw std::invalid_argument("edge map count mismatch");
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (maps[i].rows() != spaces.dim_at(edges[i].head) ||
        maps[i].cols() != spaces.dim_at(edges[i].tail))
      throw std::invalid_argument("edge map shape mismatch");
}

RepPoint to_framed(const RepSpaces& sp, const UnframedData& d) {
  RepPoint p = RepPoint::zero(sp);
  int m = sp.fq.base_edge_count();
  int total = static_cast<int>(sp.fq.framed_base.edges.size());
  for (int e = 0; e < 2 * m; ++e) {
    // Doubled base-edge ids: forward 0..m-1 in the base, m..2m-1 reversed;
    // in the framed double the reversed copy sits at offset `total`.
    int framed_id = e < m ? e : total + (e - m);
    p.maps[framed_id] = d.base_maps[e];
  }
  for (int k = 1; k <= sp.fq.base.n; ++k) {
    int wk = sp.fq.w[k - 1];
    if (wk == 0) continue;
    const Matrix& ik = d.i[k - 1]; // v_k x w_k
    const Matrix& jk = d.j[k - 1]; // w_k x v_k
    if (ik.rows() != sp.v[k - 1] || ik.cols() != wk ||
        jk.rows() != wk || jk.cols() != sp.v[k - 1])
      throw std::invalid_argument("framing map shape mismatch");
    for (int r = 0; r < wk; ++r) {
      int fwd = sp.fq.framing_edge(k, r);
      // The sign makes the framed moment map at k reproduce +i_k j_k.
      p.maps[fwd] = -jk.block(r, 0, 1, sp.v[k - 1]);
      p.maps[total + fwd] = ik.block(0, r, sp.v[k - 1], 1);
    }
  }
  p.validate();
  return p;
}

UnframedData from_framed(const RepPoint& p) {
  const RepSpaces& sp = p.spaces;
  int m = sp.fq.base_edge_count();
  int total = static_cast<int>(sp.fq.framed_base.edges.size());
  UnframedData d;
  for (int e = 0; e < m; ++e) d.base_maps.push_back(p.maps[e]);
  for (int e = 0; e < m; ++e) d.base_maps.push_back(p.maps[total + e]);
  for (int k = 1; k <= sp.fq.base.n; ++k) {
    int wk = sp.fq.w[k - 1];
    Matrix ik(sp.v[k - 1], wk), jk(wk, sp.v[k - 1]);
    for (int r = 0; r < wk; ++r) {
      int fwd = sp.fq.framing_edge(k, r);
      jk.set_block(r, 0, -p.maps[fwd]);
      ik.set_block(0, r, p.maps[total + fwd]);
    }
    d.i.push_back(ik);
    d.j.push_back(jk);
  }
  return d;
}

Rat MomentValue::total_trace() const {
  Rat t = 0;
  for (const auto& m : mu) t += m.trace();
  return t;
}

MomentValue moment_map(const RepPoint& p) {
  const RepSpaces& sp = p.spaces;
  int total = static_cast<int>(sp.fq.framed_base.edges.size());
  MomentValue mv;
  for (int l = 1; l <= sp.fq.infinity(); ++l) {
    int d = sp.dim_at(l);
    mv.mu.emplace_back(d, d);
  }
  for (int e = 0; e < total; ++e) {
    const DoubledEdge& h = sp.fq.doubled.edges[e];
    mv.mu[h.head - 1] = mv.mu[h.head - 1] + p.maps[e] * p.maps[h.partner];
    mv.mu[h.tail - 1] = mv.mu[h.tail - 1] - p.maps[h.partner] * p.maps[e];
  }
  return mv;
}

TracelessMoment traceless_moment(const RepPoint& p) {
  MomentValue mv = moment_map(p);
  TracelessMoment out;
  out.level_zero = true;
  for (int k = 1; k <= p.spaces.fq.base.n; ++k) {
    int d = p.spaces.v[k - 1];
    if (d == 0) {
      out.tm.emplace_back(0, 0);
      out.lambda.emplace_back(0);
      continue;
    }
    Matrix t = mv.mu[k - 1].traceless();
    if (!t.is_zero()) out.level_zero = false;
    out.tm.push_back(t);
    out.lambda.push_back(mv.mu[k - 1].trace() / d);
  }
  return out;
}

RepPoint gauge_act(const GaugeElement& g, const RepPoint& p) {
  const RepSpaces& sp = p.spaces;
  int inf = sp.fq.infinity();
  std::vector<Matrix> ginv;
  for (const auto& gk : g.g) ginv.push_back(gk.inverse());
  auto left = [&](int vertex) -> std::optional<Matrix> {
    if (vertex == inf) return std::nullopt;
    return g.g[vertex - 1];
  };
  RepPoint q = p;
  for (std::size_t e = 0; e < p.maps.size(); ++e) {
    const DoubledEdge& h = sp.fq.doubled.edges[e];
    Matrix b = p.maps[e];
    if (auto gh = left(h.head)) b = *gh * b;
    if (h.tail != inf) b = b * ginv[h.tail - 1];
    q.maps[e] = b;
  }
  return q;
}

Rat symplectic_pair(const RepPoint& p, const RepPoint& q) {
  if (p.spaces.v != q.spaces.v) throw std::invalid_argument("space mismatch");
  UnframedData dp = from_framed(p), dq = from_framed(q);
  int m = p.spaces.fq.base_edge_count();
  Rat s = 0;
  for (int e = 0; e < m; ++e) {
    s += (dp.base_maps[e] * dq.base_maps[m + e]).trace();
    s -= (dp.base_maps[m + e] * dq.base_maps[e]).trace();
  }
  for (int k = 0; k < p.spaces.fq.base.n; ++k) {
    if (p.spaces.fq.w[k] == 0) continue;
    s += (dp.j[k] * dq.i[k]).trace();
    s -= (dp.i[k] * dq.j[k]).trace();
  }
  return s;
}

Rat path_invariant(const RepPoint& p, const std::vector<int>& edge_ids) {
  const RepSpaces& sp = p.spaces;
  int inf = sp.fq.infinity();
  int at = inf;
  Matrix acc = Matrix::identity(1);
  for (int e : edge_ids) {
    const DoubledEdge& h = sp.fq.doubled.edges[e];
    if (h.tail != at) throw std::invalid_argument("path not composable");
    acc = p.maps[e] * acc;
    at = h.head;
  }
  if (at != inf) throw std::invalid_argument("path must end at the framing");
  return acc.at(0, 0);
}

AkBk assemble_ak_bk(const RepPoint& p, int k) {
  const RepSpaces& sp = p.spaces;
  if (k < 1 || k > sp.fq.base.n) throw std::out_of_range("vertex");
  int inf = sp.fq.infinity();
  AkBk out;
  for (const auto& h : sp.fq.doubled.edges)
    if (h.head == k) out.edge_order.push_back(h.id);
  auto sort_key = [&](int id) {
    int t = sp.fq.doubled.edges[id].tail;
    return std::pair{t == inf ? inf + 1 : t, id};
  };
  std::sort(out.edge_order.begin(), out.edge_order.end(),
            [&](int a, int b) { return sort_key(a) < sort_key(b); });

  int vk = sp.v[k - 1];
  std::vector<Matrix> arows, bcols;
  std::vector<VolumeForm> vols;
  for (int id : out.edge_order) {
    const DoubledEdge& h = sp.fq.doubled.edges[id];
    arows.push_back(p.maps[h.partner]);
    bcols.push_back(p.maps[id] * Rat(h.eps));
    vols.push_back(sp.volume_at(h.tail));
  }
  out.a = arows.empty() ? Matrix(0, vk) : Matrix::vstack(arows);
  out.b = bcols.empty() ? Matrix(vk, 0) : Matrix::hstack(bcols);
  out.t_vol = VolumeForm::product(vols);
  return out;
}

LocusMembership locus_membership(const RepPoint& p, int k) {
  AkBk ab = assemble_ak_bk(p, k);
  int vk = p.spaces.v[k - 1];
  return {ab.b.rank() == vk, ab.a.rank() == vk};
}

int jacobian_rank(const RepPoint& p) {
  const RepSpaces& sp = p.spaces;
  int n = sp.fq.base.n;
  int rows = 0;
  for (int k = 0; k < n; ++k) rows += sp.v[k] * sp.v[k];
  std::vector<Matrix> cols;
  for (const auto& e : sp.fq.doubled.edges) {
    int dh = sp.dim_at(e.head), dt = sp.dim_at(e.tail);
    const DoubledEdge& f = e.eps == 1 ? e : sp.fq.doubled.edges[e.partner];
    for (int i = 0; i < dh; ++i)
      for (int j = 0; j < dt; ++j) {
        Matrix q(dh, dt);
        q.at(i, j) = 1;
        // Directional derivative of the per-vertex moment values in the
        // direction of a single elementary edge coordinate.
        Matrix col(rows, 1);
        int off = 0;
        for (int l = 1; l <= n; ++l) {
          int d = sp.v[l - 1];
          Matrix dmu(d, d);
          if (e.eps == 1) {
            if (f.head == l) dmu = dmu + q * p.maps[f.partner];
            if (f.tail == l) dmu = dmu - p.maps[f.partner] * q;
          } else {
            if (f.head == l) dmu = dmu + p.maps[f.id] * q;
            if (f.tail == l) dmu = dmu - q * p.maps[f.id];
          }
          if (d > 0) col.set_block(off, 0, dmu.traceless().vectorize());
          off += d * d;
        }
        cols.push_back(col);
      }
  }
  if (cols.empty()) return 0;
  return Matrix::hstack(cols).rank();
}

RepPoint random_rep_point(Rng& rng, const RepSpaces& sp) {
  RepPoint p = RepPoint::zero(sp);
  for (auto& m : p.maps) m = rng.matrix(m.rows(), m.cols());
  return p;
}

namespace {

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  std::vector<std::string> entries;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      entries.push_back(to_fraction_string(m.at(r, c)));
  j["entries"] = entries;
  return j;
}

std::optional<Matrix> matrix_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    return std::nullopt;
  int rows = j["rows"], cols = j["cols"];
  if (rows < 0 || cols < 0 ||
      static_cast<int>(j["entries"].size()) != rows * cols)
    return std::nullopt;
  Matrix m(rows, cols);
  int idx = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      auto val = parse_fraction(j["entries"][idx++].get<std::string>());
      if (!val) return std::nullopt;
      m.at(r, c) = *val;
    }
  return m;
}

} // namespace

std::string matrix_to_json_string(const Matrix& m) {
  return matrix_to_json(m).dump();
}

std::optional<Matrix> matrix_from_json_string(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) return std::nullopt;
  return matrix_from_json(j);
}

std::string quiver_to_json(const QuiverSpec& q) {
  ordered_json j;
  j["vertices"] = q.n;
  j["edges"] = ordered_json::array();
  for (auto [t, h] : q.edges) j["edges"].push_back({t, h});
  return j.dump(2);
}

std::optional<QuiverSpec> quiver_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("vertices") ||
      !j.contains("edges"))
    return std::nullopt;
  QuiverSpec q;
  q.n = j["vertices"];
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) return std::nullopt;
    q.edges.push_back({e[0], e[1]});
  }
  try {
    q.validate();
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return q;
}

std::string rep_point_to_json(const RepPoint& p) {
  ordered_json j;
  j["dims"] = p.spaces.v;
  j["framing"] = p.spaces.fq.w;
  ordered_json maps = ordered_json::object();
  for (std::size_t e = 0; e < p.maps.size(); ++e)
    maps[std::to_string(e)] = matrix_to_json(p.maps[e]);
  j["maps"] = maps;
  return j.dump(2);
}

std::optional<RepPoint> rep_point_from_json(const FramedQuiver& fq,
                                            const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("dims") ||
      !j.contains("framing") || !j.contains("maps"))
    return std::nullopt;
  std::vector<int> dims = j["dims"], w = j["framing"];
  if (w != fq.w) return std::nullopt;
  RepPoint p = RepPoint::zero(RepSpaces::standard(fq, dims));
  for (std::size_t e = 0; e < p.maps.size(); ++e) {
    auto it = j["maps"].find(std::to_string(e));
    if (it == j["maps"].end()) return std::nullopt;
    auto m = matrix_from_json(*it);
    if (!m) return std::nullopt;
    p.maps[e] = *m;
  }
  try {
    p.validate();
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return p;
}

} // namespace dks

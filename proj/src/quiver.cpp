#include "dks/quiver.hpp"

#include <stdexcept>

namespace dks {

void QuiverSpec::validate() const {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto [t, h] : edges) {
    if (t < 1 || t > n || h < 1 || h > n)
      throw std::invalid_argument("edge endpoint out of range");
    if (t == h) throw std::invalid_argument("edge loops are not allowed");
  }
}

DoubledQuiver double_quiver(const QuiverSpec& q) {
  q.validate();
  DoubledQuiver d;
  d.base = q;
  int m = static_cast<int>(q.edges.size());
  d.edges.reserve(2 * m);
  for (int i = 0; i < m; ++i)
    d.edges.push_back({q.edges[i].first, q.edges[i].second, i, m + i, +1});
  for (int i = 0; i < m; ++i)
    d.edges.push_back({q.edges[i].second, q.edges[i].first, m + i, i, -1});
  return d;
}

CartanData cartan(const QuiverSpec& q) {
  q.validate();
  CartanData c;
  c.a = Matrix(q.n, q.n);
  for (auto [t, h] : q.edges) {
    // Each base edge contributes one arrow in each direction in the double.
    c.a.at(h - 1, t - 1) += 1;
    c.a.at(t - 1, h - 1) += 1;
  }
  c.c = Matrix::identity(q.n) * Rat(2) - c.a;
  return c;
}

bool is_finite_type(const CartanData& c) {
  for (int k = 1; k <= c.n(); ++k)
    if (c.c.block(0, 0, k, k).det() <= 0) return false;
  return true;
}

FramedQuiver frame(const QuiverSpec& q, const std::vector<int>& w) {
  q.validate();
  if (static_cast<int>(w.size()) != q.n)
    throw std::invalid_argument("framing vector length mismatch");
  FramedQuiver fq;
  fq.base = q;
  fq.w = w;
  fq.framed_base.n = q.n + 1;
  fq.framed_base.edges = q.edges;
  for (int k = 1; k <= q.n; ++k) {
    if (w[k - 1] < 0) throw std::invalid_argument("negative framing");
    for (int r = 0; r < w[k - 1]; ++r)
      fq.framed_base.edges.push_back({k, q.n + 1});
  }
  fq.doubled = double_quiver(fq.framed_base);
  return fq;
}

int FramedQuiver::framing_edge(int k, int r) const {
  int idx = base_edge_count();
  for (int l = 1; l < k; ++l) idx += w[l - 1];
  return idx + r;
}

std::vector<int> hat_dim(const std::vector<int>& v) {
  std::vector<int> h = v;
  h.push_back(1);
  return h;
}

std::vector<Rat> reflect_linear(const CartanData& c, int k,
                                const std::vector<Rat>& zeta) {
  if (k < 1 || k > c.n()) throw std::out_of_range("vertex out of range");
  if (static_cast<int>(zeta.size()) != c.n())
    throw std::invalid_argument("vector length mismatch");
  std::vector<Rat> out = zeta;
  for (int l = 0; l < c.n(); ++l)
    out[l] -= c.c.at(k - 1, l) * zeta[k - 1];
  return out;
}

std::vector<int> reflect_affine(const CartanData& c, const std::vector<int>& w,
                                int k, const std::vector<int>& v) {
  if (k < 1 || k > c.n()) throw std::out_of_range("vertex out of range");
  if (v.size() != w.size() || static_cast<int>(v.size()) != c.n())
    throw std::invalid_argument("vector length mismatch");
  std::vector<int> out = v;
  Rat s = 0;
  for (int l = 0; l < c.n(); ++l) s += c.c.at(k - 1, l) * v[l];
  Rat entry = Rat(v[k - 1]) - s + w[k - 1];
  out[k - 1] = static_cast<int>(numerator(entry).convert_to<long long>());
  return out;
}

std::vector<Rat> apply_word_linear(const CartanData& c, const WeylWord& word,
                                   const std::vector<Rat>& zeta) {
  std::vector<Rat> out = zeta;
  for (int k : word) out = reflect_linear(c, k, out);
  return out;
}

std::vector<int> apply_word_affine(const CartanData& c,
                                   const std::vector<int>& w,
                                   const WeylWord& word,
                                   const std::vector<int>& v) {
  std::vector<int> out = v;
  for (int k : word) out = reflect_affine(c, w, k, out);
  return out;
}

bool framing_equivariance_check(const QuiverSpec& q, const std::vector<int>& v,
                                const std::vector<int>& w, int k) {
  FramedQuiver fq = frame(q, w);
  CartanData base_c = cartan(q);
  CartanData framed_c = cartan(fq.framed_base);
  std::vector<int> zero_w(q.n + 1, 0);
  std::vector<int> lhs = reflect_affine(framed_c, zero_w, k, hat_dim(v));
  std::vector<int> rhs = hat_dim(reflect_affine(base_c, w, k, v));
  return lhs == rhs;
}

long long p_value(const FramedQuiver& fq, const std::vector<int>& alpha) {
  if (static_cast<int>(alpha.size()) != fq.base.n + 1)
    throw std::invalid_argument("alpha length mismatch");
  long long s = 1;
  for (auto [t, h] : fq.framed_base.edges)
    s += static_cast<long long>(alpha[t - 1]) * alpha[h - 1];
  for (int x : alpha) s -= static_cast<long long>(x) * x;
  return s;
}

} // namespace dks

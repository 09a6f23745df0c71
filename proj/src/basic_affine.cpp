#include "dks/basic_affine.hpp"

#include <stdexcept>

namespace dks {

namespace {

std::vector<Rat> diagonal_of(const Matrix& m) {
  std::vector<Rat> d;
  for (int i = 0; i < m.rows(); ++i) d.push_back(m.at(i, i));
  return d;
}

bool pairwise_distinct(const std::vector<Rat>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) return false;
  return true;
}

bool is_upper_triangular(const Matrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < i && j < m.cols(); ++j)
      if (m.at(i, j) != 0) return false;
  return true;
}

bool is_unipotent_upper(const Matrix& m) {
  if (!is_upper_triangular(m)) return false;
  for (int i = 0; i < m.rows(); ++i)
    if (m.at(i, i) != 1) return false;
  return true;
}

Matrix elementary(int size, int i, int j) {
  Matrix e(size, size);
  e.at(i, j) = 1;
  return e;
}

Matrix unvectorize(const Matrix& col, int size) {
  Matrix m(size, size);
  int idx = 0;
  for (int j = 0; j < size; ++j)
    for (int i = 0; i < size; ++i) m.at(i, j) = col.at(idx++, 0);
  return m;
}

// Bases of distinguished subspaces of sl(size), as lists of matrices.
std::vector<Matrix> sl_borel_basis(int size, bool lower) {
  std::vector<Matrix> basis;
  for (int i = 0; i + 1 < size; ++i) {
    Matrix h(size, size);
    h.at(i, i) = 1;
    h.at(i + 1, i + 1) = -1;
    basis.push_back(h);
  }
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if (lower ? i > j : i < j) basis.push_back(elementary(size, i, j));
  return basis;
}

std::vector<Matrix> nilradical_basis(int size, bool lower) {
  std::vector<Matrix> basis;
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if (lower ? i > j : i < j) basis.push_back(elementary(size, i, j));
  return basis;
}

// The lower Borel enlarged by the first superdiagonal.
std::vector<Matrix> d_of_lower_borel_basis(int size) {
  std::vector<Matrix> basis = sl_borel_basis(size, true);
  for (int i = 0; i + 1 < size; ++i)
    basis.push_back(elementary(size, i, i + 1));
  return basis;
}

Matrix span_columns(const Matrix& g, const std::vector<Matrix>& basis) {
  Matrix ginv = g.inverse();
  std::vector<Matrix> cols;
  for (const auto& b : basis) cols.push_back((g * b * ginv).vectorize());
  return Matrix::hstack(cols);
}

} // namespace

Matrix gamma(const Matrix& y) { return y.traceless(); }

QuiverSpec an_quiver(int n) {
  QuiverSpec q;
  q.n = n;
  for (int k = 1; k < n; ++k) q.edges.push_back({k, k + 1});
  return q;
}

RepSpaces an_spaces(int n) {
  std::vector<int> v(n), w(n, 0);
  for (int k = 0; k < n; ++k) v[k] = n - k;
  w[0] = n + 1;
  return RepSpaces::standard(frame(an_quiver(n), w), v);
}

RepPoint an_family_point(int n, const std::vector<Rat>& lambda) {
  if (static_cast<int>(lambda.size()) != n + 1)
    throw std::invalid_argument("lambda must have n+1 entries");
  std::vector<Rat> tau(n + 1); // tau[k] = lambda_k - lambda_{k-1}, k >= 1
  for (int k = 1; k <= n; ++k) tau[k] = lambda[k] - lambda[k - 1];

  // beta_l = (0 | I) and alpha_l = (0; C), with C the partial-sum diagonal.
  auto beta = [&](int l) {
    Matrix b(n - l, n + 1 - l);
    b.set_block(0, 1, Matrix::identity(n - l));
    return b;
  };
  auto alpha = [&](int l) {
    Matrix a(n + 1 - l, n - l);
    Rat acc = 0;
    for (int i = 0; i < n - l; ++i) {
      acc += tau[l + 1 + i];
      a.at(i + 1, i) = acc;
    }
    return a;
  };

  RepSpaces sp = an_spaces(n);
  UnframedData d;
  int m = sp.fq.base_edge_count(); // n - 1 path edges
  for (int e = 0; e < m; ++e) d.base_maps.push_back(beta(e + 1));
  for (int e = 0; e < m; ++e) d.base_maps.push_back(alpha(e + 1));
  d.i.assign(n, Matrix());
  d.j.assign(n, Matrix());
  d.i[0] = beta(0);
  d.j[0] = alpha(0);
  for (int k = 2; k <= n; ++k) {
    d.i[k - 1] = Matrix(sp.v[k - 1], 0);
    d.j[k - 1] = Matrix(0, sp.v[k - 1]);
  }
  return to_framed(sp, d);
}

CotangentPoint xi(const RepPoint& p) {
  int n = p.spaces.fq.base.n;
  UnframedData d = from_framed(p);
  auto beta_of = [&](int l) -> const Matrix& {
    return l == 0 ? d.i[0] : d.base_maps[l - 1];
  };

  // Reduce each beta to (0 | I) by unit-determinant row completions,
  // working down the chain of vertices.
  std::vector<Matrix> g(n + 1);
  g[n] = Matrix::identity(1);
  for (int k = n - 1; k >= 0; --k) {
    Matrix m = g[k + 1] * beta_of(k); // (n-k) x (n+1-k)
    int size = n + 1 - k;
    Matrix gk(size, size);
    gk.set_block(1, 0, m);
    bool found = false;
    for (int i = 0; i < size && !found; ++i) {
      gk.at(0, i) = 1;
      Rat det = gk.det();
      if (det != 0) {
        gk.at(0, i) = Rat(1) / det;
        found = true;
      } else {
        gk.at(0, i) = 0;
      }
    }
    if (!found)
      throw std::domain_error("xi: a beta map is not surjective");
    g[k] = gk;
  }

  Matrix x_raw = g[0] * (d.j[0] * d.i[0]) * g[0].inverse();
  if (!is_upper_triangular(x_raw))
    throw std::domain_error("xi: point is not on the level set");
  return {g[0].inverse(), gamma(x_raw)};
}

RepPoint xi_inverse(const Matrix& g, const Matrix& x_diagonal) {
  int size = x_diagonal.rows();
  int n = size - 1;
  std::vector<Rat> lambda = diagonal_of(x_diagonal);
  if (!pairwise_distinct(lambda))
    throw std::domain_error("xi_inverse: repeated diagonal entries");
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if (i != j && x_diagonal.at(i, j) != 0)
        throw std::invalid_argument("xi_inverse: x must be diagonal");

  RepPoint p = an_family_point(n, lambda);
  UnframedData d = from_framed(p);
  d.i[0] = d.i[0] * g.inverse();
  d.j[0] = g * d.j[0];
  return to_framed(p.spaces, d);
}

namespace {

// Unique unipotent u with u x = y u, where y is the diagonal of x plus a
// unit superdiagonal. Requires x upper triangular with distinct diagonal.
Matrix unipotent_normalizer(const Matrix& x) {
  int size = x.rows();
  std::vector<Rat> lam = diagonal_of(x);
  if (!pairwise_distinct(lam))
    throw std::domain_error("repeated diagonal entries");
  Matrix u = Matrix::identity(size);
  for (int i = size - 2; i >= 0; --i)
    for (int j = i + 1; j < size; ++j) {
      Rat rhs = i + 1 == j ? Rat(1) : u.at(i + 1, j);
      for (int k = i; k < j; ++k) rhs -= u.at(i, k) * x.at(k, j);
      u.at(i, j) = rhs / (lam[j] - lam[i]);
    }
  return u;
}

Matrix y_shape(const std::vector<Rat>& lam) {
  Matrix y = Matrix::diagonal(lam);
  for (int i = 0; i + 1 < y.rows(); ++i) y.at(i, i + 1) = 1;
  return y;
}

} // namespace

CanonicalCotangent canonical_form(const CotangentPoint& cp) {
  if (!is_upper_triangular(cp.x))
    throw std::invalid_argument("canonical_form: x must be upper triangular");
  Matrix u = unipotent_normalizer(cp.x);
  return {cp.g * u.inverse(), y_shape(diagonal_of(cp.x))};
}

bool canonical_equal_mod_torus(const CanonicalCotangent& c1,
                               const CanonicalCotangent& c2) {
  if (c1 == c2) return true;
  if (c1.y.rows() != c2.y.rows()) return false;
  if (diagonal_of(c1.y) != diagonal_of(c2.y)) return false;
  // A torus twist by t moves the canonical frame by an upper-triangular
  // factor whose diagonal is t^{-1}; read t off and verify exactly.
  Matrix b = c1.g.inverse() * c2.g;
  if (!is_upper_triangular(b)) return false;
  std::vector<Rat> t;
  for (int i = 0; i < b.rows(); ++i) {
    if (b.at(i, i) == 0) return false;
    t.push_back(Rat(1) / b.at(i, i));
  }
  Matrix tm = Matrix::diagonal(t);
  CanonicalCotangent twisted =
      canonical_form({c1.g * tm.inverse(), tm * c1.y * tm.inverse()});
  return twisted == c2;
}

Matrix w_k_matrix(const std::vector<Rat>& lambda, int k) {
  int size = static_cast<int>(lambda.size());
  Rat diff = lambda[k] - lambda[k - 1];
  if (diff == 0) throw std::domain_error("w_k_matrix: equal eigenvalues");
  Matrix w = Matrix::identity(size);
  w.at(k - 1, k - 1) = 0;
  w.at(k, k) = 0;
  w.at(k - 1, k) = Rat(1) / diff;
  w.at(k, k - 1) = -diff;
  return w;
}

CotangentPoint skcal_reflect(const CotangentPoint& cp, int k) {
  Matrix w = w_k_matrix(diagonal_of(cp.x), k);
  return {cp.g * w.inverse(), w * cp.x * w.inverse()};
}

Matrix u_from_x(const Matrix& x_diagonal) {
  for (int i = 0; i < x_diagonal.rows(); ++i)
    for (int j = 0; j < x_diagonal.cols(); ++j)
      if (i != j && x_diagonal.at(i, j) != 0)
        throw std::invalid_argument("u_from_x: x must be diagonal");
  return unipotent_normalizer(x_diagonal);
}

Matrix n_k_matrix(const std::vector<Rat>& lambda, int k) {
  Matrix n = Matrix::identity(static_cast<int>(lambda.size()));
  n.at(k, k - 1) = lambda[k] - lambda[k - 1];
  return n;
}

bool claim_check(const std::vector<Rat>& lambda, int k) {
  if (!pairwise_distinct(lambda))
    throw std::domain_error("claim_check: repeated eigenvalues");
  Matrix u = u_from_x(Matrix::diagonal(lambda));
  Matrix m =
      w_k_matrix(lambda, k) * u.inverse() * n_k_matrix(lambda, k) * u;
  return is_unipotent_upper(m);
}

Matrix p_k_matrix(int size, int k) {
  Matrix p = Matrix::identity(size);
  p.at(k - 1, k - 1) = 0;
  p.at(k, k) = 0;
  p.at(k - 1, k) = 1;
  p.at(k, k - 1) = -1;
  return p;
}

bool borel_span_equal(const Matrix& g1, const Matrix& g2, bool lower) {
  int size = g1.rows();
  Matrix s1 = span_columns(g1, sl_borel_basis(size, lower));
  Matrix s2 = span_columns(g2, sl_borel_basis(size, lower));
  int dim = s1.cols();
  return s1.rank() == dim && Matrix::hstack({s1, s2}).rank() == dim;
}

bool miura_invariants_ok(const MiuraTriple& mt) {
  int size = mt.gbar.rows();
  int n = size - 1;
  // Opposite position: the Borels intersect in a Cartan (dimension n in sl).
  Matrix s1 = span_columns(mt.gbar, sl_borel_basis(size, true));
  Matrix s2 = span_columns(mt.gb, sl_borel_basis(size, false));
  int inter = s1.rank() + s2.rank() - Matrix::hstack({s1, s2}).rank();
  if (inter != n) return false;
  // X lies in the upper Borel through gb...
  Matrix xb = mt.gb.inverse() * mt.X * mt.gb;
  if (!is_upper_triangular(xb)) return false;
  // ...and in the distinguished cone over the lower Borel through gbar:
  // lower triangular plus a nowhere-zero superdiagonal.
  Matrix y = mt.gbar.inverse() * mt.X * mt.gbar;
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      if (j == i + 1 ? y.at(i, j) == 0 : y.at(i, j) != 0) return false;
  return true;
}

MiuraTriple miura_of(const CotangentPoint& cp) {
  Matrix u = u_from_x(cp.x);
  MiuraTriple mt{cp.g * u.inverse(), cp.g, cp.g * cp.x * cp.g.inverse()};
  if (!miura_invariants_ok(mt))
    throw std::domain_error("miura_of: invariant violation");
  return mt;
}

MiuraTriple ggkr_reflect(const MiuraTriple& mt, int k) {
  return {mt.gbar, mt.gb * p_k_matrix(mt.gb.rows(), k), mt.X};
}

KappaResult kappa_map(const MiuraTriple& mt) {
  int size = mt.gbar.rows();
  Matrix s1 = span_columns(mt.gbar, d_of_lower_borel_basis(size));
  Matrix s2 = span_columns(mt.gb, nilradical_basis(size, false));
  // Intersection of the two subspaces, via the kernel of [s1 | -s2].
  Matrix ker = Matrix::hstack({s1, -s2}).kernel_basis();
  Matrix dint = s1 * ker.block(0, 0, s1.cols(), ker.cols());
  if (dint.cols() != size - 1)
    throw std::domain_error("kappa_map: unexpected intersection dimension");

  // The unique r in the intersection with r = X modulo the lower Borel.
  Matrix bbar = span_columns(mt.gbar, sl_borel_basis(size, true));
  auto coeffs = solve(Matrix::hstack({dint, bbar}), mt.X.vectorize());
  if (!coeffs) throw std::domain_error("kappa_map: no solution for r");
  Matrix r = unvectorize(dint * coeffs->block(0, 0, dint.cols(), 1), size);

  Matrix s = mt.gb.inverse() * r * mt.gb;
  for (int i = 0; i < size; ++i)
    for (int j = 0; j <= i; ++j)
      if (s.at(i, j) != 0)
        throw std::domain_error("kappa_map: r not in the nilradical");
  KappaResult res{mt.gb, {}, mt.X};
  for (int i = 0; i + 1 < size; ++i) {
    if (s.at(i, i + 1) == 0)
      throw std::domain_error("kappa_map: vanishing coordinate");
    res.s_coords.push_back(s.at(i, i + 1));
  }
  return res;
}

bool compare_actions(const Matrix& g, const Matrix& x_diagonal, int k) {
  std::vector<Rat> lambda = diagonal_of(x_diagonal);
  if (!pairwise_distinct(lambda))
    throw std::domain_error("compare_actions: repeated eigenvalues");
  CotangentPoint cp{g, x_diagonal};

  MiuraTriple lhs = ggkr_reflect(miura_of(cp), k);
  MiuraTriple rhs = miura_of(skcal_reflect(cp, k));

  bool ok = borel_span_equal(lhs.gbar, rhs.gbar, true) &&
            borel_span_equal(lhs.gb, rhs.gb, false) && lhs.X == rhs.X &&
            miura_invariants_ok(lhs) && miura_invariants_ok(rhs);
  // Both sides must also support the coordinate map with nonzero entries.
  KappaResult kl = kappa_map(lhs), kr = kappa_map(rhs);
  ok = ok && kl.s_coords.size() == kr.s_coords.size();
  return ok && claim_check(lambda, k);
}

} // namespace dks

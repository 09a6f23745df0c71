#include "dks/matrix.hpp"

#include <sstream>

namespace dks {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  a_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw std::invalid_argument("ragged initializer");
    for (const auto& x : r) a_.push_back(x);
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Rat>& d) {
  Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (int i = 0; i < m.rows_; ++i) m.at(i, i) = d[i];
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("shape mismatch in +");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("shape mismatch in -");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in *");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator*(const Rat& c) const {
  Matrix r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::block(int row0, int col0, int nrows, int ncols) const {
  if (row0 < 0 || col0 < 0 || row0 + nrows > rows_ || col0 + ncols > cols_)
    throw std::invalid_argument("block out of range");
  Matrix r(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) r.at(i, j) = at(row0 + i, col0 + j);
  return r;
}

void Matrix::set_block(int row0, int col0, const Matrix& m) {
  if (row0 + m.rows_ > rows_ || col0 + m.cols_ > cols_)
    throw std::invalid_argument("set_block out of range");
  for (int i = 0; i < m.rows_; ++i)
    for (int j = 0; j < m.cols_; ++j) at(row0 + i, col0 + j) = m.at(i, j);
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Rat Matrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square");
  Rat t = 0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Matrix Matrix::traceless() const {
  if (!is_square()) throw std::invalid_argument("traceless of non-square");
  if (rows_ == 0) return *this;
  Rat c = trace() / rows_;
  Matrix r = *this;
  for (int i = 0; i < rows_; ++i) r.at(i, i) -= c;
  return r;
}

namespace {

// Gauss-Jordan to reduced row echelon form; returns pivot column indices.
std::vector<int> rref_in_place(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv = Rat(1) / m.at(r, c);
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

int Matrix::rank() const {
  Matrix m = *this;
  return static_cast<int>(rref_in_place(m).size());
}

Rat Matrix::det() const {
  if (!is_square()) throw std::invalid_argument("det of non-square");
  Matrix m = *this;
  Rat d = 1;
  for (int c = 0; c < cols_; ++c) {
    int p = -1;
    for (int i = c; i < rows_; ++i)
      if (m.at(i, c) != 0) { p = i; break; }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    Rat inv = Rat(1) / m.at(c, c);
    for (int i = c + 1; i < rows_; ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) * inv;
      for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

Matrix Matrix::inverse() const {
  auto x = solve(*this, identity(rows_));
  if (!is_square() || !x) throw std::invalid_argument("singular matrix");
  return *x;
}

Matrix Matrix::kernel_basis() const {
  Matrix m = *this;
  std::vector<int> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  Matrix k(cols_, cols_ - static_cast<int>(pivots.size()));
  int out = 0;
  for (int j = 0; j < cols_; ++j) {
    if (is_pivot[j]) continue;
    k.at(j, out) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      k.at(pivots[i], out) = -m.at(static_cast<int>(i), j);
    ++out;
  }
  return k;
}

Matrix Matrix::hstack(const std::vector<Matrix>& ms) {
  int rows = ms.empty() ? 0 : ms[0].rows();
  int cols = 0;
  for (const auto& m : ms) {
    if (m.rows() != rows) throw std::invalid_argument("hstack row mismatch");
    cols += m.cols();
  }
  Matrix r(rows, cols);
  int c0 = 0;
  for (const auto& m : ms) {
    r.set_block(0, c0, m);
    c0 += m.cols();
  }
  return r;
}

Matrix Matrix::vstack(const std::vector<Matrix>& ms) {
  int cols = ms.empty() ? 0 : ms[0].cols();
  int rows = 0;
  for (const auto& m : ms) {
    if (m.cols() != cols) throw std::invalid_argument("vstack col mismatch");
    rows += m.rows();
  }
  Matrix r(rows, cols);
  int r0 = 0;
  for (const auto& m : ms) {
    r.set_block(r0, 0, m);
    r0 += m.rows();
  }
  return r;
}

Matrix Matrix::vectorize() const {
  Matrix v(rows_ * cols_, 1);
  int out = 0;
  for (int j = 0; j < cols_; ++j)
    for (int i = 0; i < rows_; ++i) v.at(out++, 0) = at(i, j);
  return v;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve row mismatch");
  Matrix aug = Matrix::hstack({a, b});
  std::vector<int> pivots = rref_in_place(aug);
  // Any pivot in the b-part means inconsistency.
  for (int c : pivots)
    if (c >= a.cols()) return std::nullopt;
  Matrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      x.at(pivots[i], j) = aug.at(static_cast<int>(i), a.cols() + j);
  return x;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < m.cols(); ++j)
      os << (j ? " " : "") << m.at(i, j).str();
  }
  os << "]";
  return os.str();
}

} // namespace dks

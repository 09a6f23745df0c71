#pragma once

#include "dks/matrix.hpp"
#include "dks/rational.hpp"

#include <cstdint>
#include <random>

namespace dks {

// Seeded generator for reproducible random instances. All randomness in the
// project flows through this wrapper; distributions are hand-rolled so
// streams are stable across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [lo, hi].
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Uniform integer in {-3,...,3}.
  Rat small_int() { return Rat(uniform(-3, 3)); }

  /// Uniform nonzero integer in {-3,...,3} \ {0}.
  Rat small_nonzero() {
    int v = uniform(-3, 2);
    return Rat(v >= 0 ? v + 1 : v);
  }

  /// Small rational p/q, p in {-3..3}, q in {1..3}.
  Rat small_rat() { return small_int() / uniform(1, 3); }

  Matrix matrix(int rows, int cols) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = small_int();
    return m;
  }

  /// Random invertible matrix with small integer entries.
  Matrix invertible(int n) {
    for (;;) {
      Matrix m = matrix(n, n);
      if (m.det() != 0) return m;
    }
  }

  /// Random element of SL(n) with rational entries: unit lower triangular
  /// times determinant-one diagonal times unit upper triangular.
  Matrix special_linear(int n) {
    Matrix l = Matrix::identity(n), u = Matrix::identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) {
        l.at(i, j) = small_rat();
        u.at(j, i) = small_rat();
      }
    Matrix d = Matrix::identity(n);
    Rat prod = 1;
    for (int i = 0; i + 1 < n; ++i) {
      d.at(i, i) = small_nonzero();
      prod *= d.at(i, i);
    }
    if (n > 0) d.at(n - 1, n - 1) = Rat(1) / prod;
    return l * d * u;
  }

 private:
  std::mt19937_64 eng_;
};

} // namespace dks

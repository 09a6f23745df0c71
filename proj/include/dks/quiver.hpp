#pragma once

#include "dks/matrix.hpp"

#include <utility>
#include <vector>

namespace dks {

// A finite loop-free directed graph. Vertices are 1..n.
struct QuiverSpec {
  int n = 0;
  std::vector<std::pair<int, int>> edges; // (tail, head)

  void validate() const;
};

// One arrow of a double quiver. `partner` is the index of the reversal,
// eps = +1 exactly on arrows of the base quiver.
struct DoubledEdge {
  int tail = 0, head = 0;
  int id = 0, partner = 0;
  int eps = 1;
};

struct DoubledQuiver {
  QuiverSpec base;
  std::vector<DoubledEdge> edges; // ids 0..m-1 forward, m..2m-1 reversed
};

// Crawley-Boevey framing: a fresh vertex (index n+1, "infinity") with w_k
// arrows k -> infinity, then the whole thing doubled.
struct FramedQuiver {
  QuiverSpec base;            // original quiver on 1..n
  std::vector<int> w;         // framing dimensions, length n
  QuiverSpec framed_base;     // on 1..n+1: base edges first, then framing
                              // edges grouped by vertex ascending
  DoubledQuiver doubled;      // double of framed_base

  int infinity() const { return base.n + 1; }
  int base_edge_count() const { return static_cast<int>(base.edges.size()); }
  /// Index into framed_base.edges of the r-th framing edge at vertex k.
  int framing_edge(int k, int r) const;
};

struct CartanData {
  Matrix a; // adjacency counted on the double quiver
  Matrix c; // 2I - a
  int n() const { return a.rows(); }
};

using WeylWord = std::vector<int>;

DoubledQuiver double_quiver(const QuiverSpec& q);
CartanData cartan(const QuiverSpec& q);

/// Finite (ADE) type test: C positive definite via leading principal minors.
bool is_finite_type(const CartanData& c);

FramedQuiver frame(const QuiverSpec& q, const std::vector<int>& w);

/// Appends the framing entry 1.
std::vector<int> hat_dim(const std::vector<int>& v);

/// Linear reflection: zeta'_l = zeta_l - C_kl zeta_k.
std::vector<Rat> reflect_linear(const CartanData& c, int k,
                                const std::vector<Rat>& zeta);

/// Affine reflection on dimension vectors: only entry k changes, to
/// v_k - sum_l C_kl v_l + w_k.
std::vector<int> reflect_affine(const CartanData& c, const std::vector<int>& w,
                                int k, const std::vector<int>& v);

enum class WordMode { Linear, Affine };
std::vector<Rat> apply_word_linear(const CartanData& c, const WeylWord& word,
                                   const std::vector<Rat>& zeta);
std::vector<int> apply_word_affine(const CartanData& c,
                                   const std::vector<int>& w,
                                   const WeylWord& word,
                                   const std::vector<int>& v);

/// Reflecting the framed dimension vector of (q, w) at k with zero framing
/// agrees with framing the w-affine reflection of v.
bool framing_equivariance_check(const QuiverSpec& q, const std::vector<int>& v,
                                const std::vector<int>& w, int k);

/// p(alpha) = 1 + sum over base arrows of the framed quiver of
/// alpha_tail * alpha_head, minus alpha^T alpha.
long long p_value(const FramedQuiver& fq, const std::vector<int>& alpha);

} // namespace dks

#pragma once

#include "dks/rep.hpp"

namespace dks {

// A point [g, x] of the cotangent bundle of SL(n+1)/U: det g = 1 and x
// upper triangular traceless, taken modulo the unipotent group U.
struct CotangentPoint {
  Matrix g, x;
  bool operator==(const CotangentPoint&) const = default;
};

// Canonical representative: y is diagonal (pairwise distinct) plus a unit
// superdiagonal; byte-equality of canonical forms decides point equality.
struct CanonicalCotangent {
  Matrix g, y;
  bool operator==(const CanonicalCotangent&) const = default;
};

// (Ad_gbar lower-Borel, Ad_gb upper-Borel, regular element X).
struct MiuraTriple {
  Matrix gbar, gb, X;
};

/// Trace-free projection gl(n+1) -> sl(n+1).
Matrix gamma(const Matrix& y);

/// The A_n path quiver with v = (n,...,1), w = (n+1,0,...,0).
QuiverSpec an_quiver(int n);
RepSpaces an_spaces(int n);

/// The explicit level-set point whose moment scalars are
/// tau_k = lambda_k - lambda_{k-1}; lambda has n+1 entries.
RepPoint an_family_point(int n, const std::vector<Rat>& lambda);

/// From a level-set point with all beta maps surjective to [g^{-1}, Gamma(X)].
CotangentPoint xi(const RepPoint& p);

/// Right inverse of xi up to canonical forms: builds the family point for
/// the diagonal of x and twists the framing by g.
RepPoint xi_inverse(const Matrix& g, const Matrix& x_diagonal);

/// Requires pairwise-distinct diagonal entries of x (upper triangular).
CanonicalCotangent canonical_form(const CotangentPoint& cp);

/// Equality of canonical forms up to the residual torus action
/// t . [g, x] = [g t^{-1}, t x t^{-1}]. Gauge orbits of level-set points
/// map onto torus orbits, so this is the right notion for orbit tests.
bool canonical_equal_mod_torus(const CanonicalCotangent& c1,
                               const CanonicalCotangent& c2);

/// The closed-form reflection matrix; identity outside rows/cols k-1, k
/// (0-based), where it is [[0, (l_k-l_{k-1})^{-1}], [l_{k-1}-l_k, 0]].
Matrix w_k_matrix(const std::vector<Rat>& lambda, int k);

/// S_k([g, x]) = [g W_k^{-1}, Ad_{W_k} x] for diagonal regular x.
CotangentPoint skcal_reflect(const CotangentPoint& cp, int k);

/// Unique unipotent u with Ad_u diag(lambda) = diag(lambda) + unit
/// superdiagonal.
Matrix u_from_x(const Matrix& x_diagonal);

/// Lower-unipotent n_k; its inverse is [[1,0],[l_{k-1}-l_k,1]] embedded.
Matrix n_k_matrix(const std::vector<Rat>& lambda, int k);

/// The unipotence certificate W_k u^{-1} n_k u in U.
bool claim_check(const std::vector<Rat>& lambda, int k);

/// Signed permutation [[0,1],[-1,0]] embedded at rows/cols k-1, k.
Matrix p_k_matrix(int size, int k);

MiuraTriple miura_of(const CotangentPoint& cp);

/// The reflection on Miura triples: (gbar, gb * P_k, X).
MiuraTriple ggkr_reflect(const MiuraTriple& mt, int k);

struct KappaResult {
  Matrix gb;
  std::vector<Rat> s_coords; // all nonzero
  Matrix X;
};
KappaResult kappa_map(const MiuraTriple& mt);

/// Miura-triple invariants: Borel pair in opposite position and the
/// distinguished-cone membership of X relative to the lower Borel.
bool miura_invariants_ok(const MiuraTriple& mt);

/// Borel subalgebras compared as subspaces: Ad_g1 b equals Ad_g2 b, where
/// b is the upper (lower = false) or lower (lower = true) standard Borel.
bool borel_span_equal(const Matrix& g1, const Matrix& g2, bool lower);

/// The central comparison: the reflection through P_k on Miura triples
/// agrees with the closed-form W_k reflection transported through miura_of.
bool compare_actions(const Matrix& g, const Matrix& x_diagonal, int k);

} // namespace dks

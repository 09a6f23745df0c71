#pragma once

#include "dks/quiver.hpp"
#include "dks/torsion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dks {

// Dimension and volume data for a point of the framed double quiver. The
// framing vertex always carries dimension 1 with the standard volume, and
// the framing spaces are used in their fixed standard bases.
struct RepSpaces {
  FramedQuiver fq;
  std::vector<int> v;             // dims at vertices 1..n
  std::vector<VolumeForm> sigma;  // volumes at vertices 1..n

  static RepSpaces standard(const FramedQuiver& fq, const std::vector<int>& v);

  int dim_at(int vertex) const { // vertex in 1..n+1
    return vertex == fq.infinity() ? 1 : v[vertex - 1];
  }
  VolumeForm volume_at(int vertex) const {
    return vertex == fq.infinity() ? VolumeForm::standard(1)
                                   : sigma[vertex - 1];
  }
};

struct RepPoint {
  RepSpaces spaces;
  std::vector<Matrix> maps; // indexed by doubled edge id

  static RepPoint zero(const RepSpaces& sp);
  void validate() const;
  bool operator==(const RepPoint& o) const {
    return spaces.v == o.spaces.v && maps == o.maps;
  }
};

// The unframed presentation (B, i, j): base-quiver edge maps plus per-vertex
// framing maps i_k: W_k -> V_k and j_k: V_k -> W_k.
struct UnframedData {
  std::vector<Matrix> base_maps; // indexed by doubled base edge id
  std::vector<Matrix> i, j;      // per vertex 1..n
};

RepPoint to_framed(const RepSpaces& sp, const UnframedData& d);
UnframedData from_framed(const RepPoint& p);

// Per-vertex moment map values; index n (0-based) is the framing vertex.
struct MomentValue {
  std::vector<Matrix> mu; // 1..n then infinity
  Rat total_trace() const;
};
MomentValue moment_map(const RepPoint& p);

struct TracelessMoment {
  std::vector<Matrix> tm;  // trace-free parts at vertices 1..n
  bool level_zero = false; // all trace-free parts vanish
  std::vector<Rat> lambda; // Tr mu_k / v_k (0 where v_k = 0)
};
TracelessMoment traceless_moment(const RepPoint& p);

// Per-vertex invertible matrices; the framing vertex is always fixed.
struct GaugeElement {
  std::vector<Matrix> g; // per vertex 1..n
};
RepPoint gauge_act(const GaugeElement& g, const RepPoint& p);

/// Canonical symplectic pairing of two tangent/point tuples on the same
/// spaces: sum over base edges of Tr(B_h B'_hbar) - Tr(B_hbar B'_h) plus the
/// framing term Tr(j i') - Tr(i j').
Rat symplectic_pair(const RepPoint& p, const RepPoint& q);

/// Product of edge maps along a composable path of doubled-edge ids
/// (applied right to left) from the framing vertex to itself; a scalar.
Rat path_invariant(const RepPoint& p, const std::vector<int>& edge_ids);

// a_k stacks the maps into vertex k, b_k concatenates the signed maps out of
// it; summands ordered by (tail vertex ascending with the framing vertex
// last, edge id ascending).
struct AkBk {
  Matrix a, b;
  std::vector<int> edge_order; // doubled edges with head k, in summand order
  VolumeForm t_vol;            // product volume of T_k in that order
};
AkBk assemble_ak_bk(const RepPoint& p, int k);

struct LocusMembership {
  bool in_surjective = false; // b_k surjective
  bool in_injective = false;  // a_k injective
};
LocusMembership locus_membership(const RepPoint& p, int k);

/// Rank of the differential of the trace-free moment map at p, computed on
/// the coordinate basis of the representation space.
int jacobian_rank(const RepPoint& p);

/// Random point with small integer entries on every doubled edge.
RepPoint random_rep_point(Rng& rng, const RepSpaces& sp);

// JSON (de)serialization; matrices as {"rows","cols","entries":["p/q",...]}.
std::string matrix_to_json_string(const Matrix& m);
std::optional<Matrix> matrix_from_json_string(const std::string& text);
std::string quiver_to_json(const QuiverSpec& q);
std::optional<QuiverSpec> quiver_from_json(const std::string& text);
std::string rep_point_to_json(const RepPoint& p);
std::optional<RepPoint> rep_point_from_json(const FramedQuiver& fq,
                                            const std::string& text);

} // namespace dks

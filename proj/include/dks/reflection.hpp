#pragma once

#include "dks/rep.hpp"

#include <string>

namespace dks {

struct ReflectionOutput {
  RepPoint point;
  int vertex = 0;
  Rat torsion_certificate = 1; // must be 1
};

/// Torsion-normalized reflection at vertex k. Requires a level-set point
/// with b_k surjective (and w = Cv so that ker b_k has dimension v_k).
/// Throws std::domain_error when the preconditions fail.
ReflectionOutput reflect(const RepPoint& p, int k);

struct ZkReport {
  bool untouched_edges_equal = false; // C1
  bool sequence_exact = false;        // C2, exactness
  bool torsion_one = false;           // C2, normalization
  bool multiplication_rule = false;   // C3
  bool ok() const {
    return untouched_edges_equal && sequence_exact && torsion_one &&
           multiplication_rule;
  }
};
ZkReport verify_zk(const RepPoint& p, const RepPoint& pprime, int k);

/// Left-to-right composition of reflect; throws with the failing prefix
/// in the message on an intermediate domain error.
RepPoint reflect_word(const RepPoint& p, const WeylWord& word);

/// The moment scalars transform by the linear Weyl action.
bool mu_weyl_check(const RepPoint& p, int k);

enum class Verdict { Equal, NotEqual, Inconclusive };
struct OrbitVerdict {
  Verdict value = Verdict::Inconclusive;
  std::string evidence;
};

struct OrbitOptions {
  int path_invariant_length = 6;
  bool an_family = false; // compare canonical SL(n+1) forms when applicable
};
OrbitVerdict orbit_equal(const RepPoint& p1, const RepPoint& p2,
                         const OrbitOptions& opts = {});

// Coxeter relation harness at trivial gauge group (all v_k = 1), where
// reflect is a genuine point map and relations are exact point equalities.
struct CoxeterReport {
  int samples = 0;
  int square_pass = 0;   // s_k s_k = id (both vertices of the pair)
  int commute_pass = 0;  // s_k s_l = s_l s_k when A_kl = 0
  int braid_pass = 0;    // s_k s_l s_k = s_l s_k s_l when A_kl = 1
  bool commuting_pair = false;
  bool all_pass() const {
    return square_pass == samples &&
           (commuting_pair ? commute_pass : braid_pass) == samples;
  }
};
CoxeterReport coxeter_suite(const QuiverSpec& q, const std::vector<int>& v,
                            const std::vector<int>& w, int k, int l,
                            int samples, Rng& rng);

/// Random level-set point for all-ones dimension vectors, rejected until
/// the moment scalars at the listed vertices are nonzero (and, for pairs,
/// with nonzero sum — the braid-check locus).
RepPoint sample_ones_point(Rng& rng, const RepSpaces& sp,
                           const std::vector<int>& nonzero_at,
                           bool distinct_sum = false);

/// Checks that w = Cv for the given quiver data.
bool dims_match_cartan(const QuiverSpec& q, const std::vector<int>& v,
                       const std::vector<int>& w);

} // namespace dks

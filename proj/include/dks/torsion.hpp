#pragma once

#include "dks/matrix.hpp"
#include "dks/rng.hpp"

#include <optional>

namespace dks {

// A volume form on Q^dim, stored as its value on the standard basis tuple.
struct VolumeForm {
  int dim = 0;
  Rat value = 1; // must stay nonzero

  static VolumeForm standard(int dim) { return {dim, Rat(1)}; }
  /// Product form on a direct sum, summands in the given order.
  static VolumeForm product(const std::vector<VolumeForm>& parts);
};

/// vol(v_1,...,v_dim) = value * det([v_1 | ... | v_dim]).
Rat volume_eval(const VolumeForm& vol, const Matrix& vectors_as_columns);

/// Exactness of 0 -> A --f--> B --g--> C -> 0:
/// g f = 0, f injective, g surjective, rank f + rank g = dim B.
bool is_exact_ses(const Matrix& f, const Matrix& g);

/// Torsion of an exact 0 -> A -> B -> C -> 0 of based spaces. A basis of A
/// standard for volA and one of C standard for volC are pushed/lifted into B
/// (A-block first, then lifted C-block) and evaluated against volB. The
/// result does not depend on the choice of lifts or standard bases.
Rat torsion_ses(const Matrix& f, const Matrix& g, const VolumeForm& volA,
                const VolumeForm& volB, const VolumeForm& volC);

// --- the two torsion lemmas and their corollary, checked by brute force ---

// Maps and shapes:
//   alpha: V->W, beta: V->X, gamma: V->Y, delta: W->Y, eps: X->Z, phi: Y->Z.
// Complex 1:  0 -> V --(alpha;beta;gamma)--> W+X+Y --[[delta,0,-1],[0,eps,phi]]--> Y+Z -> 0
// Complex 2:  0 -> V --(alpha;beta)--> W+X --(phi delta, eps)--> Z -> 0
struct La1Input {
  Matrix alpha, beta, gamma, delta, eps, phi;
  VolumeForm vV, vW, vX, vY, vZ;
};
struct La1Report {
  bool exact1 = false, exact2 = false, gamma_factors = false, sign_ok = false;
  Rat tau1 = 0, tau2 = 0;
  bool ok() const { return exact1 && exact2 && gamma_factors && sign_ok; }
};
La1Report check_lemma_la1(const La1Input& in);

// Maps and shapes:
//   alpha: V->W, beta: V->U, gamma: W->Y, delta: U->Y,
//   phi: U->X, rho: X->Z, eta: Y->Z.
// cx1: 0 -> V --(alpha;beta)--> W+U --(gamma,-delta)--> Y -> 0        torsion tau1
// cx2: 0 -> U --(phi;delta)--> X+Y --(rho,eta)--> Z -> 0              torsion tau2
// cx3: 0 -> V --(alpha;phi beta;delta beta)--> W+X+Y
//                     --[[gamma,0,-1],[0,rho,eta]]--> Y+Z -> 0        torsion tau3
struct La2Input {
  Matrix alpha, beta, gamma, delta, phi, rho, eta;
  VolumeForm vU, vV, vW, vX, vY, vZ;
};
struct La2Report {
  bool inputs_exact = false, composite_exact = false, product_ok = false;
  Rat tau1 = 0, tau2 = 0, tau3 = 0;
  bool ok() const { return inputs_exact && composite_exact && product_ok; }
};
La2Report check_lemma_la2(const La2Input& in);

// Reduced complex 0 -> V --(alpha;phi beta)--> W+X --(eta gamma, rho)--> Z -> 0,
// expected torsion (-1)^(dim Z dim Y + dim Y) tau1 tau2. Requires in addition
// gamma alpha = delta beta.
struct CorLaReport {
  bool precondition_ok = false, reduced_exact = false, torsion_ok = false;
  Rat tau_reduced = 0, predicted = 0;
  bool ok() const { return precondition_ok && reduced_exact && torsion_ok; }
};
CorLaReport check_corollary_la(const La2Input& in);

// Random exact instances for brute-force verification. Constructed so the
// exactness preconditions hold; dimensions are drawn in [0, max_dim].
La1Input random_la1_instance(Rng& rng, int max_dim);
La2Input random_la2_instance(Rng& rng, int max_dim);

} // namespace dks

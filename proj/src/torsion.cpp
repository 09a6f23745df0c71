#include "dks/torsion.hpp"

namespace dks {

VolumeForm VolumeForm::product(const std::vector<VolumeForm>& parts) {
  VolumeForm v{0, Rat(1)};
  for (const auto& p : parts) {
    v.dim += p.dim;
    v.value *= p.value;
  }
  return v;
}

Rat volume_eval(const VolumeForm& vol, const Matrix& vectors_as_columns) {
  if (vectors_as_columns.rows() != vol.dim ||
      vectors_as_columns.cols() != vol.dim)
    throw std::invalid_argument("volume_eval shape mismatch");
  return vol.value * vectors_as_columns.det();
}

bool is_exact_ses(const Matrix& f, const Matrix& g) {
  if (f.rows() != g.cols()) return false;
  if (!(g * f).is_zero()) return false;
  int rf = f.rank();
  int rg = g.rank();
  return rf == f.cols() && rg == g.rows() && rf + rg == f.rows();
}

Rat torsion_ses(const Matrix& f, const Matrix& g, const VolumeForm& volA,
                const VolumeForm& volB, const VolumeForm& volC) {
  if (volA.dim != f.cols() || volB.dim != f.rows() || volC.dim != g.rows())
    throw std::invalid_argument("torsion_ses volume shape mismatch");
  // Push the standard basis of A forward, lift the standard basis of C, and
  // measure the assembled basis of B. Dividing by the A- and C-volumes of
  // the standard bases makes the result independent of those choices.
  auto lift = solve(g, Matrix::identity(g.rows()));
  if (!lift) throw std::invalid_argument("torsion_ses: g not surjective");
  Rat d = Matrix::hstack({f, *lift}).det();
  return volB.value * d / (volA.value * volC.value);
}

namespace {

Rat sign_pow(long long e) { return e % 2 == 0 ? Rat(1) : Rat(-1); }

Rat random_volume_value(Rng& rng) {
  return rng.small_nonzero() / rng.uniform(1, 3);
}

} // namespace

La1Report check_lemma_la1(const La1Input& in) {
  La1Report rep;
  int dY = in.vY.dim, dZ = in.vZ.dim;

  Matrix f1 = Matrix::vstack({in.alpha, in.beta, in.gamma});
  Matrix g1(dY + dZ, in.alpha.rows() + in.beta.rows() + dY);
  g1.set_block(0, 0, in.delta);
  g1.set_block(0, in.alpha.rows() + in.beta.rows(), -Matrix::identity(dY));
  g1.set_block(dY, in.alpha.rows(), in.eps);
  g1.set_block(dY, in.alpha.rows() + in.beta.rows(), in.phi);

  Matrix f2 = Matrix::vstack({in.alpha, in.beta});
  Matrix g2 = Matrix::hstack({in.phi * in.delta, in.eps});

  rep.exact1 = is_exact_ses(f1, g1);
  rep.exact2 = is_exact_ses(f2, g2);
  rep.gamma_factors = in.gamma == in.delta * in.alpha;
  if (!(rep.exact1 && rep.exact2)) return rep;

  VolumeForm mid1 = VolumeForm::product({in.vW, in.vX, in.vY});
  VolumeForm end1 = VolumeForm::product({in.vY, in.vZ});
  VolumeForm mid2 = VolumeForm::product({in.vW, in.vX});
  rep.tau1 = torsion_ses(f1, g1, in.vV, mid1, end1);
  rep.tau2 = torsion_ses(f2, g2, in.vV, mid2, in.vZ);
  rep.sign_ok = rep.tau1 == sign_pow(1LL * dZ * dY + dY) * rep.tau2;
  return rep;
}

namespace {

// The long complex shared by the second lemma and its corollary:
// 0 -> V --(alpha; phi beta; delta beta)--> W+X+Y --[[gamma,0,-1],[0,rho,eta]]--> Y+Z -> 0
void la2_composite(const La2Input& in, Matrix& f3, Matrix& g3) {
  int dW = in.alpha.rows(), dX = in.phi.rows(), dY = in.gamma.rows(),
      dZ = in.rho.rows();
  f3 = Matrix::vstack({in.alpha, in.phi * in.beta, in.delta * in.beta});
  g3 = Matrix(dY + dZ, dW + dX + dY);
  g3.set_block(0, 0, in.gamma);
  g3.set_block(0, dW + dX, -Matrix::identity(dY));
  g3.set_block(dY, dW, in.rho);
  g3.set_block(dY, dW + dX, in.eta);
}

} // namespace

La2Report check_lemma_la2(const La2Input& in) {
  La2Report rep;
  Matrix f1 = Matrix::vstack({in.alpha, in.beta});
  Matrix g1 = Matrix::hstack({in.gamma, -in.delta});
  Matrix f2 = Matrix::vstack({in.phi, in.delta});
  Matrix g2 = Matrix::hstack({in.rho, in.eta});
  Matrix f3, g3;
  la2_composite(in, f3, g3);

  rep.inputs_exact = is_exact_ses(f1, g1) && is_exact_ses(f2, g2);
  rep.composite_exact = is_exact_ses(f3, g3);
  if (!(rep.inputs_exact && rep.composite_exact)) return rep;

  rep.tau1 = torsion_ses(f1, g1, in.vV,
                         VolumeForm::product({in.vW, in.vU}), in.vY);
  rep.tau2 = torsion_ses(f2, g2, in.vU,
                         VolumeForm::product({in.vX, in.vY}), in.vZ);
  rep.tau3 = torsion_ses(f3, g3, in.vV,
                         VolumeForm::product({in.vW, in.vX, in.vY}),
                         VolumeForm::product({in.vY, in.vZ}));
  rep.product_ok = rep.tau3 == rep.tau1 * rep.tau2;
  return rep;
}

CorLaReport check_corollary_la(const La2Input& in) {
  CorLaReport rep;
  rep.precondition_ok = in.gamma * in.alpha == in.delta * in.beta;
  Matrix f = Matrix::vstack({in.alpha, in.phi * in.beta});
  Matrix g = Matrix::hstack({in.eta * in.gamma, in.rho});
  rep.reduced_exact = is_exact_ses(f, g);
  if (!(rep.precondition_ok && rep.reduced_exact)) return rep;

  La2Report full = check_lemma_la2(in);
  rep.tau_reduced = torsion_ses(f, g, in.vV,
                                VolumeForm::product({in.vW, in.vX}), in.vZ);
  int dY = in.vY.dim, dZ = in.vZ.dim;
  rep.predicted = sign_pow(1LL * dZ * dY + dY) * full.tau1 * full.tau2;
  rep.torsion_ok = rep.tau_reduced == rep.predicted;
  return rep;
}

La1Input random_la1_instance(Rng& rng, int max_dim) {
  for (;;) {
    int dW = rng.uniform(0, max_dim), dX = rng.uniform(0, max_dim);
    int dY = rng.uniform(0, max_dim), dZ = rng.uniform(0, max_dim);
    int dV = dW + dX - dZ;
    if (dV < 0 || dV > 2 * max_dim) continue;

    Matrix delta = rng.matrix(dY, dW);
    Matrix eps = rng.matrix(dZ, dX);
    Matrix phi = rng.matrix(dZ, dY);

    Matrix g1(dY + dZ, dW + dX + dY);
    g1.set_block(0, 0, delta);
    g1.set_block(0, dW + dX, -Matrix::identity(dY));
    g1.set_block(dY, dW, eps);
    g1.set_block(dY, dW + dX, phi);
    if (g1.rank() != dY + dZ) continue;

    // Any change of basis of ker(g1) gives a valid injection; the free
    // choice keeps alpha away from echelon-shaped special cases.
    Matrix f1 = g1.kernel_basis() * rng.invertible(dV);

    La1Input in;
    in.alpha = f1.block(0, 0, dW, dV);
    in.beta = f1.block(dW, 0, dX, dV);
    in.gamma = f1.block(dW + dX, 0, dY, dV);
    in.delta = delta;
    in.eps = eps;
    in.phi = phi;
    in.vV = {dV, random_volume_value(rng)};
    in.vW = {dW, random_volume_value(rng)};
    in.vX = {dX, random_volume_value(rng)};
    in.vY = {dY, random_volume_value(rng)};
    in.vZ = {dZ, random_volume_value(rng)};
    return in;
  }
}

La2Input random_la2_instance(Rng& rng, int max_dim) {
  for (;;) {
    int dV = rng.uniform(0, max_dim), dU = rng.uniform(0, max_dim);
    int dY = rng.uniform(0, max_dim), dZ = rng.uniform(0, max_dim);
    int dW = dV + dY - dU;
    int dX = dU + dZ - dY;
    if (dW < 0 || dW > max_dim || dX < 0 || dX > max_dim) continue;

    // cx1 from a random automorphism of W+U: columns of M give the image of
    // V, bottom rows of M^-1 the projection to Y.
    Matrix m = rng.invertible(dW + dU);
    Matrix minv = m.inverse();
    Matrix f1 = m.block(0, 0, dW + dU, dV);
    Matrix g1 = minv.block(dV, 0, dY, dW + dU);

    La2Input in;
    in.alpha = f1.block(0, 0, dW, dV);
    in.beta = f1.block(dW, 0, dU, dV);
    in.gamma = g1.block(0, 0, dY, dW);
    in.delta = -g1.block(0, dW, dY, dU);

    // cx2 reuses delta; phi must complete it to an injection of U.
    bool found = false;
    for (int attempt = 0; attempt < 20 && !found; ++attempt) {
      in.phi = rng.matrix(dX, dU);
      Matrix f2 = Matrix::vstack({in.phi, in.delta});
      if (f2.rank() != dU) continue;
      // Rows annihilating the image of f2, mixed by a random change of basis.
      Matrix n = f2.transpose().kernel_basis().transpose();
      Matrix l = rng.invertible(dZ) * n;
      in.rho = l.block(0, 0, dZ, dX);
      in.eta = l.block(0, dX, dZ, dY);
      found = true;
    }
    if (!found) continue;

    in.vU = {dU, random_volume_value(rng)};
    in.vV = {dV, random_volume_value(rng)};
    in.vW = {dW, random_volume_value(rng)};
    in.vX = {dX, random_volume_value(rng)};
    in.vY = {dY, random_volume_value(rng)};
    in.vZ = {dZ, random_volume_value(rng)};
    return in;
  }
}

} // namespace dks

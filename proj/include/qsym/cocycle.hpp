#pragma once

#include "qsym/theta.hpp"

namespace qsym {

struct NotInStabilizer : std::runtime_error {
  NotInStabilizer() : std::runtime_error("permutation does not stabilize the degree vector") {}
};

/// vartheta_r(sigma, tau) = prod over inversions i<j, sigma(i)>sigma(j) of
/// omega_{tau^-1(j), tau^-1(i)}^{r_{sigma(i)} r_{sigma(j)}}.
Phase theta_cocycle(const ThetaMatrix& theta, const IntVector& r, const Perm& sigma,
                    const Perm& tau);

/// psi~_r(tau, sigma), the comultiplication phase on component pairs.
Phase psi_tilde(const ThetaMatrix& theta, const IntVector& r, const Perm& tau,
                const Perm& sigma);

/// Same phase written as a product over inversion pairs of tau^-1; used to
/// cross-check psi_tilde.
Phase psi_tilde_alt(const ThetaMatrix& theta, const IntVector& r, const Perm& tau,
                    const Perm& sigma);

/// phi_r(sigma) = conj(vartheta_r(sigma, e)) for sigma in the stabilizer H_r.
/// Throws NotInStabilizer otherwise.
Phase phi_r(const ThetaMatrix& theta, const IntVector& r, const Perm& sigma);

/// psi_r(sigma, tau) = psi~_r(sigma, sigma tau) for sigma, tau in H_r, the
/// 2-cocycle twisting the stabilizer.  Throws NotInStabilizer otherwise.
Phase psi_cocycle(const ThetaMatrix& theta, const IntVector& r, const Perm& sigma,
                  const Perm& tau);

}  // namespace qsym

#pragma once

#include "qsym/multi.hpp"

namespace qsym {

/// Haar state h(x_sigma^r) = (1/n!) delta_{r,0}.
Cyclo haar(const MultiElement& a);

/// (id (x) h) and (h (x) id) slices of an element of A (x) A.
MultiElement apply_id_haar(const TensorMM& t);
MultiElement apply_haar_id(const TensorMM& t);

/// Counit slices.
MultiElement apply_id_counit(const TensorMM& t);
MultiElement apply_counit_id(const TensorMM& t);
TorusElement apply_id_counit(const TensorTM& t);

/// Coaction alpha: Poly(T_theta^n) -> Poly(T_theta^n) (x) A, the *-homomorphic
/// extension of alpha(x_k) = sum_i x_i (x) u_ik.
TensorTM alpha(const TorusElement& b);

/// Single-sum closed form alpha(x^r) = sum_tau phase(tau, r) x^{tau^-1 r} (x)
/// u_{tau^-1}^{tau^-1 r}.  The published phase is phi_r(tau) psi~_r(tau, e)
/// with phi_r(tau) = conj(vartheta_r(tau, e)); pass conjugate=false to use
/// vartheta_r(tau, e) itself.  The haar suite reports which variant agrees
/// with the homomorphic path.
TensorTM alpha_closed_form(const TorusElement& b, bool conjugate = true);

/// (alpha (x) id) and (id (x) delta) applied to an element of B (x) A, and
/// (delta (x) id), (id (x) delta) on A (x) A; used for compatibility checks.
Tensor3TMM apply_alpha_id(const TensorTM& t);
Tensor3TMM apply_id_delta(const TensorTM& t);
Tensor3MMM apply_delta_id(const TensorMM& t);
Tensor3MMM apply_id_delta(const TensorMM& t);

/// m (kappa (x) id) and m (id (x) kappa) collapses of A (x) A.
MultiElement collapse_kappa_id(const TensorMM& t);
MultiElement collapse_id_kappa(const TensorMM& t);

}  // namespace qsym

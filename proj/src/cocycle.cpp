#include "qsym/cocycle.hpp"

namespace qsym {

Phase theta_cocycle(const ThetaMatrix& theta, const IntVector& r, const Perm& sigma,
                    const Perm& tau) {
  int n = theta.degree();
  if ((int)r.size() != n || sigma.degree() != n || tau.degree() != n)
    throw DegreeMismatch();
  Perm ti = tau.inverse();
  Rational q;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (sigma.apply(i) <= sigma.apply(j)) continue;
      Int e = Int(r[sigma.apply(i) - 1]) * Int(r[sigma.apply(j) - 1]);
      q += theta.at(ti.apply(j), ti.apply(i)) * Rational(e);
    }
  return Phase(q);
}

Phase psi_tilde(const ThetaMatrix& theta, const IntVector& r, const Perm& tau,
                const Perm& sigma) {
  int n = theta.degree();
  if ((int)r.size() != n || sigma.degree() != n || tau.degree() != n)
    throw DegreeMismatch();
  Perm si = sigma.inverse();
  Rational q;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (tau.apply(i) <= tau.apply(j)) continue;
      Int e = Int(r[tau.apply(i) - 1]) * Int(r[tau.apply(j) - 1]);
      q += (theta.at(i, j) + theta.at(si.apply(tau.apply(j)), si.apply(tau.apply(i)))) *
           Rational(e);
    }
  return Phase(q);
}

Phase psi_tilde_alt(const ThetaMatrix& theta, const IntVector& r, const Perm& tau,
                    const Perm& sigma) {
  int n = theta.degree();
  Perm ti = tau.inverse();
  Perm si = sigma.inverse();
  Rational q;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (ti.apply(i) <= ti.apply(j)) continue;
      Int e = Int(r[i - 1]) * Int(r[j - 1]);
      q += (theta.at(ti.apply(j), ti.apply(i)) + theta.at(si.apply(i), si.apply(j))) *
           Rational(e);
    }
  return Phase(q);
}

Phase phi_r(const ThetaMatrix& theta, const IntVector& r, const Perm& sigma) {
  if (sigma.act(r) != r) throw NotInStabilizer();
  return theta_cocycle(theta, r, sigma, Perm::identity(sigma.degree())).conj();
}

Phase psi_cocycle(const ThetaMatrix& theta, const IntVector& r, const Perm& sigma,
                  const Perm& tau) {
  if (sigma.act(r) != r || tau.act(r) != r) throw NotInStabilizer();
  return theta_cocycle(theta, r, sigma, Perm::identity(sigma.degree())).conj() *
         theta_cocycle(theta, r, sigma, tau);
}

}  // namespace qsym

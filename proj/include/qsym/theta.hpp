#pragma once

#include "qsym/cyclo.hpp"
#include "qsym/perm.hpp"

#include <map>
#include <memory>

namespace qsym {

struct ThetaMismatch : std::runtime_error {
  ThetaMismatch() : std::runtime_error("elements live over different deformation data") {}
};

/// Skew-symmetric rational deformation matrix.
class ThetaMatrix {
public:
  ThetaMatrix() = default;
  static ThetaMatrix zero(int n);
  /// Throws std::invalid_argument unless entries are skew-symmetric.
  static ThetaMatrix from_entries(std::vector<std::vector<Rational>> entries);

  int degree() const { return n_; }
  const Rational& at(int i, int j) const { return e_[i - 1][j - 1]; }  // 1-based

  /// Phase omega_ij = e^{2 pi i theta_ij}.
  Phase omega(int i, int j) const { return Phase(at(i, j)); }

  friend bool operator==(const ThetaMatrix& a, const ThetaMatrix& b) {
    return a.e_ == b.e_;
  }

private:
  int n_ = 0;
  std::vector<std::vector<Rational>> e_;
};

/// theta^(sigma)_ij = theta_ji + theta_{sigma^-1(i), sigma^-1(j)}.
ThetaMatrix theta_sigma(const ThetaMatrix& theta, const Perm& sigma);

/// Smallest conductor N with all theta entries and all extra integers dividing it.
long conductor_for(const ThetaMatrix& theta, const std::vector<long>& extra);

/// Phase rho_theta(r, s) with x^r x^s = rho x^{r+s} in canonical order.
Phase reorder_phase(const ThetaMatrix& theta, const IntVector& r, const IntVector& s);

/// Phase c_theta(r) with (x^r)^* = c x^{-r}.
Phase star_phase(const ThetaMatrix& theta, const IntVector& r);

/// One computation session: degree, deformation matrix, the shared cyclotomic
/// field, and the cached component matrices theta^(sigma).
class Context {
public:
  static std::shared_ptr<const Context> make(ThetaMatrix theta, long extra_conductor = 1);

  int n() const { return n_; }
  const ThetaMatrix& theta() const { return theta_; }
  long conductor() const { return field_->conductor(); }
  const CycloField* field() const { return field_; }

  const ThetaMatrix& theta_of(const Perm& sigma) const;
  Cyclo cyclo(const Phase& p) const { return Cyclo::from_phase(field_, p); }
  Cyclo scalar(const Rational& r) const { return Cyclo(field_, r); }
  Cyclo one() const { return Cyclo::one(field_); }
  Cyclo zero() const { return Cyclo(field_); }

private:
  int n_;
  ThetaMatrix theta_;
  const CycloField* field_;
  mutable std::map<std::vector<int>, ThetaMatrix> sigma_cache_;
};

using ContextPtr = std::shared_ptr<const Context>;

}  // namespace qsym

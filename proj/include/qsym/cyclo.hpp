#pragma once

#include "qsym/phase.hpp"
#include "qsym/rational.hpp"

#include <complex>
#include <memory>
#include <vector>

namespace qsym {

struct ConductorMismatch : std::runtime_error {
  ConductorMismatch() : std::runtime_error("cyclotomic conductor mismatch") {}
};
struct NonEmbeddablePhase : std::runtime_error {
  NonEmbeddablePhase(const std::string& what) : std::runtime_error(what) {}
};

/// The cyclotomic field Q(zeta_N) presented as Q[X]/(Phi_N).  Holds the
/// reduction data shared by all Cyclo values of one session: Phi_N and the
/// expansion of every zeta_N^m, 0 <= m < N, in the power basis.
class CycloField {
public:
  static const CycloField* get(long N);  // cached, never freed

  long conductor() const { return N_; }
  long degree() const { return phi_; }
  const std::vector<Rational>& zeta_power(long m) const;  // m taken mod N

private:
  explicit CycloField(long N);
  long N_;
  long phi_;
  std::vector<Int> phi_poly_;                     // Phi_N, monic, degree phi_
  std::vector<std::vector<Rational>> power_tab_;  // zeta^m in power basis
  friend class Cyclo;
};

/// Exact element of Q(zeta_N) in canonical (reduced) power-basis form.
class Cyclo {
public:
  Cyclo() : field_(nullptr) {}
  explicit Cyclo(const CycloField* f) : field_(f), c_(f->degree()) {}
  Cyclo(const CycloField* f, const Rational& r) : Cyclo(f) { c_[0] = r; }

  static Cyclo zeta_pow(const CycloField* f, long k);
  static Cyclo from_phase(const CycloField* f, const Phase& p);
  static Cyclo one(const CycloField* f) { return Cyclo(f, Rational(1)); }

  const CycloField* field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_part() const { return c_.empty() ? Rational() : c_[0]; }

  Cyclo operator-() const;
  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  Cyclo conj() const;
  Cyclo inv() const;  // throws DivisionByZero on 0

  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  std::complex<double> to_complex() const;
  std::string str() const;

private:
  void check_same(const Cyclo& o) const {
    if (field_ != o.field_) throw ConductorMismatch();
  }
  const CycloField* field_;
  std::vector<Rational> c_;
};

}  // namespace qsym

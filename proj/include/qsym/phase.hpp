#pragma once

#include "qsym/rational.hpp"

namespace qsym {

/// Unit complex number e^{2*pi*i*q} stored by its exponent q in [0,1).
class Phase {
public:
  Phase() : q_() {}
  explicit Phase(Rational q) : q_(q.mod1()) {}

  const Rational& q() const { return q_; }
  bool is_one() const { return q_.is_zero(); }

  friend Phase operator*(const Phase& a, const Phase& b) { return Phase(a.q_ + b.q_); }
  Phase& operator*=(const Phase& o) { return *this = *this * o; }

  Phase pow(const Int& k) const { return Phase(Rational(k) * q_); }
  Phase conj() const { return Phase(-q_); }

  friend bool operator==(const Phase& a, const Phase& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Phase& a, const Phase& b) { return !(a == b); }

  std::string str() const { return "e(" + q_.str() + ")"; }

private:
  Rational q_;
};

}  // namespace qsym

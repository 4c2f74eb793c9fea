#pragma once

#include "qsym/theta.hpp"

#include <random>

namespace qsym::testutil {

inline ThetaMatrix make_theta2(const Rational& t12) {
  std::vector<std::vector<Rational>> e(2, std::vector<Rational>(2));
  e[0][1] = t12;
  e[1][0] = -t12;
  return ThetaMatrix::from_entries(e);
}

inline ThetaMatrix make_theta3(const Rational& t12, const Rational& t13,
                               const Rational& t23) {
  std::vector<std::vector<Rational>> e(3, std::vector<Rational>(3));
  e[0][1] = t12;
  e[1][0] = -t12;
  e[0][2] = t13;
  e[2][0] = -t13;
  e[1][2] = t23;
  e[2][1] = -t23;
  return ThetaMatrix::from_entries(e);
}

inline ContextPtr ctx2(const Rational& t12) {
  return Context::make(make_theta2(t12));
}

inline ContextPtr ctx3(const Rational& t12, const Rational& t13, const Rational& t23) {
  return Context::make(make_theta3(t12, t13, t23), 3);
}

inline ContextPtr ctx2_default() { return ctx2(Rational(Int(1), Int(3))); }

inline ContextPtr ctx3_default() {
  return ctx3(Rational(Int(1), Int(3)), Rational(Int(1), Int(4)), Rational(Int(1), Int(6)));
}

/// Random degree vector with entries in [-bound, bound].
inline IntVector random_vec(std::mt19937& rng, int n, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntVector r(n);
  for (auto& x : r) x = d(rng);
  return r;
}

}  // namespace qsym::testutil

#include <doctest.h>

#include "qsym/cocycle.hpp"
#include "test_util.hpp"

using namespace qsym;
using namespace qsym::testutil;

namespace {
Rational R(long a, long b = 1) { return Rational(Int(a), Int(b)); }
}  // namespace

TEST_CASE("trivial deformation gives trivial phases") {
  ThetaMatrix z = ThetaMatrix::zero(3);
  for (const auto& s : all_perms(3))
    for (const auto& t : all_perms(3)) {
      CHECK(theta_cocycle(z, {2, 1, 0}, s, t).is_one());
      CHECK(psi_tilde(z, {2, 1, 0}, s, t).is_one());
    }
}

TEST_CASE("identity has no inversions") {
  auto th = make_theta3(R(1, 3), R(1, 4), R(1, 6));
  for (const auto& t : all_perms(3))
    CHECK(theta_cocycle(th, {2, -1, 1}, Perm::identity(3), t).is_one());
}

TEST_CASE("psi_tilde matches its inversion-product form") {
  auto th = make_theta3(R(1, 3), R(1, 4), R(1, 6));
  for (IntVector r : {IntVector{1, 1, 0}, IntVector{2, 1, 0}, IntVector{1, 1, 1},
                      IntVector{2, 2, 1}, IntVector{1, 0, -1}})
    for (const auto& tau : all_perms(3))
      for (const auto& sigma : all_perms(3))
        CHECK(psi_tilde(th, r, tau, sigma) == psi_tilde_alt(th, r, tau, sigma));
}

TEST_CASE("comultiplication phase normalization") {
  auto th = make_theta3(R(1, 3), R(1, 4), R(1, 6));
  IntVector r{2, 1, -1};
  for (const auto& sigma : all_perms(3)) {
    CHECK(psi_tilde(th, r, Perm::identity(3), sigma).is_one());
    CHECK(psi_tilde(th, r, sigma, sigma).is_one());
  }
}

TEST_CASE("phi_r is only defined on the stabilizer") {
  auto th = make_theta2(R(1, 3));
  Perm s = Perm::from_one_line({2, 1});
  CHECK_THROWS_AS(phi_r(th, {2, 1}, s), NotInStabilizer);
  CHECK(phi_r(th, {2, 1}, Perm::identity(2)).is_one());
  CHECK(phi_r(th, {1, 1}, s) == theta_cocycle(th, {1, 1}, s, Perm::identity(2)).conj());
}

TEST_CASE("psi_r is a normalized 2-cocycle on the stabilizer") {
  auto th = make_theta3(R(1, 3), R(1, 4), R(1, 6));
  for (IntVector r : {IntVector{1, 1, 0}, IntVector{1, 1, 1}, IntVector{2, 2, 1}}) {
    Subgroup h = stabilizer(r, 3);
    for (const auto& s : h.elements()) {
      CHECK(psi_cocycle(th, r, Perm::identity(3), s).is_one());
      CHECK(psi_cocycle(th, r, s, Perm::identity(3)).is_one());
      for (const auto& t : h.elements()) {
        CHECK(psi_cocycle(th, r, s, t) == psi_tilde(th, r, s, s * t));
        for (const auto& u : h.elements())
          CHECK(psi_cocycle(th, r, s, t) * psi_cocycle(th, r, s * t, u) ==
                psi_cocycle(th, r, t, u) * psi_cocycle(th, r, s, t * u));
      }
    }
  }
  Perm c = Perm::from_one_line({2, 3, 1});
  CHECK_THROWS_AS(psi_cocycle(th, {2, 1, 0}, c, c), NotInStabilizer);
}

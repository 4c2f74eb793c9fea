#include <doctest.h>

#include "qsym/haar.hpp"
#include "qsym/multi.hpp"
#include "test_util.hpp"

#include <random>

using namespace qsym;
using namespace qsym::testutil;

namespace {
Rational R(long a, long b = 1) { return Rational(Int(a), Int(b)); }

MultiElement random_elem(const ContextPtr& ctx, std::mt19937& rng) {
  auto perms = all_perms(ctx->n());
  std::uniform_int_distribution<size_t> pick(0, perms.size() - 1);
  MultiElement out(ctx);
  for (int t = 0; t < 2; ++t)
    out = out + MultiElement::monomial(ctx, perms[pick(rng)], random_vec(rng, ctx->n(), 2));
  return out;
}
}  // namespace

TEST_CASE("component deformation matrices") {
  auto th = make_theta2(R(1, 3));
  CHECK(theta_sigma(th, Perm::identity(2)) == ThetaMatrix::zero(2));
  Perm s = Perm::from_one_line({2, 1});
  CHECK(theta_sigma(th, s).at(1, 2) == th.at(2, 1) * R(2));
}

TEST_CASE("assembled generators at n=2") {
  auto ctx = ctx2_default();
  Perm e = Perm::identity(2), s = Perm::from_one_line({2, 1});
  CHECK(MultiElement::u_gen(ctx, 1, 1) == MultiElement::x_gen(ctx, e, 1));
  CHECK(MultiElement::u_gen(ctx, 1, 2) == MultiElement::x_gen(ctx, s, 1));
  CHECK(MultiElement::u_gen(ctx, 1, 1) * MultiElement::u_gen(ctx, 2, 2) ==
        MultiElement::monomial(ctx, e, {1, 1}));
}

TEST_CASE("projections resolve the identity") {
  auto ctx = ctx3_default();
  MultiElement sum(ctx);
  for (const auto& sigma : all_perms(3)) {
    sum = sum + MultiElement::p_sigma(ctx, sigma);
    for (const auto& tau : all_perms(3)) {
      MultiElement prod = MultiElement::p_sigma(ctx, sigma) * MultiElement::p_sigma(ctx, tau);
      if (sigma == tau)
        CHECK(prod == MultiElement::p_sigma(ctx, sigma));
      else
        CHECK(prod.is_zero());
    }
  }
  CHECK(sum == MultiElement::unit(ctx));
  // projections are central
  std::mt19937 rng(17);
  for (int t = 0; t < 20; ++t) {
    MultiElement a = random_elem(ctx, rng);
    MultiElement p = MultiElement::p_sigma(ctx, all_perms(3)[t % 6]);
    CHECK(p * a == a * p);
  }
}

TEST_CASE("cross components annihilate") {
  auto ctx = ctx2_default();
  Perm e = Perm::identity(2), s = Perm::from_one_line({2, 1});
  CHECK((MultiElement::x_gen(ctx, e, 1) * MultiElement::x_gen(ctx, s, 2)).is_zero());
  CHECK((MultiElement::p_sigma(ctx, e) * MultiElement::x_gen(ctx, s, 1)).is_zero());
}

TEST_CASE("monomials equal their generator products") {
  for (auto ctx : {ctx2_default(), ctx3_default()}) {
    long bound = ctx->n() == 2 ? 2 : 1;
    for (const auto& sigma : all_perms(ctx->n())) {
      std::vector<IntVector> vecs{{}};
      for (int i = 0; i < ctx->n(); ++i) {
        std::vector<IntVector> next;
        for (const auto& v : vecs)
          for (long x = -bound; x <= bound; ++x) {
            IntVector w = v;
            w.push_back(x);
            next.push_back(w);
          }
        vecs = std::move(next);
      }
      for (const auto& r : vecs)
        CHECK(MultiElement::u_monomial_by_generators(ctx, sigma, r) ==
              MultiElement::monomial(ctx, sigma, r));
    }
  }
}

TEST_CASE("comultiplication closed form vs generator path") {
  auto ctx = ctx2_default();
  Perm e = Perm::identity(2), s = Perm::from_one_line({2, 1});
  CHECK(delta(MultiElement::unit(ctx)) == tensor_unit_mm(ctx));
  CHECK(delta(MultiElement::p_sigma(ctx, e)) ==
        outer(MultiElement::p_sigma(ctx, e), MultiElement::p_sigma(ctx, e)) +
            outer(MultiElement::p_sigma(ctx, s), MultiElement::p_sigma(ctx, s)));
  TensorMM du(ctx);
  for (int j = 1; j <= 2; ++j)
    du = du + outer(MultiElement::u_gen(ctx, 1, j), MultiElement::u_gen(ctx, j, 1));
  CHECK(delta(MultiElement::u_gen(ctx, 1, 1)) == du);
  for (const auto& sigma : all_perms(2))
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b) {
        MultiElement m = MultiElement::monomial(ctx, sigma, {a, b});
        CHECK(delta(m) == delta_generator_path(m));
      }
}

TEST_CASE("counit") {
  auto ctx = ctx2_default();
  CHECK(counit(MultiElement::unit(ctx)) == ctx->one());
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k)
      CHECK(counit(MultiElement::u_gen(ctx, i, k)) ==
            (i == k ? ctx->one() : ctx->zero()));
  CHECK(counit(MultiElement::x_gen(ctx, Perm::from_one_line({2, 1}), 1)).is_zero());
}

TEST_CASE("coinverse") {
  auto ctx = ctx3_default();
  CHECK(coinverse(MultiElement::unit(ctx)) == MultiElement::unit(ctx));
  for (const auto& sigma : all_perms(3))
    CHECK(coinverse(MultiElement::p_sigma(ctx, sigma)) ==
          MultiElement::p_sigma(ctx, sigma.inverse()));
  // antipode identity on generators
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      MultiElement s1(ctx), s2(ctx);
      for (int k = 1; k <= 3; ++k) {
        s1 = s1 + MultiElement::u_gen(ctx, i, k) * coinverse(MultiElement::u_gen(ctx, k, j));
        s2 = s2 + coinverse(MultiElement::u_gen(ctx, i, k)) * MultiElement::u_gen(ctx, k, j);
      }
      MultiElement want =
          i == j ? MultiElement::unit(ctx) : MultiElement(ctx);
      CHECK(s1 == want);
      CHECK(s2 == want);
    }
  // antimultiplicative on random pairs
  std::mt19937 rng(19);
  for (int t = 0; t < 20; ++t) {
    MultiElement a = random_elem(ctx, rng), b = random_elem(ctx, rng);
    CHECK(coinverse(a * b) == coinverse(b) * coinverse(a));
    CHECK(coinverse(coinverse(a.star()).star()) == a);
  }
}

TEST_CASE("subgroup algebra and exact-sequence maps") {
  auto ctx = ctx2_default();
  Perm e = Perm::identity(2), s = Perm::from_one_line({2, 1});
  Subgroup triv = Subgroup::trivial(2);

  CHECK(restrict_AH(Subgroup::full(2), MultiElement::unit(ctx)) == MultiElement::unit(ctx));
  CHECK(restrict_AH(triv, MultiElement::x_gen(ctx, s, 1)).is_zero());

  // for H = {e} the torus characters are group-like
  MultiElement xe = MultiElement::x_gen(ctx, e, 1);
  CHECK(delta_H(triv, xe) == outer(xe, xe));

  // p_H is the unit of A_H
  MultiElement ph = MultiElement::p_sigma(ctx, e) + MultiElement::p_sigma(ctx, s);
  Subgroup h2 = Subgroup::full(2);
  CHECK(restrict_AH(h2, MultiElement::unit(ctx)) == ph);

  // iota embeds delta functions onto projections
  std::map<Perm, Cyclo> f{{e, ctx->one()}};
  CHECK(iota_H(triv, f, ctx) == MultiElement::p_sigma(ctx, e));
  std::map<Perm, Cyclo> bad{{s, ctx->one()}};
  CHECK_THROWS_AS(iota_H(triv, bad, ctx), SupportOutsideSubgroup);

  // pi lands in the commutative torus
  auto cctx = Context::make(ThetaMatrix::zero(2), ctx->conductor());
  CHECK(pi_H_to_torus(h2, MultiElement::x_gen(ctx, s, 1), cctx) ==
        TorusElement::generator(cctx, 1));
  // linear extension of x_sigma^r -> x^r sends p_H to |H| * 1
  CHECK(pi_H_to_torus(h2, ph, cctx) == TorusElement::unit(cctx) * cctx->scalar(Rational(2)));
}

TEST_CASE("classical degeneration is commutative") {
  auto ctx = Context::make(ThetaMatrix::zero(3), 3);
  std::mt19937 rng(23);
  for (int t = 0; t < 25; ++t) {
    MultiElement a = random_elem(ctx, rng), b = random_elem(ctx, rng);
    CHECK(a * b == b * a);
  }
}

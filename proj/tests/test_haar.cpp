#include <doctest.h>

#include "qsym/haar.hpp"
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

TEST_CASE("haar state values") {
  auto ctx = ctx3_default();
  CHECK(haar(MultiElement::unit(ctx)) == ctx->one());
  for (const auto& sigma : all_perms(3)) {
    CHECK(haar(MultiElement::p_sigma(ctx, sigma)) == ctx->scalar(R(1, 6)));
    CHECK(haar(MultiElement::monomial(ctx, sigma, {1, 0, -1})).is_zero());
  }
}

TEST_CASE("haar invariance") {
  auto ctx = ctx2_default();
  for (const auto& sigma : all_perms(2))
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b) {
        MultiElement m = MultiElement::monomial(ctx, sigma, {a, b});
        MultiElement expect = MultiElement::unit(ctx) * haar(m);
        CHECK(apply_id_haar(delta(m)) == expect);
        CHECK(apply_haar_id(delta(m)) == expect);
      }
}

TEST_CASE("haar is tracial, kappa-invariant, and faithful") {
  auto ctx = ctx2_default();
  std::mt19937 rng(29);
  for (int t = 0; t < 100; ++t) {
    MultiElement a = random_elem(ctx, rng), b = random_elem(ctx, rng);
    CHECK(haar(a * b) == haar(b * a));
    CHECK(haar(coinverse(a)) == haar(a));
    if (!a.is_zero()) CHECK(!haar(a.star() * a).is_zero());
  }
}

TEST_CASE("coaction on generators") {
  auto ctx = ctx2_default();
  for (int k = 1; k <= 2; ++k) {
    TensorTM want(ctx);
    for (int i = 1; i <= 2; ++i) {
      MultiElement u = MultiElement::u_gen(ctx, i, k);
      for (const auto& [key, c] : u.terms())
        want.add_term(IntVector{i == 1 ? 1L : 0L, i == 2 ? 1L : 0L}, key, c);
    }
    CHECK(alpha(TorusElement::generator(ctx, k)) == want);
  }
  CHECK(alpha(TorusElement::unit(ctx)) == tensor_unit_tm(ctx));
}

TEST_CASE("coaction is a *-homomorphism") {
  auto ctx = ctx2_default();
  std::mt19937 rng(31);
  for (int t = 0; t < 25; ++t) {
    TorusElement a = TorusElement::monomial(ctx, random_vec(rng, 2, 2)) +
                     TorusElement::monomial(ctx, random_vec(rng, 2, 2));
    TorusElement b = TorusElement::monomial(ctx, random_vec(rng, 2, 2));
    CHECK(alpha(a * b) == alpha(a) * alpha(b));
    CHECK(alpha(a.star()) == alpha(a).star());
  }
}

TEST_CASE("coaction compatibility identities") {
  auto ctx = ctx2_default();
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      TorusElement m = TorusElement::monomial(ctx, {a, b});
      TensorTM am = alpha(m);
      CHECK(apply_alpha_id(am) == apply_id_delta(am));
      CHECK(apply_id_counit(am) == m);
    }
}

TEST_CASE("finite Podles identity") {
  auto ctx = ctx2_default();
  for (int k = 1; k <= 2; ++k) {
    TensorTM sum(ctx);
    for (int i = 1; i <= 2; ++i) {
      TensorTM left = alpha(TorusElement::generator(ctx, i));
      MultiElement us = MultiElement::u_gen(ctx, k, i).star();
      TensorTM right(ctx);
      for (const auto& [key, c] : us.terms()) right.add_term(IntVector{0, 0}, key, c);
      sum = sum + left * right;
    }
    CHECK(sum == outer(TorusElement::generator(ctx, k), MultiElement::unit(ctx)));
  }
}

TEST_CASE("antipode collapse reproduces the counit") {
  auto ctx = ctx2_default();
  for (const auto& sigma : all_perms(2))
    for (long a = -1; a <= 1; ++a)
      for (long b = -1; b <= 1; ++b) {
        MultiElement m = MultiElement::monomial(ctx, sigma, {a, b});
        MultiElement want = MultiElement::unit(ctx) * counit(m);
        CHECK(collapse_kappa_id(delta(m)) == want);
        CHECK(collapse_id_kappa(delta(m)) == want);
      }
}

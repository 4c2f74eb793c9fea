#include <doctest.h>

#include "qsym/operator_model.hpp"
#include "test_util.hpp"

#include <random>

using namespace qsym;
using namespace qsym::testutil;

namespace {
Rational R(long a, long b = 1) { return Rational(Int(a), Int(b)); }
}  // namespace

TEST_CASE("model space layout") {
  auto ctx = ctx2_default();  // conductor 3
  ModelSpace s(ctx, 3);
  CHECK(s.cyclic_order() == 3);
  CHECK(s.num_factors() == 1);       // one pair (1,2)
  CHECK(s.dim() == 2 * 3);           // |S_2| * M^1
  for (long idx = 0; idx < s.dim(); ++idx)
    CHECK(s.index(s.sigma_of(idx), s.values_of(idx)) == idx);
  CHECK_THROWS_AS(ModelSpace(ctx, 4), BadTruncation);  // 3 does not divide 4
}

TEST_CASE("sparse operator arithmetic") {
  auto ctx = ctx2_default();
  ModelSpace s(ctx, 3);
  SparseOp id = SparseOp::identity(s);
  SparseOp z = SparseOp::zero(s);
  CHECK(id * id == id);
  CHECK(id + z == id);
  CHECK((id - id).is_zero());
  CHECK(id.adjoint() == id);
  SparseOp a(s.dim());
  a.add_entry(0, 1, ctx->cyclo(Phase{R(1, 3)}));
  CHECK(a.adjoint().col(0).size() == 1);
  CHECK(a.adjoint().adjoint() == a);
}

TEST_CASE("generator operators satisfy the algebra relations") {
  auto ctx = ctx2_default();
  ModelSpace s(ctx, 3);
  ModelRelationReport rep = verify_model_relations(s, IndexReading::SigmaDirect);
  CHECK(rep.e11);
  CHECK(rep.e12a);
  CHECK(rep.e12b);
  CHECK(rep.e14a);
  CHECK(rep.e14b);
  CHECK(rep.partial_isometry);
  CHECK(rep.normal);
  CHECK(rep.projections);
  CHECK(rep.adjoint_consistent);
  CHECK(rep.all());
}

TEST_CASE("component support and shift behavior") {
  auto ctx = ctx2_default();
  ModelSpace s(ctx, 3);
  // U_ik annihilates H_sigma unless sigma(k) = i
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k) {
      SparseOp u = build_U(s, i, k);
      for (long j = 0; j < s.dim(); ++j)
        for (const auto& [row, c] : u.col(j)) {
          Perm sigma = s.perms()[s.sigma_of(j)];
          CHECK(sigma.apply(k) == i);
          CHECK(s.sigma_of(row) == s.sigma_of(j));  // U preserves the component
        }
    }
  // the factor with k = l2 is shifted cyclically by one
  auto [l1, l2] = s.lambdas()[0];
  SparseOp u = build_U(s, l2, l2);  // sigma = e has e(l2) = l2
  long j = s.index(0, {0});
  REQUIRE(u.col(j).size() == 1);
  CHECK(s.values_of(u.col(j)[0].first) == std::vector<long>{1});
  long top = s.index(0, {2});
  REQUIRE(u.col(top).size() == 1);
  CHECK(s.values_of(u.col(top)[0].first) == std::vector<long>{0});  // wraps mod M
  (void)l1;
}

TEST_CASE("evaluate extends the generator assignment") {
  auto ctx = ctx2_default();
  ModelSpace s(ctx, 3);
  CHECK(evaluate(s, MultiElement::unit(ctx)) == SparseOp::identity(s));
  for (int i = 1; i <= 2; ++i)
    for (int k = 1; k <= 2; ++k)
      CHECK(evaluate(s, MultiElement::u_gen(ctx, i, k)) == build_U(s, i, k));
  for (const auto& sigma : all_perms(2))
    CHECK(evaluate(s, MultiElement::p_sigma(ctx, sigma)) == build_P(s, sigma));
}

TEST_CASE("evaluate is a *-homomorphism") {
  auto ctx = ctx2_default();
  ModelSpace s(ctx, 3);
  std::mt19937 rng(37);
  auto perms = all_perms(2);
  std::uniform_int_distribution<size_t> pick(0, perms.size() - 1);
  auto rand_elem = [&] {
    MultiElement out(ctx);
    for (int t = 0; t < 2; ++t)
      out = out + MultiElement::monomial(ctx, perms[pick(rng)], random_vec(rng, 2, 2));
    return out;
  };
  for (int t = 0; t < 60; ++t) {
    MultiElement a = rand_elem(), b = rand_elem();
    CHECK(evaluate(s, a * b) == evaluate(s, a) * evaluate(s, b));
    CHECK(evaluate(s, a.star()) == evaluate(s, a).adjoint());
    CHECK(evaluate(s, a + b) == evaluate(s, a) + evaluate(s, b));
  }
}

TEST_CASE("evaluate does not vanish on small monomials") {
  auto ctx = ctx2_default();
  ModelSpace s(ctx, 3);
  for (const auto& sigma : all_perms(2))
    for (long a = -2; a <= 2; ++a)
      for (long b = -2; b <= 2; ++b)
        CHECK(!evaluate(s, MultiElement::monomial(ctx, sigma, {a, b})).is_zero());
}

TEST_CASE("larger cyclic orders stay consistent") {
  auto ctx = ctx2_default();
  ModelSpace s(ctx, 6);  // any multiple of the conductor
  CHECK(s.dim() == 12);
  CHECK(verify_model_relations(s).all());
}

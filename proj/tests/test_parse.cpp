#include <doctest.h>

#include "qsym/parse.hpp"
#include "qsym/suites.hpp"
#include "test_util.hpp"

using namespace qsym;
using namespace qsym::testutil;

namespace {
Rational R(long a, long b = 1) { return Rational(Int(a), Int(b)); }

template <class T>
T as(const Value& v) {
  REQUIRE(std::holds_alternative<T>(v));
  return std::get<T>(v);
}
}  // namespace

TEST_CASE("scalars and roots of unity") {
  auto ctx = ctx2_default();  // conductor 3
  CHECK(as<Cyclo>(parse_element("2/3", ctx)) == ctx->scalar(R(2, 3)));
  CHECK(as<Cyclo>(parse_element("zeta(3)^2", ctx)) == Cyclo::zeta_pow(ctx->field(), 2));
  CHECK(as<Cyclo>(parse_element("1 + zeta(3) + zeta(3)^2", ctx)).is_zero());
  CHECK_THROWS_AS(parse_element("zeta(5)", ctx), ConductorMismatch);
}

TEST_CASE("torus atoms") {
  auto ctx = ctx2_default();
  CHECK(as<TorusElement>(parse_element("x1", ctx)) == TorusElement::generator(ctx, 1));
  CHECK(as<TorusElement>(parse_element("x^[1,-1]", ctx)) ==
        TorusElement::monomial(ctx, {1, -1}));
  CHECK(as<TorusElement>(parse_element("x1 * x2", ctx)) ==
        TorusElement::generator(ctx, 1) * TorusElement::generator(ctx, 2));
  // a star glued to the atom is the adjoint; a free star is multiplication
  CHECK(as<TorusElement>(parse_element("x1* * x1", ctx)) == TorusElement::unit(ctx));
  CHECK(as<TorusElement>(parse_element("x1*", ctx)) ==
        TorusElement::generator(ctx, 1).star());
}

TEST_CASE("multitorus atoms") {
  auto ctx = ctx2_default();
  CHECK(as<MultiElement>(parse_element("u[1,2]", ctx)) == MultiElement::u_gen(ctx, 1, 2));
  CHECK(as<MultiElement>(parse_element("u[1,2]*", ctx)) ==
        MultiElement::u_gen(ctx, 1, 2).star());
  CHECK(as<MultiElement>(parse_element("p[[2,1]]", ctx)) ==
        MultiElement::p_sigma(ctx, Perm::from_one_line({2, 1})));
  CHECK(as<MultiElement>(parse_element("m[sigma=[2,1],r=[1,-1]]", ctx)) ==
        MultiElement::monomial(ctx, Perm::from_one_line({2, 1}), {1, -1}));
}

TEST_CASE("sums, signs, and scalar promotion") {
  auto ctx = ctx2_default();
  CHECK(as<TorusElement>(parse_element("(x1 + x2) * (x1 - x2)", ctx)) ==
        (TorusElement::generator(ctx, 1) + TorusElement::generator(ctx, 2)) *
            (TorusElement::generator(ctx, 1) - TorusElement::generator(ctx, 2)));
  CHECK(as<TorusElement>(parse_element("1 + x1", ctx)) ==
        TorusElement::unit(ctx) + TorusElement::generator(ctx, 1));
  CHECK(as<MultiElement>(parse_element("u[1,1] - 1/2", ctx)) ==
        MultiElement::u_gen(ctx, 1, 1) -
            MultiElement::unit(ctx) * ctx->scalar(R(1, 2)));
  CHECK(as<Cyclo>(parse_element("-2 * 3", ctx)) == ctx->scalar(R(-6)));
}

TEST_CASE("syntax errors carry a position") {
  auto ctx = ctx2_default();
  CHECK_THROWS_AS(parse_element("x9", ctx), SyntaxError);
  CHECK_THROWS_AS(parse_element("x1 + u[1,1]", ctx), SyntaxError);
  CHECK_THROWS_AS(parse_element("x1 x2", ctx), SyntaxError);
  CHECK_THROWS_AS(parse_element("", ctx), SyntaxError);
  CHECK_THROWS_AS(parse_element("m[sigma=[2,1]]", ctx), SyntaxError);
  try {
    parse_element("x1 + @", ctx);
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.pos == 5);
  }
}

TEST_CASE("session configuration parsing") {
  SessionConfig cfg = SessionConfig::parse(
      "# comment\nn = 2\ndegree_bound = 2\ntheta_1_2 = 1/3\n");
  CHECK(cfg.n == 2);
  CHECK(cfg.degree_bound == 2);
  CHECK(cfg.theta.at(1, 2) == R(1, 3));
  CHECK(cfg.theta.at(2, 1) == R(-1, 3));
  CHECK(cfg.make_context()->conductor() == 3);

  CHECK_THROWS_AS(SessionConfig::parse("n = 2\ntheta_1_2 = 0.25\n"), ConfigError);
  CHECK_THROWS_AS(SessionConfig::parse("theta_1_2 = 1/3\n"), ConfigError);  // missing n
  CHECK_THROWS_AS(SessionConfig::parse("n = 2\nbogus = 1\n"), ConfigError);
  CHECK_THROWS_AS(SessionConfig::parse("n = 0\n"), ConfigError);
}

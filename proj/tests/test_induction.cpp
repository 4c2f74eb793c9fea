#include <doctest.h>

#include "qsym/haar.hpp"
#include "qsym/induction.hpp"
#include "test_util.hpp"

#include <algorithm>

using namespace qsym;
using namespace qsym::testutil;

namespace {
Rational R(long a, long b = 1) { return Rational(Int(a), Int(b)); }
}  // namespace

TEST_CASE("orbit representatives at a bound") {
  auto reps = orbit_representatives(2, 1);
  CHECK(reps.size() == 6);
  for (const auto& r : reps) {
    CHECK(std::is_sorted(r.rbegin(), r.rend()));
    CHECK(orbit_representative(r) == r);
  }
}

TEST_CASE("classical Mackey enumeration at n=2, bound 1") {
  // orbits: (1,1),(1,0),(1,-1),(0,0),(0,-1),(-1,-1); stabilizer S_2 thrice
  CHECK(classical_mackey_count(2, 1) == 9);
  std::vector<long> want{1, 1, 1, 1, 1, 1, 2, 2, 2};
  CHECK(classical_mackey_dims(2, 1) == want);
}

TEST_CASE("stabilizer irrep catalog") {
  auto ctx = ctx3_default();
  auto full = stabilizer_irreps(ctx->field(), {1, 1, 1});
  REQUIRE(full.size() == 3);  // trivial, sign, standard
  std::vector<int> dims;
  for (const auto& v : full) dims.push_back(v.dim);
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<int>{1, 1, 2});
  for (const auto& v : full) CHECK(validate_rep(v, Subgroup::full(3)));
  CHECK_THROWS_AS(young_blocks(IntVector{1, 2}), NonCanonicalOrbitRep);
}

TEST_CASE("blocks beyond the catalog are reported") {
  const CycloField* f = CycloField::get(12);
  CHECK_THROWS_AS(block_irreps(f, 4), CatalogMissing);
}

TEST_CASE("induced coreps at n=2") {
  auto ctx = ctx2_default();
  IntVector r{1, 1};
  auto irreps = stabilizer_irreps(ctx->field(), r);
  REQUIRE(irreps.size() == 2);
  for (const auto& v : irreps) {
    Corep c = induce(ctx, r, v);
    CHECK(c.dim == 1);
    CHECK(corep_law(c));
    CHECK(corep_unitary(c));
    CHECK(is_irreducible(c));
  }
  // free orbit: dimension equals the index of the trivial stabilizer
  IntVector r2{1, 0};
  auto triv = stabilizer_irreps(ctx->field(), r2);
  REQUIRE(triv.size() == 1);
  Corep c2 = induce(ctx, r2, triv[0]);
  CHECK(c2.dim == 2);
  CHECK(corep_law(c2));
  CHECK(corep_unitary(c2));
  CHECK(is_irreducible(c2));
  CHECK(!are_equivalent(c2, induce(ctx, r, irreps[0])));
  CHECK(are_equivalent(c2, c2));
  CHECK_THROWS_AS(induce(ctx, IntVector{0, 1}, triv[0]), NonCanonicalOrbitRep);
}

TEST_CASE("matrix entries do not depend on the coset representative") {
  auto ctx = ctx2_default();
  IntVector r{2, 0};
  auto irreps = stabilizer_irreps(ctx->field(), r);
  Subgroup h = stabilizer(r, 2);
  CosetDecomposition dec = right_cosets(h);
  const Irrep& v = irreps[0];
  for (int nu = 0; nu < (int)dec.reps.size(); ++nu)
    for (int mu = 0; mu < (int)dec.reps.size(); ++mu) {
      MultiElement canonical = amu_entry(ctx, r, v, dec, nu, 0, mu, 0, dec.reps[nu]);
      for (const auto& hh : h.elements())
        CHECK(amu_entry(ctx, r, v, dec, nu, 0, mu, 0, hh * dec.reps[nu]) == canonical);
    }
}

TEST_CASE("character orthogonality under the Haar state") {
  auto ctx = ctx2_default();
  std::vector<Corep> cs;
  for (const auto& r : {IntVector{1, 1}, IntVector{1, 0}})
    for (const auto& v : stabilizer_irreps(ctx->field(), r))
      cs.push_back(induce(ctx, r, v));
  for (size_t a = 0; a < cs.size(); ++a)
    for (size_t b = 0; b < cs.size(); ++b) {
      Cyclo ip = haar(corep_character(cs[a]) * corep_character(cs[b]).star());
      CHECK(ip == (a == b ? ctx->one() : ctx->zero()));
    }
}

TEST_CASE("monomials are rebuilt from matrix coefficients") {
  auto ctx = ctx2_default();
  IntVector r{1, 0};
  std::vector<std::pair<Irrep, Corep>> oc;
  for (const auto& v : stabilizer_irreps(ctx->field(), r))
    oc.push_back({v, induce(ctx, r, v)});
  for (const auto& sigma : all_perms(2)) {
    for (const IntVector& s : {IntVector{1, 0}, IntVector{0, 1}})
      CHECK(reconstruct_monomial(ctx, sigma, s, oc) ==
            MultiElement::monomial(ctx, sigma, s));
  }
}

TEST_CASE("full classification matches the classical enumeration") {
  auto ctx = ctx2_default();
  ClassifyResult res = classify(ctx, 1);
  CHECK(res.all_irreducible);
  CHECK(res.pairwise_inequivalent);
  CHECK(res.reconstruction_ok);
  CHECK(res.count_matches_classical);
  CHECK((long)res.coreps.size() == classical_mackey_count(2, 1));
  std::vector<long> dims;
  for (const auto& c : res.coreps) dims.push_back(c.corep.dim);
  std::sort(dims.begin(), dims.end());
  CHECK(dims == classical_mackey_dims(2, 1));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "helpers.hpp"
#include "upd/decomposition.hpp"
#include "upd/errors.hpp"
#include "upd/oracle.hpp"

using namespace upd;
using namespace upd::testing;

namespace {

MonomialIdeal meet_components(const PrimaryDecomposition& dec) {
  MonomialIdeal acc = MonomialIdeal::unit(dec.ideal.context());
  for (const auto& comp : dec.components) acc = intersect(acc, comp.component);
  return acc;
}

}  // namespace

TEST_CASE("irreducible decomposition") {
  auto I = ideal(ctx2(), {"x^2", "x*y"});
  auto parts = irreducible_decomposition(I);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == ideal(ctx2(), {"x"}));
  CHECK(parts[1] == ideal(ctx2(), {"x^2", "y"}));
  CHECK(intersect(parts[0], parts[1]) == I);

  for (int n = 1; n <= 3; ++n) {
    auto J = ideal(ctx2(), {"x^2", "x*y", "y^" + std::to_string(n + 1)});
    auto ps = irreducible_decomposition(J);
    REQUIRE(ps.size() == 2);
    CHECK(ps[0] == ideal(ctx2(), {"x", "y^" + std::to_string(n + 1)}));
    CHECK(ps[1] == ideal(ctx2(), {"x^2", "y"}));
    CHECK(intersect(ps[0], ps[1]) == J);
  }
  // At n = 0 the y generator absorbs x*y and the ideal is already
  // irreducible.
  auto at0 = irreducible_decomposition(ideal(ctx2(), {"x^2", "x*y", "y"}));
  REQUIRE(at0.size() == 1);
  CHECK(at0[0] == ideal(ctx2(), {"x^2", "y"}));

  auto prime = irreducible_decomposition(ideal(ctx2(), {"x"}));
  REQUIRE(prime.size() == 1);
  CHECK(prime[0] == ideal(ctx2(), {"x"}));

  auto zero = irreducible_decomposition(MonomialIdeal::zero(ctx2()));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].is_zero());

  CHECK_THROWS_AS(irreducible_decomposition(MonomialIdeal::unit(ctx2())),
                  Error);
}

TEST_CASE("associated primes") {
  auto primes = associated_primes(ideal(ctx2(), {"x^2", "x*y"}));
  REQUIRE(primes.size() == 2);
  CHECK(primes[0] == ideal(ctx2(), {"x"}));
  CHECK(primes[1] == ideal(ctx2(), {"x", "y"}));

  CHECK(associated_primes(ideal(ctx2(), {"x^2", "x*y", "y^4"})) ==
        std::vector<MonomialIdeal>{ideal(ctx2(), {"x", "y"})});
  CHECK(associated_primes(ideal(ctx2(), {"x"})) ==
        std::vector<MonomialIdeal>{ideal(ctx2(), {"x"})});
  CHECK(associated_primes(MonomialIdeal::zero(ctx2())) ==
        std::vector<MonomialIdeal>{MonomialIdeal::zero(ctx2())});
}

TEST_CASE("primary decomposition") {
  auto I = ideal(ctx2(), {"x^2", "x*y"});
  auto dec = primary_decomposition(I);
  REQUIRE(dec.components.size() == 2);
  CHECK(dec.components[0].prime == ideal(ctx2(), {"x"}));
  CHECK(dec.components[0].component == ideal(ctx2(), {"x"}));
  CHECK(dec.components[1].prime == ideal(ctx2(), {"x", "y"}));
  CHECK(dec.components[1].component == ideal(ctx2(), {"x^2", "y"}));
  CHECK(dec.irredundant);
  CHECK(dec.minimal);
  CHECK(meet_components(dec) == I);

  auto sq = primary_decomposition(ideal(ctx2(), {"x^2", "x*y", "y^2"}));
  REQUIRE(sq.components.size() == 1);
  CHECK(sq.components[0].prime == ideal(ctx2(), {"x", "y"}));
  CHECK(sq.components[0].component == ideal(ctx2(), {"x^2", "x*y", "y^2"}));

  auto pr = primary_decomposition(ideal(ctx2(), {"x"}));
  REQUIRE(pr.components.size() == 1);
  CHECK(pr.components[0].prime == ideal(ctx2(), {"x"}));
  CHECK(pr.components[0].component == ideal(ctx2(), {"x"}));

  auto zero = primary_decomposition(MonomialIdeal::zero(ctx2()));
  REQUIRE(zero.components.size() == 1);
  CHECK(zero.components[0].prime.is_zero());
  CHECK(zero.components[0].component.is_zero());
}

TEST_CASE("is_primary") {
  for (int n = 0; n <= 3; ++n) {
    auto Q = ideal(ctx2(), {"x^2", "x*y", "y^" + std::to_string(n + 1)});
    auto p = is_primary(Q);
    REQUIRE(p.has_value());
    CHECK(*p == ideal(ctx2(), {"x", "y"}));
  }
  CHECK_FALSE(is_primary(ideal(ctx2(), {"x^2", "x*y"})).has_value());
  auto p = is_primary(ideal(ctx2(), {"x"}));
  REQUIRE(p.has_value());
  CHECK(*p == ideal(ctx2(), {"x"}));
  CHECK_THROWS_AS(is_primary(MonomialIdeal::unit(ctx2())), Error);
}

TEST_CASE("assemble verifies instead of trusting") {
  auto I = ideal(ctx2(), {"x^2", "x*y"});
  auto X = ideal(ctx2(), {"x"});
  auto XY = ideal(ctx2(), {"x", "y"});

  // Swapping the embedded component between decompositions stays valid.
  for (const char* tail : {"y^3", "y^2"}) {
    auto dec =
        assemble(I, {{X, X}, {XY, ideal(ctx2(), {"x^2", "x*y", tail})}});
    CHECK(dec.irredundant);
    CHECK(dec.minimal);
    CHECK(meet_components(dec) == I);
  }

  auto trivial = assemble(X, {{X, X}});
  CHECK(trivial.components.size() == 1);

  // Wrong prime set.
  CHECK_THROWS_WITH_AS(assemble(I, {{X, X}}),
                       doctest::Contains("associated primes"), Error);
  // A pick that is not primary for its key.
  CHECK_THROWS_AS(assemble(I, {{X, X}, {XY, ideal(ctx2(), {"x^2", "x*y"})}}),
                  Error);
  // Primary picks whose intersection misses the ideal.
  CHECK_THROWS_WITH_AS(
      assemble(I,
               {{X, ideal(ctx2(), {"x^2"})}, {XY, ideal(ctx2(), {"x", "y"})}}),
      doctest::Contains("differs from the ideal"), Error);
}

TEST_CASE("embedded component is pivot-dependent, minimal one is not") {
  auto I = ideal(ctx2(), {"x^2", "x*y"});
  auto first = primary_decomposition(I, PivotRule::FirstMixedLowestVar);
  auto second = primary_decomposition(I, PivotRule::LastMixedHighestVar);
  CHECK(meet_components(first) == I);
  CHECK(meet_components(second) == I);
  CHECK(first.components[0].component == second.components[0].component);
}

TEST_CASE("randomized decomposition suites (small)") {
  for (const char* name :
       {"decomposition_exact", "compatibility_mix",
        "minimal_components_unique", "ass_permutation_invariant"}) {
    auto result = run_oracle_suite(name, 11, 60);
    INFO(name << ": " << result.counterexample);
    CHECK(result.failures == 0);
  }
}

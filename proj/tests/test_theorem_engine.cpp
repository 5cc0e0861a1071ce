#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "upd/engine.hpp"
#include "upd/errors.hpp"
#include "upd/family_json.hpp"
#include "upd/oracle.hpp"

using namespace upd;
using namespace upd::testing;

namespace {

const char* kConstantQuotient = R"({
  "mode": "graded", "vars": ["x", "y"], "params": ["n"],
  "generators": [ {"x": 2}, {"x": 1, "y": 1} ]
})";

const char* kThresholdQuotient = R"({
  "mode": "graded", "vars": ["x", "y"], "params": ["n"],
  "generators": [ {"x": 2}, {"x": 1, "y": 1}, {"y": 2, "n": 1} ]
})";

const char* kGrowingAffine = R"({
  "mode": "affine", "vars": ["x", "y"], "params": ["n"],
  "generators": [ {"x": {"const": 1, "coeff": {"n": 1}}}, {"x": 1, "y": 1} ]
})";

}  // namespace

TEST_CASE("h0 equals saturation with its index") {
  auto I = ideal(ctx2(), {"x^2", "x*y"});
  auto a = h0(I, ideal(ctx2(), {"x", "y"}));
  CHECK(a.ideal == ideal(ctx2(), {"x"}));
  CHECK(a.stab_index == 1);
  auto b = h0(I, ideal(ctx2(), {"x"}));
  CHECK(b.ideal.is_unit());
  CHECK(b.stab_index == 2);
  auto c = h0(ideal(ctx2(), {"x"}), ideal(ctx2(), {"y"}));
  CHECK(c.ideal == ideal(ctx2(), {"x"}));
  CHECK(c.stab_index == 0);
}

TEST_CASE("k_min searches the least closing exponent") {
  auto I = ideal(ctx2(), {"x^2", "x*y"});
  CHECK(k_min(I, ideal(ctx2(), {"x", "y"}), 10) == 2);
  CHECK(k_min(I, ideal(ctx2(), {"x"}), 10) == 2);

  auto I4 = ideal(ctx2(), {"x^5", "x*y"});
  CHECK(k_min(I4, ideal(ctx2(), {"x", "y"}), 20) == 5);

  CHECK_THROWS_AS(k_min(I4, ideal(ctx2(), {"x", "y"}), 3), CapExceededError);
  CHECK(k_min(MonomialIdeal::zero(ctx2()), MonomialIdeal::zero(ctx2()), 5) ==
        1);
}

TEST_CASE("default cap follows the degree data") {
  CHECK(default_cap(ideal(ctx2(), {"x^2", "x*y"})) == 4 + 2 + 1);
  CHECK(default_cap(MonomialIdeal::zero(ctx2())) == 4);
}

TEST_CASE("scan over the constant family") {
  auto spec = parse_family(kConstantQuotient);
  auto report = scan_uniform_k(spec, Box({{Integer(0), Integer(30)}}));
  CHECK(report.uniform_k == 2);
  CHECK(report.stabilized);
  CHECK(report.guarantee == Guarantee::TheoremApplies);
  CHECK(report.rows.size() == 31);
  for (const auto& row : report.rows) {
    REQUIRE(row.primes.size() == 2);
    CHECK(row.primes[0].prime == ideal(spec.context, {"x"}));
    CHECK(row.primes[0].k_min == 2);
    CHECK(row.primes[0].l == 2);
    CHECK(row.primes[1].prime == ideal(spec.context, {"x", "y"}));
    CHECK(row.primes[1].k_min == 2);
    CHECK(row.primes[1].l == 1);
  }
}

TEST_CASE("scan over the threshold family") {
  auto spec = parse_family(kThresholdQuotient);
  auto report = scan_uniform_k(spec, Box({{Integer(0), Integer(30)}}));
  CHECK(report.uniform_k == 2);
  CHECK(report.stabilized);
  // Embedded structure changes at the threshold: two primes at n = 0, one
  // after.
  CHECK(report.rows[0].primes.size() == 2);
  CHECK(report.rows[1].primes.size() == 1);
  CHECK(report.rows[1].primes[0].prime == ideal(spec.context, {"x", "y"}));
}

TEST_CASE("scan over the affine negative control") {
  auto spec = parse_family(kGrowingAffine);
  auto report = scan_uniform_k(spec, Box({{Integer(0), Integer(12)}}));
  CHECK(report.guarantee == Guarantee::NoGuarantee);
  CHECK_FALSE(report.stabilized);
  CHECK(report.uniform_k == 13);
  for (std::size_t n = 0; n < report.rows.size(); ++n) {
    CHECK(report.rows[n].k_min == n + 1);
  }
}

TEST_CASE("scan skips vanished components") {
  // Z^2 alone: I(n) = (1) for n >= 2.
  auto spec = parse_family(R"({"mode":"graded","vars":["x","y"],"params":["n"],
    "generators":[{"x":1,"n":0},{"n":2}]})");
  auto report = scan_uniform_k(spec, Box({{Integer(0), Integer(5)}}));
  CHECK(report.rows[0].zero_module == false);
  CHECK(report.rows[2].zero_module == true);
  CHECK(report.rows[5].zero_module == true);
  CHECK(report.uniform_k == 1);
}

TEST_CASE("bounded decomposition constructs the certified components") {
  auto I = ideal(ctx2(), {"x^2", "x*y"});
  auto cert = bounded_decomposition(I, 2);
  REQUIRE(cert.components.size() == 2);
  CHECK(cert.components[0].prime == ideal(ctx2(), {"x"}));
  CHECK(cert.components[0].component == ideal(ctx2(), {"x"}));
  CHECK(cert.components[1].prime == ideal(ctx2(), {"x", "y"}));
  CHECK(cert.components[1].component == ideal(ctx2(), {"x^2", "x*y", "y^2"}));
  CHECK(cert.checks.all());
  CHECK(verify_certificate(cert).all());

  // Saturation-is-everything branch.
  auto J = ideal(ctx2(), {"x^2", "x*y", "y^3"});
  auto cj = bounded_decomposition(J, 3);
  REQUIRE(cj.components.size() == 1);
  CHECK(cj.components[0].prime == ideal(ctx2(), {"x", "y"}));
  CHECK(cj.components[0].component == J);
  CHECK(verify_certificate(cj).all());
  CHECK_THROWS_AS(bounded_decomposition(J, 2), KTooSmallError);

  CHECK_THROWS_AS(bounded_decomposition(I, 1), KTooSmallError);
  CHECK_THROWS_AS(bounded_decomposition(MonomialIdeal::unit(ctx2()), 2),
                  Error);

  auto zero = bounded_decomposition(MonomialIdeal::zero(ctx2()), 1);
  REQUIRE(zero.components.size() == 1);
  CHECK(zero.components[0].prime.is_zero());
  CHECK(zero.components[0].component.is_zero());
  CHECK(verify_certificate(zero).all());
}

TEST_CASE("minimal_s reproduces the unbounded growth") {
  auto I = ideal(ctx2(), {"x^2", "x*y"});
  auto P = ideal(ctx2(), {"x", "y"});
  // The n+1 growth law holds from n = 1 on; at n = 0 the embedded component
  // (x^2, x*y, y) = (x^2, y) still needs s = 2 since x is not inside it.
  for (int n = 1; n <= 30; ++n) {
    auto Q = ideal(ctx2(), {"x^2", "x*y", "y^" + std::to_string(n + 1)});
    CHECK(minimal_s(I, Q, P, 40) == static_cast<std::uint64_t>(n) + 1);
  }
  CHECK(minimal_s(I, ideal(ctx2(), {"x^2", "x*y", "y"}), P, 40) == 2);

  CHECK(minimal_s(I, ideal(ctx2(), {"x"}), ideal(ctx2(), {"x"}), 10) == 1);
  CHECK(minimal_s(I, ideal(ctx2(), {"x^2", "x*y", "y^2"}), P, 10) == 2);
  CHECK_THROWS_AS(minimal_s(I, ideal(ctx2(), {"x^2", "x*y", "y^9"}), P, 5),
                  CapExceededError);
  // Q must contain I.
  CHECK_THROWS_AS(minimal_s(I, ideal(ctx2(), {"y"}), P, 5), Error);
}

TEST_CASE("growth dichotomy: fixed components grow, certified ones do not") {
  auto spec = parse_family(kConstantQuotient);
  auto I = ideal(spec.context, {"x^2", "x*y"});
  auto P = ideal(spec.context, {"x", "y"});
  for (int n = 1; n <= 20; ++n) {
    auto Q = ideal(spec.context,
                   {"x^2", "x*y", "y^" + std::to_string(n + 1)});
    CHECK(minimal_s(I, Q, P, 64) == static_cast<std::uint64_t>(n) + 1);
  }
  auto report = certify_box(spec, Box({{Integer(0), Integer(20)}}), 2);
  for (const auto& row : report.rows) {
    REQUIRE(row.certificate.has_value());
    CHECK(row.certificate->checks.all());
  }
}

TEST_CASE("exponents stay exact beyond 64 bits") {
  auto spec = parse_family(
      R"({"mode":"affine","vars":["x","y"],"params":["n"],
          "generators":[{"x":{"const":1,"coeff":{"n":1000000000000}}},
                        {"x":1,"y":1}]})");
  const Integer big("100000000000000000000");  // 10^20
  auto I = evaluate(spec, {big});
  const Integer expected = Integer(1000000000000) * big + 1;
  REQUIRE(I.gens().size() == 2);
  CHECK(I.gens()[1].exponents[0] == expected);
  CHECK(to_string(*spec.context, I.gens()[1]) == "x^" + expected.str());

  auto parts = irreducible_decomposition(I);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == ideal(spec.context, {"x"}));
  CHECK(intersect(parts[0], parts[1]) == I);
}

TEST_CASE("h0_via_components matches saturation") {
  auto I = ideal(ctx2(), {"x^2", "x*y"});
  CHECK(h0_via_components(I, ideal(ctx2(), {"x", "y"})) == ideal(ctx2(), {"x"}));
  CHECK(h0_via_components(I, ideal(ctx2(), {"x"})).is_unit());
  CHECK(h0_via_components(ideal(ctx2(), {"x"}), ideal(ctx2(), {"y"})) ==
        ideal(ctx2(), {"x"}));
}

TEST_CASE("verify_h0_uniform on the constant family") {
  auto spec = parse_family(kConstantQuotient);
  Box box({{Integer(0), Integer(30)}});

  auto xy = verify_h0_uniform(spec, box, {ideal(spec.context, {"x", "y"})});
  CHECK(xy.l_uniform == 1);
  for (const auto& row : xy.rows) {
    CHECK(row.cross_check_ok);
    CHECK(row.defining_eq_ok);
    // The defining equality stabilizes before the torsion intersection
    // closes: at l = 1 the image of x is torsion and still inside J*L.
    CHECK_FALSE(row.torsion_free_ok);
  }

  auto x = verify_h0_uniform(spec, box, {ideal(spec.context, {"x"})});
  CHECK(x.l_uniform == 2);
  for (const auto& row : x.rows) {
    CHECK(row.defining_eq_ok);
    CHECK(row.torsion_free_ok);
  }

  auto unit = verify_h0_uniform(spec, box, {MonomialIdeal::unit(spec.context)});
  CHECK(unit.l_uniform == 0);
  for (const auto& row : unit.rows) {
    CHECK(row.sat == evaluate(spec, row.point));
    CHECK(row.torsion_free_ok);
  }

  CHECK_THROWS_AS(
      verify_h0_uniform(spec, box, {MonomialIdeal::zero(spec.context)}),
      Error);
}

TEST_CASE("battery drives the uniform index to 2") {
  auto spec = parse_family(kConstantQuotient);
  Box box({{Integer(0), Integer(30)}});
  auto battery = battery_ideals(spec.context, 42);
  CHECK(battery.size() == 3 + 25);
  auto report = verify_h0_uniform(spec, box, battery);
  CHECK(report.l_uniform == 2);
  for (const auto& row : report.rows) {
    CHECK(row.cross_check_ok);
    CHECK(row.defining_eq_ok);
    CHECK(row.torsion_free_ok);
  }
}

TEST_CASE("artin-rees consequence over a window") {
  auto spec = parse_family(kConstantQuotient);
  Box box({{Integer(0), Integer(10)}});
  CHECK(artin_rees_consequence(spec, box, 2, 5));
  CHECK_FALSE(artin_rees_consequence(spec, box, 1, 1));
  auto scan = scan_uniform_k(spec, box);
  CHECK(artin_rees_consequence(spec, box, scan.uniform_k, 3));
}

TEST_CASE("scan reports are identical across job counts") {
  auto spec = parse_family(kThresholdQuotient);
  Box box({{Integer(0), Integer(12)}});
  auto seq = scan_uniform_k(spec, box, 0, 1);
  auto par = scan_uniform_k(spec, box, 0, 4);
  REQUIRE(seq.rows.size() == par.rows.size());
  CHECK(seq.uniform_k == par.uniform_k);
  for (std::size_t i = 0; i < seq.rows.size(); ++i) {
    CHECK(seq.rows[i].point == par.rows[i].point);
    CHECK(seq.rows[i].k_min == par.rows[i].k_min);
  }
}

TEST_CASE("cap errors carry the offending point") {
  auto spec = parse_family(kGrowingAffine);
  try {
    scan_uniform_k(spec, Box({{Integer(0), Integer(12)}}), 5);
    FAIL("expected CapExceededError");
  } catch (const CapExceededError& e) {
    CHECK(e.point() == std::vector<Integer>{5});
    CHECK(e.cap() == 5);
  }
}

TEST_CASE("randomized engine suites (small)") {
  for (const char* name : {"h0_components_cross_check", "kmin_monotone",
                           "certificate_sound", "h0_idempotent"}) {
    auto result = run_oracle_suite(name, 17, 60);
    INFO(name << ": " << result.counterexample);
    CHECK(result.failures == 0);
  }
}
